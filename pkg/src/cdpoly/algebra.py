"""Arithmetic in Cayley-Dickson algebras of arbitrary level.

An algebra of level n has dimension 2^n over its ground field and is built
by repeated doubling: pairs (a, b) multiply by

    (a, b) (c, d) = (a c + gamma * conj(d) b,  d a + b conj(c))

and conjugate by (a, b) -> (conj(a), -b).  Two construction forms are
supported:

* ``gamma`` form: the chain starts at the ground field itself with
  parameters gamma_0, ..., gamma_{n-1} and the anticommuting basis
  e_0, ..., e_{2^n - 1}.  The real main sequence (C, H, O, S, ...) is
  gamma form with every parameter equal to -1.
* ``mu`` form: the chain starts at the quadratic etale extension
  F[l_1 : l_1^2 = l_1 + mu] with parameters gamma_1, ..., gamma_{n-1}
  and basis l_0, ..., l_{2^n - 1}.  This form is valid in any
  characteristic; we ship it for exact rational work.

Two scalar backends are available: exact rationals (``fractions.Fraction``)
and 64-bit floats.  Exact-mode predicates are decidable; float-mode
predicates take an explicit tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    BadLength,
    DegenerateMu,
    NotInvertible,
    NotLocallyComplex,
    ParamsMismatch,
    ZeroGamma,
)

Scalar = Union[Fraction, float]

MU_FORM = "mu"
GAMMA_FORM = "gamma"
RATIONAL = "rational"
FLOAT64 = "float64"

DEFAULT_TOL = 1e-9


def _coerce_scalar(value, kind: str) -> Scalar:
    """Coerce ``value`` into the given scalar backend.

    Rational mode accepts ints, Fractions and strings like "3/2"; floats are
    rejected so that inexact data never silently enters an exact computation.
    Float mode accepts any real number or rational string.
    """
    if kind == RATIONAL:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"exact mode cannot accept {type(value).__name__}; pass int, Fraction or 'p/q' string")
    if kind == FLOAT64:
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)
    raise ValueError(f"unknown scalar backend {kind!r}")


@dataclass(frozen=True)
class CDParams:
    """Construction data for one Cayley-Dickson algebra.

    ``gammas`` holds gamma_0..gamma_{n-1} in gamma form, gamma_1..gamma_{n-1}
    in mu form.  ``block_weights`` are the weights nu_k making the norm
    decompose over coefficient pairs (2k, 2k+1):

        norm(x) = sum_k nu_k * norm_1(x_{2k} + x_{2k+1} * b1)

    with norm_1 the level-1 norm and nu_k the product of -gamma_l over the
    binary digits of k (digit l of k selects gamma_l, l >= 1).
    """

    form: str
    level: int
    gammas: tuple
    mu: Scalar | None
    scalar: str
    block_weights: tuple

    @property
    def dim(self) -> int:
        return 1 << self.level

    @property
    def is_exact(self) -> bool:
        return self.scalar == RATIONAL

    @property
    def is_locally_complex(self) -> bool:
        """True for the real main sequence: gamma form with all parameters -1."""
        return self.form == GAMMA_FORM and all(g == -1 for g in self.gammas)

    @property
    def is_division_algebra(self) -> bool:
        """True for the locally-complex algebras up to the octonions."""
        return self.is_locally_complex and self.level <= 3

    def coerce(self, value) -> Scalar:
        return _coerce_scalar(value, self.scalar)

    def gamma_for_level(self, k: int) -> Scalar:
        """Doubling parameter used to build A_k from A_{k-1}."""
        if self.form == GAMMA_FORM:
            return self.gammas[k - 1]
        return self.gammas[k - 2]  # mu form: gammas holds gamma_1..gamma_{n-1}

    # -- element factories -------------------------------------------------

    def zero_scalar(self) -> Scalar:
        return Fraction(0) if self.is_exact else 0.0

    def one_scalar(self) -> Scalar:
        return Fraction(1) if self.is_exact else 1.0

    def element(self, coeffs: Sequence) -> "CDElement":
        coeffs = tuple(self.coerce(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise BadLength(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return CDElement(self, coeffs)

    def zero(self) -> "CDElement":
        return CDElement(self, (self.zero_scalar(),) * self.dim)

    def one(self) -> "CDElement":
        return self.from_scalar(1)

    def from_scalar(self, value) -> "CDElement":
        c = [self.zero_scalar()] * self.dim
        c[0] = self.coerce(value)
        return CDElement(self, tuple(c))

    def basis(self, m: int) -> "CDElement":
        if not 0 <= m < self.dim:
            raise BadLength(f"basis index {m} out of range [0, {self.dim})")
        c = [self.zero_scalar()] * self.dim
        c[m] = self.one_scalar()
        return CDElement(self, tuple(c))

    def basis_elements(self):
        return [self.basis(m) for m in range(self.dim)]


def make_params(form: str, mu=None, gammas: Sequence = (), level: int | None = None,
                scalar: str = RATIONAL) -> CDParams:
    """Validate construction data and precompute the norm block weights.

    Raises ZeroGamma for a vanishing doubling parameter, DegenerateMu when
    4*mu + 1 = 0, and BadLength when the gamma list does not match the level.
    """
    if form not in (MU_FORM, GAMMA_FORM):
        raise ValueError(f"form must be {MU_FORM!r} or {GAMMA_FORM!r}, got {form!r}")
    if scalar not in (RATIONAL, FLOAT64):
        raise ValueError(f"scalar must be {RATIONAL!r} or {FLOAT64!r}, got {scalar!r}")
    if level is None:
        level = len(gammas) if form == GAMMA_FORM else len(gammas) + 1
    if level < 1:
        raise BadLength("level must be >= 1")

    gam = tuple(_coerce_scalar(g, scalar) for g in gammas)
    expected = level if form == GAMMA_FORM else level - 1
    if len(gam) != expected:
        raise BadLength(f"{form} form at level {level} needs {expected} gammas, got {len(gam)}")
    if any(g == 0 for g in gam):
        raise ZeroGamma("every doubling parameter must be nonzero")

    if form == MU_FORM:
        if mu is None:
            raise DegenerateMu("mu form requires a mu parameter")
        mu_s = _coerce_scalar(mu, scalar)
        if 4 * mu_s + 1 == 0:
            raise DegenerateMu("4*mu + 1 must be nonzero")
    else:
        mu_s = None

    # nu_k = prod over set binary digits c_l of k (l >= 1) of (-gamma_l).
    # The doubling step subtracts gamma * norm(upper half), hence the sign.
    half = 1 << (level - 1)
    upper = gam if form == MU_FORM else gam[1:]
    weights = []
    one = _coerce_scalar(1, scalar)
    for k in range(half):
        w = one
        for l, g in enumerate(upper):
            if (k >> l) & 1:
                w = w * (-g)
        weights.append(w)
    return CDParams(form=form, level=level, gammas=gam, mu=mu_s, scalar=scalar,
                    block_weights=tuple(weights))


# -- coefficient-vector kernels (lists of scalars, recursion on halves) ----

def _vec_is_zero(x) -> bool:
    return not any(x)


def _conj_vec(x, params: CDParams, level: int):
    if level == 0:
        return list(x)
    if level == 1 and params.form == MU_FORM:
        a, b = x
        return [a + b, -b]
    h = 1 << (level - 1)
    out = _conj_vec(x[:h], params, level - 1)
    out.extend(-v for v in x[h:])
    return out


def _mul_vec(x, y, params: CDParams, level: int):
    if level == 0:
        return [x[0] * y[0]]
    if level == 1 and params.form == MU_FORM:
        a, b = x
        c, d = y
        # (a + b l)(c + d l) with l^2 = l + mu
        return [a * c + params.mu * b * d, a * d + b * c + b * d]
    g = params.gamma_for_level(level)
    h = 1 << (level - 1)
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    a0, b0, c0, d0 = map(_vec_is_zero, (a, b, c, d))
    zero = [x[0] * 0] * h

    def mul(u, v, uz, vz):
        if uz or vz:
            return zero[:]
        return _mul_vec(u, v, params, level - 1)

    ac = mul(a, c, a0, c0)
    if b0 or d0:
        left = ac
    else:
        db_b = _mul_vec(_conj_vec(d, params, level - 1), b, params, level - 1)
        left = [p + g * q for p, q in zip(ac, db_b)]
    da = mul(d, a, d0, a0)
    if b0 or c0:
        right = da
    else:
        b_cb = _mul_vec(b, _conj_vec(c, params, level - 1), params, level - 1)
        right = [p + q for p, q in zip(da, b_cb)]
    return left + right


def _norm_vec(x, params: CDParams, level: int):
    if level == 0:
        return x[0] * x[0]
    if level == 1 and params.form == MU_FORM:
        a, b = x
        return a * a + a * b - params.mu * b * b
    g = params.gamma_for_level(level)
    h = 1 << (level - 1)
    return _norm_vec(x[:h], params, level - 1) - g * _norm_vec(x[h:], params, level - 1)


@dataclass(frozen=True)
class QuadraticClass:
    """A monic central quadratic x^2 - T x + N, named by trace and norm.

    Every element of the algebra satisfies its own characteristic quadratic;
    a class with negative discriminant over the reals contains no scalars.
    """

    T: Scalar
    N: Scalar

    @property
    def discriminant(self) -> Scalar:
        return self.T * self.T - 4 * self.N

    def is_nonreal(self, tol: float = 0.0) -> bool:
        """Discriminant strictly negative (no real/scalar points on the class)."""
        return self.discriminant < -abs(tol)

    def imaginary_radius(self) -> float:
        """Radius |Im| of the class sphere: sqrt(N - T^2/4).  Requires disc <= 0."""
        return math.sqrt(max(0.0, float(self.N) - float(self.T) ** 2 / 4.0))

    def real_center(self) -> float:
        return float(self.T) / 2.0


@dataclass(frozen=True)
class CDElement:
    """One element of a Cayley-Dickson algebra as a dense coefficient vector.

    Index 0 is the unit coefficient; the vector follows the standard basis of
    the construction form.  Values are immutable; all operations return new
    elements.
    """

    params: CDParams
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.params.dim:
            raise BadLength(f"expected {self.params.dim} coefficients, got {len(self.coeffs)}")

    def _check(self, other: "CDElement"):
        if self.params != other.params:
            raise ParamsMismatch("operands live in different algebras")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CDElement):
            try:
                other = self.params.from_scalar(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        return CDElement(self.params, tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, CDElement):
            try:
                other = self.params.from_scalar(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        return CDElement(self.params, tuple(p - q for p, q in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.params.from_scalar(other) - self

    def __neg__(self):
        return CDElement(self.params, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CDElement):
            self._check(other)
            return CDElement(self.params, tuple(_mul_vec(list(self.coeffs), list(other.coeffs),
                                                         self.params, self.params.level)))
        try:
            s = self.params.coerce(other)
        except TypeError:
            return NotImplemented
        return CDElement(self.params, tuple(c * s for c in self.coeffs))

    def __rmul__(self, other):
        # scalar * element; scalars are central so the order is immaterial
        s = self.params.coerce(other)
        return CDElement(self.params, tuple(s * c for c in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: use inverse() explicitly")
        out = self.params.one()
        for _ in range(n):
            out = out * self  # power-associativity makes any order agree
        return out

    # -- involution, trace, norm -------------------------------------------

    def conj(self) -> "CDElement":
        return CDElement(self.params, tuple(_conj_vec(list(self.coeffs), self.params, self.params.level)))

    def trace(self) -> Scalar:
        if self.params.form == MU_FORM:
            return 2 * self.coeffs[0] + self.coeffs[1]
        return 2 * self.coeffs[0]

    def norm(self) -> Scalar:
        return _norm_vec(list(self.coeffs), self.params, self.params.level)

    def char_poly(self) -> QuadraticClass:
        return QuadraticClass(self.trace(), self.norm())

    def inner(self, other: "CDElement") -> Scalar:
        """Symmetric bilinear form of the norm: <a, b> = (N(a+b) - N(a) - N(b)) / 2."""
        self._check(other)
        s = (self + other).norm() - self.norm() - other.norm()
        if self.params.is_exact:
            return s / 2
        return s / 2.0

    def inverse(self, tol: float = DEFAULT_TOL) -> "CDElement":
        n = self.norm()
        if self.params.is_exact:
            if n == 0:
                raise NotInvertible("element has norm 0")
            return self.conj() * (Fraction(1) / n)
        if abs(n) <= tol:
            raise NotInvertible(f"norm {n} within tolerance of 0")
        return self.conj() * (1.0 / n)

    # -- predicates ----------------------------------------------------------

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.params.is_exact:
            return all(c == 0 for c in self.coeffs)
        return all(abs(c) <= tol for c in self.coeffs)

    def is_scalar(self, tol: float = 0.0) -> bool:
        if self.params.is_exact:
            return all(c == 0 for c in self.coeffs[1:])
        return all(abs(c) <= tol for c in self.coeffs[1:])

    def scalar_part(self) -> Scalar:
        return self.coeffs[0]

    def close_to(self, other: "CDElement", tol: float = DEFAULT_TOL) -> bool:
        self._check(other)
        if self.params.is_exact:
            return self.coeffs == other.coeffs
        return all(abs(p - q) <= tol for p, q in zip(self.coeffs, other.coeffs))

    def quadratically_equivalent(self, other: "CDElement", tol: float = DEFAULT_TOL) -> bool:
        """Equal trace and norm, i.e. the same characteristic quadratic."""
        self._check(other)
        if self.params.is_exact:
            return self.trace() == other.trace() and self.norm() == other.norm()
        return (abs(self.trace() - other.trace()) <= tol
                and abs(self.norm() - other.norm()) <= tol)

    def is_alternative(self, tol: float = 0.0) -> bool:
        """Whether a(ab) = (aa)b and (ba)a = b(aa) hold for every b.

        Both identities are linear in b, so probing b over the standard basis
        decides them exactly.
        """
        sq = self * self
        for b in self.params.basis_elements():
            if not (self * (self * b)).close_to(sq * b, tol):
                return False
            if not ((b * self) * self).close_to(b * sq, tol):
                return False
        return True

    # -- locally-complex structure -------------------------------------------

    def _require_locally_complex(self):
        if not self.params.is_locally_complex:
            raise NotLocallyComplex("operation needs the real main sequence (all gammas -1)")

    def real_part(self) -> Scalar:
        """Scalar coefficient of the decomposition a = Re(a) * 1 + Im(a)."""
        self._require_locally_complex()
        t = self.trace()
        return t / 2 if self.params.is_exact else t / 2.0

    def imag_part(self) -> "CDElement":
        self._require_locally_complex()
        return self - self.params.from_scalar(self.real_part())

    def abs_value(self) -> float:
        """Euclidean absolute value sqrt(norm); always a float."""
        self._require_locally_complex()
        return math.sqrt(float(self.norm()))

    # -- misc ------------------------------------------------------------------

    def as_floats(self) -> tuple:
        return tuple(float(c) for c in self.coeffs)

    def __repr__(self):
        terms = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if m == 0:
                terms.append(f"{c}")
            else:
                prefix = "e" if self.params.form == GAMMA_FORM else "l"
                terms.append(f"{c}*{prefix}{m}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body}>"


def quadratically_equivalent(a: CDElement, b: CDElement, tol: float = DEFAULT_TOL) -> bool:
    return a.quadratically_equivalent(b, tol)


def main_sequence(level: int, scalar: str = RATIONAL) -> CDParams:
    """The locally-complex algebra of the given level: C, H, O, S, ..."""
    return make_params(GAMMA_FORM, gammas=[-1] * level, level=level, scalar=scalar)


def split_quaternions(scalar: str = RATIONAL) -> CDParams:
    """The split quaternions (-1, 1): isotropic norm, zero divisors, nilpotents."""
    return make_params(GAMMA_FORM, gammas=[-1, 1], level=2, scalar=scalar)
