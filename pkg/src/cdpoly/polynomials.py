"""Polynomials over a Cayley-Dickson algebra with left coefficients.

The indeterminate is central, so every polynomial has the normal form
a_n x^n + ... + a_1 x + a_0 with all coefficients on the left.  Coefficient
lists are dense and stored lowest power first; trailing zeros are trimmed so
the degree is canonical.  The zero polynomial has an empty coefficient list
and degree -inf.

``CentralPolynomial`` is the same thing with scalar coefficients (a member
of F[x]); the companion polynomial conj(f) * f always lands there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import DEFAULT_TOL, CDElement, CDParams, QuadraticClass, Scalar
from .errors import NonCentralResult, ParamsMismatch

NEG_INF = float("-inf")


@dataclass(frozen=True)
class CentralPolynomial:
    """A polynomial with scalar (central) coefficients, lowest power first."""

    coeffs: tuple

    @staticmethod
    def make(coeffs: Sequence) -> "CentralPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return CentralPolynomial(tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __add__(self, other: "CentralPolynomial") -> "CentralPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CentralPolynomial.make(out)

    def __neg__(self) -> "CentralPolynomial":
        return CentralPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CentralPolynomial") -> "CentralPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CentralPolynomial):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return CentralPolynomial(())
        out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * d
        return CentralPolynomial.make(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "CentralPolynomial":
        out = CentralPolynomial((self.coeffs[0] * 0 + 1,)) if self.coeffs else CentralPolynomial.make([1])
        for _ in range(n):
            out = out * self
        return out

    def scale(self, s) -> "CentralPolynomial":
        return CentralPolynomial.make(tuple(c * s for c in self.coeffs))

    def derivative(self) -> "CentralPolynomial":
        return CentralPolynomial.make(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def evaluate(self, z):
        """Horner evaluation; z may be a scalar or a complex number."""
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + (float(c) if isinstance(z, complex) else c)
        return acc

    def as_floats(self) -> list:
        return [float(c) for c in self.coeffs]

    def embed(self, params: CDParams) -> "CDPolynomial":
        """View this central polynomial as an element of A[x]."""
        return CDPolynomial.make(params, [params.from_scalar(c) for c in self.coeffs])


def central_from_class(q: QuadraticClass) -> CentralPolynomial:
    """The monic quadratic x^2 - T x + N named by a class."""
    return CentralPolynomial.make([q.N, -q.T, q.N * 0 + 1])


@dataclass(frozen=True)
class CDPolynomial:
    """Dense polynomial in A[x], left coefficients, lowest power first."""

    params: CDParams
    coeffs: tuple  # of CDElement, trailing zeros trimmed

    @staticmethod
    def make(params: CDParams, coeffs: Sequence[CDElement]) -> "CDPolynomial":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return CDPolynomial(params, tuple(cs))

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(params: CDParams) -> "CDPolynomial":
        return CDPolynomial(params, ())

    @staticmethod
    def x(params: CDParams) -> "CDPolynomial":
        return CDPolynomial.make(params, [params.zero(), params.one()])

    @staticmethod
    def constant(value: CDElement) -> "CDPolynomial":
        return CDPolynomial.make(value.params, [value])

    @staticmethod
    def from_scalars(params: CDParams, scalars: Sequence) -> "CDPolynomial":
        return CDPolynomial.make(params, [params.from_scalar(s) for s in scalars])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coefficient(self, k: int) -> CDElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.params.zero()

    def leading(self) -> CDElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self, tol: float = 0.0) -> bool:
        return bool(self.coeffs) and self.leading().close_to(self.params.one(), tol)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(c.is_zero(tol) for c in self.coeffs)

    def is_central(self, tol: float = 0.0) -> bool:
        return all(c.is_scalar(tol) for c in self.coeffs)

    def close_to(self, other: "CDPolynomial", tol: float = DEFAULT_TOL) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(k).close_to(other.coefficient(k), tol) for k in range(n))

    def coefficient_scale(self) -> float:
        """Largest absolute coefficient entry; 0.0 for the zero polynomial."""
        best = 0.0
        for c in self.coeffs:
            for v in c.coeffs:
                a = abs(float(v))
                if a > best:
                    best = a
        return best

    def _check(self, other: "CDPolynomial"):
        if self.params != other.params:
            raise ParamsMismatch("polynomials live in different algebras")

    def _wrap(self, other) -> "CDPolynomial":
        if isinstance(other, CDPolynomial):
            return other
        if isinstance(other, CDElement):
            return CDPolynomial.constant(other)
        return CDPolynomial.constant(self.params.from_scalar(other))

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return CDPolynomial.make(self.params,
                                 [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return CDPolynomial(self.params, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return CDPolynomial.zero(self.params)
        out = [self.params.zero() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for j, d in enumerate(other.coeffs):
                if d.is_zero():
                    continue
                out[i + j] = out[i + j] + c * d
        return CDPolynomial.make(self.params, out)

    def __rmul__(self, other):
        # left scale: c * f multiplies every coefficient by c on the left
        return self._wrap(other) * self

    def __pow__(self, n: int) -> "CDPolynomial":
        out = CDPolynomial.constant(self.params.one())
        for _ in range(n):
            out = out * self
        return out

    def scale_left(self, c: CDElement) -> "CDPolynomial":
        return CDPolynomial.make(self.params, [c * a for a in self.coeffs])

    def conj(self) -> "CDPolynomial":
        """Coefficientwise involution; the indeterminate is fixed."""
        return CDPolynomial(self.params, tuple(c.conj() for c in self.coeffs))

    def derivative(self) -> "CDPolynomial":
        return CDPolynomial.make(self.params,
                                 [k * c for k, c in enumerate(self.coeffs) if k >= 1])

    def evaluate(self, point) -> CDElement:
        """Substitute an element: f(p) = sum a_k * p^k (powers first, then left factor).

        Powers are unambiguous by power-associativity.  The zero polynomial
        evaluates to 0 (empty sum).
        """
        if isinstance(point, CDElement):
            self._check(CDPolynomial.constant(point))
        else:
            point = self.params.from_scalar(point)
        acc = self.params.zero()
        power = self.params.one()
        for k, c in enumerate(self.coeffs):
            if k:
                power = power * point
            if not c.is_zero():
                acc = acc + c * power
        return acc

    def companion(self, tol: float = DEFAULT_TOL) -> CentralPolynomial:
        """The norm conj(f) * f, demoted to scalar coefficients.

        The product is central for every algebra and every f; we verify that
        instead of assuming it so an arithmetic bug turns into a loud
        NonCentralResult rather than a silent wrong answer.
        """
        prod = self.conj() * self
        band = 0.0 if self.params.is_exact else tol * max(1.0, prod.coefficient_scale())
        out = []
        for c in prod.coeffs:
            if not c.is_scalar(band):
                raise NonCentralResult(f"companion coefficient {c!r} is not scalar")
            out.append(c.scalar_part())
        return CentralPolynomial.make(out)

    def divrem_quadratic(self, q: QuadraticClass):
        """Division with remainder by the central monic quadratic x^2 - T x + N.

        Returns (g, a, b) with f = g * (x^2 - T x + N) + a x + b, identically.
        The divisor is central and monic so the classical synthetic rule
        x^2 -> T x - N applies top-down and the identity is exact.
        """
        T = self.params.coerce(q.T)
        N = self.params.coerce(q.N)
        work = list(self.coeffs)
        deg = len(work) - 1
        if deg < 1:
            a = self.params.zero()
            b = work[0] if work else self.params.zero()
            return CDPolynomial.zero(self.params), a, b
        quot = [self.params.zero()] * max(0, deg - 1)
        for k in range(deg, 1, -1):
            c = work[k]
            quot[k - 2] = c
            work[k - 1] = work[k - 1] + T * c
            work[k - 2] = work[k - 2] - N * c
        return CDPolynomial.make(self.params, quot), work[1], work[0]

    def shift_down(self, k: int) -> "CDPolynomial":
        """Divide by x^k (assumes the k lowest coefficients are zero)."""
        return CDPolynomial.make(self.params, self.coeffs[k:])

    def scalar_coefficients(self):
        """Return the scalar parts if every coefficient is scalar, else None."""
        if not self.is_central():
            return None
        return CentralPolynomial.make([c.scalar_part() for c in self.coeffs])

    def as_float_poly(self) -> "CDPolynomial":
        if not self.params.is_exact:
            return self
        from .algebra import make_params, FLOAT64, GAMMA_FORM

        p = self.params
        fp = make_params(p.form, mu=p.mu if p.mu is None else float(p.mu),
                         gammas=[float(g) for g in p.gammas], level=p.level, scalar=FLOAT64)
        return CDPolynomial.make(fp, [fp.element(c.as_floats()) for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "CDPolynomial(0)"
        terms = [f"({c!r})x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return "CDPolynomial(" + " + ".join(terms) + ")"
