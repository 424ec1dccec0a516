"""Sparse exact polynomial arithmetic in the formal variables u, v.

Two representations cover every invariant in the library:

* ``BivariateLaurent`` -- finitely supported map (pu, pv) -> int.  Holds
  E-polynomials and their stringy refinements, including intermediate
  Laurent expressions like S~(theta; u^-1 v) * u^dim(theta) / v whose
  negative exponents must cancel in final results.
* ``UnivariateInt`` -- integer coefficient list in one variable t.  Holds
  S- and S~-polynomials, which live on the uv-diagonal (t = uv).

Coefficients are plain Python ints; evaluation points are Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroAtNegativeExponent


class UnivariateInt:
    """Integer polynomial in one variable, stored densely from degree 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UnivariateInt) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariateInt({list(self.coeffs)})"

    @property
    def degree(self):
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariateInt([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariateInt([self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariateInt([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariateInt(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def reversed_in_degree(self, d):
        """t^d * p(1/t), i.e. the coefficient list reversed at length d+1."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds reversal degree {d}")
        return UnivariateInt([self[d - i] for i in range(d + 1)])

    def to_json(self):
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data):
        return cls(int(c) for c in data)


def binomial_poly(a, k):
    """(t + a)^k as a UnivariateInt; used for the (t - 1)^k census sums."""
    from math import comb

    return UnivariateInt([comb(k, i) * a ** (k - i) for i in range(k + 1)])


class BivariateLaurent:
    """Finitely supported Z-linear combination of monomials u^pu v^pv.

    Instances are immutable in practice: every operation returns a fresh
    object and the internal dict is never mutated after construction, so
    values may be shared and used as cache keys freely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for (pu, pv), c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    key = (pu, pv)
                    c0 = d.get(key, 0) + c
                    if c0:
                        d[key] = c0
                    elif key in d:
                        del d[key]
        self.terms = d

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, pu, pv, coeff=1):
        return cls({(pu, pv): coeff})

    @classmethod
    def from_int(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def from_uv_diagonal(cls, p: UnivariateInt):
        """Embed a polynomial in t along t = uv."""
        return cls({(i, i): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_uinv_v(cls, p: UnivariateInt):
        """Embed a polynomial in t along t = u^-1 v (mirror-side argument)."""
        return cls({(-i, i): c for i, c in enumerate(p.coeffs)})

    # -- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BivariateLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "BivariateLaurent(0)"
        bits = []
        for (pu, pv), c in sorted(self.terms.items()):
            bits.append(f"{c}*u^{pu}*v^{pv}")
        return "BivariateLaurent(" + " + ".join(bits) + ")"

    def __add__(self, other):
        d = dict(self.terms)
        for k, c in other.terms.items():
            c0 = d.get(k, 0) + c
            if c0:
                d[k] = c0
            elif k in d:
                del d[k]
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = d
        return out

    def __neg__(self):
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BivariateLaurent.zero()
            out = BivariateLaurent.__new__(BivariateLaurent)
            out.terms = {k: other * c for k, c in self.terms.items()}
            return out
        d = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                c0 = d.get(k, 0) + c1 * c2
                if c0:
                    d[k] = c0
                elif k in d:
                    del d[k]
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = BivariateLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, du, dv):
        """Multiply by the monomial u^du v^dv."""
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = {(a + du, b + dv): c for (a, b), c in self.terms.items()}
        return out

    # -- queries ---------------------------------------------------------

    def coeff(self, pu, pv):
        return self.terms.get((pu, pv), 0)

    def is_polynomial(self):
        return all(a >= 0 and b >= 0 for a, b in self.terms)

    def total(self):
        """Sum of all coefficients, i.e. the value at u = v = 1."""
        return sum(self.terms.values())

    def hodge_numbers(self):
        """Map (p, q) -> (-1)^(p+q) * coefficient, for polynomial values."""
        return {(p, q): (1 if (p + q) % 2 == 0 else -1) * c
                for (p, q), c in self.terms.items()}

    # -- transforms -------------------------------------------------------

    def mirror_transform(self, m):
        """(-u)^m * p(u^-1, v), exactly."""
        sign = -1 if m % 2 else 1
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = {(m - a, b): sign * c for (a, b), c in self.terms.items()}
        return out

    def poincare_transform(self, n):
        """(uv)^n * p(u^-1, v^-1), exactly."""
        out = BivariateLaurent.__new__(BivariateLaurent)
        out.terms = {(n - a, n - b): c for (a, b), c in self.terms.items()}
        return out

    def substitute_u1(self):
        """Collapse u = 1; returns the map pv -> coefficient as a dict."""
        d = {}
        for (a, b), c in self.terms.items():
            c0 = d.get(b, 0) + c
            if c0:
                d[b] = c0
            elif b in d:
                del d[b]
        return d

    def evaluate(self, u0, v0):
        """Exact value at rational (u0, v0).

        Raises ZeroAtNegativeExponent when a genuinely Laurent term is
        evaluated at zero.
        """
        u0 = Fraction(u0)
        v0 = Fraction(v0)
        acc = Fraction(0)
        for (a, b), c in self.terms.items():
            if (a < 0 and u0 == 0) or (b < 0 and v0 == 0):
                raise ZeroAtNegativeExponent(
                    f"term u^{a} v^{b} cannot be evaluated at zero")
            acc += c * u0 ** a * v0 ** b
        return acc

    # -- serialization ----------------------------------------------------

    def to_json(self):
        """Sorted [pu, pv, coeff] triples; the canonical wire format."""
        return [[a, b, c] for (a, b), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({(int(a), int(b)): int(c) for a, b, c in data})


def lp_arith(a: BivariateLaurent, b: BivariateLaurent, op: str) -> BivariateLaurent:
    """Dispatch wrapper kept for the documented add/sub/mul surface."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def mirror_transform(p: BivariateLaurent, m: int) -> BivariateLaurent:
    if m < 0:
        raise ValueError("mirror exponent must be nonnegative")
    return p.mirror_transform(m)


def lp_eval(p: BivariateLaurent, u0, v0) -> Fraction:
    return p.evaluate(u0, v0)
