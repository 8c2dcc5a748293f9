"""Truncated Taylor series ("jets") with arbitrary-precision coefficients.

A jet of order ``n`` about a point ``x0`` stores the Taylor coefficients
``c[k] = f^(k)(x0) / k!`` for ``k = 0..n``. Ring operations are exact up to the
truncation order, which is what the determinant and curve code rely on to get
high-order derivatives without finite differences.
"""

from __future__ import annotations

from numbers import Number


class TaylorJet:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a jet needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, order, mp):
        return cls([mp.mpf(value)] + [mp.zero] * order)

    @classmethod
    def variable(cls, x0, order, mp):
        """The identity function ``x0 + h``."""
        c = [mp.zero] * (order + 1)
        c[0] = mp.mpf(x0)
        if order >= 1:
            c[1] = mp.one
        return cls(c)

    def __repr__(self):
        return f"TaylorJet(order={self.order}, coeffs={self.coeffs!r})"

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    @property
    def value(self):
        return self.coeffs[0]

    def derivative_value(self, k):
        """k-th derivative at the expansion point."""
        c = self.coeffs[k]
        for j in range(2, k + 1):
            c = c * j
        return c

    def truncate(self, order):
        return TaylorJet(self.coeffs[: order + 1])

    def derivative(self):
        """Jet of f' (one order lower)."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        return TaylorJet([(k + 1) * c for k, c in enumerate(self.coeffs[1:])])

    def _coerce(self, other):
        if isinstance(other, TaylorJet):
            n = min(self.order, other.order)
            return self.coeffs[: n + 1], other.coeffs[: n + 1]
        if isinstance(other, Number) or hasattr(other, "_mpf_"):
            oc = [other] + [0] * self.order
            return self.coeffs, oc
        return NotImplemented

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return TaylorJet([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return TaylorJet([-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return TaylorJet([x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TaylorJet):
            return TaylorJet([c * other for c in self.coeffs])
        a, b = self._coerce(other)
        n = len(a)
        return TaylorJet([sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)])

    __rmul__ = __mul__

    def reciprocal(self):
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("jet with zero constant term has no reciprocal")
        r = [1 / a[0]]
        for k in range(1, len(a)):
            s = sum(a[i] * r[k - i] for i in range(1, k + 1))
            r.append(-s * r[0])
        return TaylorJet(r)

    def __truediv__(self, other):
        if not isinstance(other, TaylorJet):
            return TaylorJet([c / other for c in self.coeffs])
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = TaylorJet([1] + [0] * self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exp(self, mp):
        """exp of a jet, via y' = u' y."""
        u = self.coeffs
        y = [mp.exp(u[0])]
        for n in range(1, len(u)):
            y.append(sum(k * u[k] * y[n - k] for k in range(1, n + 1)) / n)
        return TaylorJet(y)

    def scale_argument(self, s):
        """Jet of h -> f(x0 + s*h) from the jet of f at x0."""
        out, p = [], 1
        for c in self.coeffs:
            out.append(c * p)
            p = p * s
        return TaylorJet(out)


def coth_jet(x0, order, mp, scale=1):
    """Jet of ``h -> coth(x0 + scale*h)``.

    Uses y' = scale*(1 - y^2), which yields every coefficient from a
    convolution of the previous ones.
    """
    x0 = mp.mpf(x0)
    if x0 == 0:
        raise ZeroDivisionError("coth pole at 0")
    y = [mp.coth(x0)]
    for n in range(order):
        s = sum(y[k] * y[n - k] for k in range(n + 1))
        rhs = (1 if n == 0 else 0) - s
        y.append(scale * rhs / (n + 1))
    return TaylorJet(y)


def cot_jet(x0, order, mp, scale=1):
    """Jet of ``h -> cot(x0 + scale*h)`` via y' = -scale*(1 + y^2)."""
    x0 = mp.mpf(x0)
    y0 = mp.cot(x0)
    y = [y0]
    for n in range(order):
        s = sum(y[k] * y[n - k] for k in range(n + 1))
        rhs = (1 if n == 0 else 0) + s
        y.append(-scale * rhs / (n + 1))
    return TaylorJet(y)


def sin_cos_jets(x0, order, mp, scale=1):
    """Jets of sin and cos of ``x0 + scale*h`` from the closed form."""
    s0, c0 = mp.sin(x0), mp.cos(x0)
    cycle = (s0, c0, -s0, -c0)
    sj, cj = [], []
    p = mp.one
    fact = mp.one
    for k in range(order + 1):
        if k:
            p *= scale
            fact *= k
        sj.append(cycle[k % 4] * p / fact)
        cj.append(cycle[(k + 1) % 4] * p / fact)
    return TaylorJet(sj), TaylorJet(cj)
