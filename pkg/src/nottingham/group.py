"""The Nottingham group over F_p at finite truncation.

Elements are power series of the form t + (order >= 2 terms), i.e.
automorphisms of F_p[[t]] that agree with the identity modulo t^2,
represented modulo t^(N+1).  The group law is composition, so everything
here happens in the finite quotient by the congruence subgroup of depth N.

Depth measures position in the congruence filtration: an element f != id
has depth d when f(t) - t has valuation d + 1.  The identity gets the
distinguished depth INFINITE_DEPTH so callers can branch on it.
"""

import math

from .errors import BadPrecision, NotCoprime, NotNormalized, ZeroParameter
from .field import FieldElement, check_prime
from .series import Series

INFINITE_DEPTH = math.inf


class GroupElement:
    """A series t + (higher order), under composition."""

    __slots__ = ("series",)

    def __init__(self, series):
        if not isinstance(series, Series):
            raise TypeError(f"expected a Series, got {type(series).__name__}")
        if series.trunc < 1 or series[0] != 0 or series[1] != 1:
            raise NotNormalized("group elements are series t + (order >= 2 terms)")
        self.series = series

    @classmethod
    def identity(cls, p, trunc):
        if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 1:
            raise BadPrecision(f"identity needs truncation order >= 1, got {trunc!r}")
        return cls(Series.gen(p, trunc))

    @property
    def p(self):
        return self.series.p

    @property
    def trunc(self):
        return self.series.trunc

    def __mul__(self, other):
        """Group law: (f*g)(t) = f(g(t))."""
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.series.compose(other.series))

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers: use inverse() first")
        out = GroupElement.identity(self.p, self.trunc)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self):
        """The compositional inverse, again a group element."""
        return GroupElement(self.series.reversion())

    def depth(self):
        """Largest d with f(t) = t mod t^(d+1); INFINITE_DEPTH for the identity."""
        v = (self.series - Series.gen(self.p, self.trunc)).valuation()
        if v > self.trunc:
            return INFINITE_DEPTH
        return v - 1

    def is_identity(self):
        return self.depth() is INFINITE_DEPTH

    def truncate(self, new_trunc):
        return GroupElement(self.series.truncate(new_trunc))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.series == other.series

    def __hash__(self):
        return hash(("group", self.series))

    def __repr__(self):
        return f"GroupElement({self.series!r})"


def identity(p, trunc):
    return GroupElement.identity(p, trunc)


def order_mod_truncation(f, cap=None):
    """Least p-power k <= cap with f^k = id mod t^(N+1), or None.

    Only powers p^j are tried: finite-order elements of a pro-p group have
    p-power order.  The value is the order in the finite quotient group at
    precision N; the true order in the full group is at least this value
    and can be strictly larger (it is monotone as N grows).
    """
    if not isinstance(f, GroupElement):
        raise TypeError(f"expected a GroupElement, got {type(f).__name__}")
    if cap is None:
        cap = f.p ** 6
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
        raise ValueError(f"cap must be a positive int, got {cap!r}")
    k = 1
    g = f
    ident = GroupElement.identity(f.p, f.trunc)
    while k <= cap:
        if g == ident:
            return k
        k *= f.p
        if k <= cap:
            g = g ** f.p
    return None


def klopsch_rep(p, m, a, trunc):
    """The order-p element t * (1 - a*t^m)^(-1/m), for gcd(m, p) = 1, a != 0.

    One representative per conjugacy class of order-p elements, indexed by
    the depth m (prime to p) and the parameter a in F_p*.  The exponent
    -1/m is realized operationally: invert the unit 1 - a*t^m, then take
    its m-th root.  The leading correction is (a/m) * t^(m+1), so the depth
    is exactly m, and the p-th compositional power is the identity.
    """
    check_prime(p)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"depth index must be a positive int, got {m!r}")
    if m % p == 0:
        raise NotCoprime(f"depth index {m} is divisible by p = {p}")
    a_val = int(a) % p if not isinstance(a, FieldElement) else a.value
    if isinstance(a, FieldElement) and a.p != p:
        raise ValueError(f"parameter lives in F_{a.p}, expected F_{p}")
    if a_val == 0:
        raise ZeroParameter("parameter a must be a nonzero field element")
    if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < m + 1:
        raise BadPrecision(f"need truncation order >= {m + 1} to see depth {m}")
    base = Series.from_terms(p, trunc, {0: 1, m: -a_val})
    unit = base.reciprocal().nth_root(m)
    return GroupElement(Series.gen(p, trunc) * unit)
