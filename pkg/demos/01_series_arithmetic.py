#!/usr/bin/env python3
# Tour of the truncated power series kernel: exact arithmetic in
# F_p[t]/(t^(N+1)) with canonical integer coefficients.

from nottingham.series import Series

print("== ring operations over F_2, N = 16 ==")
t = Series.gen(2, 16)
f = 1 + t
print("f          =", f)
print("f*f        =", f * f, "   (squaring doubles exponents in char 2)")
print("1/f        =", f.reciprocal(), "  (geometric series)")
print("f * 1/f    =", f * f.reciprocal())

print()
print("== the same over F_3 ==")
g = 1 + Series.gen(3, 8)
print("1/(1+t)    =", g.reciprocal(), "  (alternating signs: 2 = -1 mod 3)")

print()
print("== composition and its inverse ==")
a = Series.from_terms(2, 16, {1: 1, 2: 1})          # t + t^2
b = Series.from_terms(2, 16, {1: 1, 3: 1})          # t + t^3
print("a(b)       =", a.compose(b))
inv = a.reversion()
print("a^(-1)     =", inv)
print("a(a^(-1))  =", a.compose(inv), " (back to t)")

print()
print("== roots in characteristic p ==")
rhs = Series.from_terms(2, 32, {3: 1, 4: 1})        # t^3 + t^4
s = rhs.artin_schreier_root()
print("s with s^2 + s = t^3 + t^4:")
print("  s        =", s)
print("  check    =", s * s + s)

u = (1 + Series.from_terms(2, 12, {3: 1})).reciprocal().nth_root(3)
print("cube root of 1/(1+t^3):")
print("  u        =", u)
print("  u^3*(1+t^3) =", u ** 3 * (1 + Series.from_terms(2, 12, {3: 1})))

print()
print("== precision is explicit ==")
h = Series.from_terms(2, 6, {1: 1, 2: 1, 5: 1})
print("h          =", h)
print("h mod t^3  =", h.truncate(2))
print("text form:")
print(h.to_text(), end="")
print("round-trips:", Series.from_text(h.to_text()) == h)
