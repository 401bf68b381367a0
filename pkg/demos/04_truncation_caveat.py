#!/usr/bin/env python3
# The order in the truncated group is only a lower bound for the order in
# the full group, and it can grow as the precision grows.  The element
# t + t^2 makes the jump visible: its 2-power iterates are
#
#     f^2 = t + t^4,   f^4 = t + t^16,   f^8 = t + t^256,  ...
#
# (squaring t + t^(2^a) doubles a), so what looks like order 8 at modest
# precision becomes order 16 once N reaches 256, and never stabilizes:
# the element has infinite order in the full group.

from nottingham import GroupElement, order_mod_truncation, sigma_closed
from nottingham.series import Series

print("== apparent order of t + t^2 as precision grows ==")
for n in (4, 16, 64, 255, 256, 1024):
    f = GroupElement(Series.from_terms(2, n, {1: 1, 2: 1}))
    print(f"N = {n:>4}: order mod t^(N+1) = {order_mod_truncation(f, 2**14)}")

print()
print("== iterates confirm the pattern ==")
f = Series.from_terms(2, 300, {1: 1, 2: 1})
g = f
for k in (2, 4, 8):
    g = g.compose(g) if k > 2 else f.compose(f)
    print(f"f^{k} =", g)

print()
print("== contrast: a genuinely finite-order element is stable ==")
sigma = sigma_closed(4096)
for n in (4, 64, 1024, 4096):
    g = sigma.truncate(n) if n < 4096 else sigma
    print(f"N = {n:>4}: order of the order-4 element = {order_mod_truncation(g)}")
print("(the value at a smaller precision always divides the value at a larger one)")
