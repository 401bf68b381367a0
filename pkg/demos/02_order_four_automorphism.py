#!/usr/bin/env python3
# The order-4 automorphism of F_2[[t]]: three constructions of the same
# series, its ramification data, and the identity suite that certifies it.

from nottingham import (
    identity,
    relation_root,
    schreier_root,
    sigma_algebraic,
    sigma_closed,
    sigma_relation,
    sigma_support,
    verify_all,
)

N = 62
print(f"== closed form at N = {N} ==")
print("support:", sigma_support(N))
sigma = sigma_closed(N)
print("series :", sigma.series)

print()
print("== the two series behind the arithmetic routes ==")
s = schreier_root(20)
w = relation_root(20)
print("s  (s^2 + s = t^3 + t^4)      :", s)
print("w  (w + (1+t)w^2 + t^3 = 0)   :", w)

print()
print("== three routes, one element ==")
print("closed    == algebraic:", sigma_closed(N) == sigma_algebraic(N))
print("closed    == relation :", sigma_closed(N) == sigma_relation(N))

print()
print("== order and depth ==")
ident = identity(2, N)
powers = {1: sigma}
powers[2] = sigma * sigma
powers[4] = powers[2] * powers[2]
for k in (1, 2, 4):
    g = powers[k]
    print(f"sigma^{k}: depth {g.depth()!s:>3}, identity: {g == ident}")
print("(depths 1 and 3 are the ramification breaks of the cyclic 4-action)")

print()
print("== certificate at N = 1024 ==")
report = verify_all(1024)
print(report.render(), end="")
print("all passed:", report.passed)
