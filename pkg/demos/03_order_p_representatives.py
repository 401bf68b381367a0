#!/usr/bin/env python3
# Conjugacy representatives of order-p elements: t*(1 - a*t^m)^(-1/m) with
# m prime to p and a in F_p*.  Depth m, order exactly p, and for fixed m
# the parameter a composes additively.

from nottingham import identity, klopsch_rep, order_mod_truncation

N = 40

print("p  m  a | depth  order  leading terms")
print("--------+------------------------------")
for p in (2, 3, 5):
    for m in (1, 2, 3):
        if m % p == 0:
            continue
        for a in range(1, p):
            rep = klopsch_rep(p, m, a, N)
            lead = ", ".join(
                f"{c}*t^{e}" for e, c in
                [(e, rep.series[e]) for e in rep.series.support()[:3]])
            print(f"{p}  {m}  {a} |   {rep.depth()}      {order_mod_truncation(rep)}    {lead}")

print()
print("== leading correction is (a/m) * t^(m+1) ==")
rep = klopsch_rep(5, 2, 1, 12)
print("p=5, m=2, a=1:", rep.series, "   (1/2 = 3 mod 5)")

print()
print("== for fixed m the parameters add under composition ==")
p, m = 5, 3
for a, b in ((1, 2), (2, 4), (3, 2)):
    lhs = klopsch_rep(p, m, a, N) * klopsch_rep(p, m, b, N)
    c = (a + b) % p
    rhs = identity(p, N) if c == 0 else klopsch_rep(p, m, c, N)
    label = "id" if c == 0 else f"rep({c})"
    print(f"rep({a}) * rep({b}) == {label}: {lhs == rhs}")

print()
print("== every representative has order exactly p ==")
for p in (2, 3, 5):
    rep = klopsch_rep(p, 1, 1, N)
    print(f"p={p}: order {order_mod_truncation(rep)}")
