#!/usr/bin/env python3
"""Tour of the extremal families: build each member, solve it exactly, and
watch the size identity m = 3(n - gamma_t) hold with equality."""

from totaldom import (
    gamma_t,
    gen_cycle,
    gen_F,
    gen_G,
    gen_GP16,
    gen_H,
    gen_L,
    graph6_encode,
    two_corona,
)

members = []
members += [gen_G(k) for k in (1, 2, 3, 4)]
members += [gen_H(k) for k in (2, 3, 4)]
members += [gen_F(k) for k in (0, 1, 2, 3)]
members += [gen_L(k) for k in (0, 1, 2)]
members += [two_corona(gen_cycle(j)) for j in (3, 4, 5)]
members += [gen_GP16()]

print(f"{'member':<12} {'n':>3} {'m':>3} {'gamma_t':>8} {'3(n-gt)':>8}  graph6")
print("-" * 60)
for member in members:
    g = member.graph
    cert = gamma_t(g)
    bound = 3 * (g.n - cert.value)
    tag = member.family if member.k is None else f"{member.family}(k={member.k})"
    marker = "=" if g.m == bound else "!"
    print(f"{tag:<12} {g.n:>3} {g.m:>3} {cert.value:>8} {bound:>8} {marker} {graph6_encode(g)}")

print()
print("Every row shows m equal to 3(n - gamma_t): these graphs sit exactly on")
print("the linear size bound. A couple of non-members for contrast:")
for name, g in [("path P7", __import__("totaldom").gen_path(7)),
                ("cycle C7", gen_cycle(7))]:
    cert = gamma_t(g)
    print(f"  {name}: n={g.n} m={g.m} gamma_t={cert.value} "
          f"bound={3 * (g.n - cert.value)} (strict)")
