#!/usr/bin/env python3
"""The coefficient conditions and the condensation chain.

Walks the three summability conditions on a grid of power-log coefficient
families, shows the double-exponential blocking, and evaluates the
geometric condensation example whose constant is 4/3.
"""

from orthoseries import (SequenceSpec, WeightSpec, condensation_chain,
                         orlicz_conditions, orlicz_reduction, tandori_blocks,
                         tandori_sum, weyl_sum)

print("=== double-exponential blocks up to 70000 ===")
blocks = tandori_blocks(70000)
print("thresholds:", blocks.nu)
for k, (lo, hi) in enumerate(blocks.ranges):
    tag = " (partial)" if hi - lo + 1 < blocks.nu[k] * blocks.nu[k] - blocks.nu[k] else ""
    print(f"  block {k}: [{lo}, {hi}]{tag}")

print("\n=== log-squared Weyl condition for a_n = n^-alpha log2(n+1)^-beta ===")
for alpha, beta in [(1.0, 0.0), (0.5, 2.0), (0.5, 1.0), (0.25, 0.0)]:
    a = SequenceSpec.power_log(1.0, alpha, beta)
    rep = weyl_sum(a, 65536)
    print(f"  alpha={alpha:4.2f} beta={beta:4.2f}: partial={rep.total:12.4f} "
          f"-> {rep.classification.value}")

print("\n=== blocked condition for the same families ===")
for alpha, beta in [(1.0, 2.0), (0.5, 2.0), (0.5, 1.5), (0.5, 0.0)]:
    rep = tandori_sum(SequenceSpec.power_log(1.0, alpha, beta), 65536)
    print(f"  alpha={alpha:4.2f} beta={beta:4.2f}: partial={rep.total:12.4f} "
          f"-> {rep.classification.value}")

print("\n=== weighted condition pair, w_n = max(1, log2 n)^gamma ===")
a = SequenceSpec.power_log(1.0, 1.0, 2.0)
for gamma in (0.0, 1.5, 2.0):
    coeff, weight = orlicz_conditions(a, WeightSpec.log_power(gamma), 65536)
    print(f"  gamma={gamma}: coefficient side {coeff.classification.value}, "
          f"weight side {weight.classification.value}")

print("\n=== condensation chain: three equivalent series ===")
w = WeightSpec.log_power(2.0, shift=0.0)  # exactly max(1, log2 n)^2
r1, r2, r3 = condensation_chain(w, terms=12)
print(f"  sum 1/(n log2(n) w_n)     partial {r1.total:.6f} -> {r1.classification.value}")
print(f"  sum 1/(n w_(2^n))         partial {r2.total:.6f} -> {r2.classification.value}")
print(f"  c = sum 1/w at thresholds partial {r3.total:.9f} -> {r3.classification.value}")
print(f"  (geometric series: the limit is 4/3 = {4/3:.9f})")

print("\n=== the reduction chain, evaluated at truncation 65536 ===")
red = orlicz_reduction(a, WeightSpec.log_power(1.5), 65536)
print(f"  (sum sqrt(A_k))^2 = {red.lhs:.6f}")
print(f"  c * sum A_k w     = {red.mid:.6f}")
print(f"  c * weighted mass = {red.rhs:.6f}")
print(f"  chain holds: {red.all_hold}; classification {red.classification.value}")
