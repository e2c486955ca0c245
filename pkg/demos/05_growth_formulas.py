"""How fast the guaranteed family grows, in numbers that fit on a screen.

The estimates overflow double precision around n ~ 1e5, so the library
keeps natural logs and converts only when safe.  Two checks anchor the
formulas: the classical partition asymptotic against exact counts, and a
numerical derivative confirming that the integral target's slope matches
the main term -- the identity that pins down the reconstruction of f(n).
"""

from spantree import (
    PartClass,
    check_lhospital,
    count_partitions_up_to,
    cumulative_lower_bound,
    hardy_ramanujan,
    p_set_size,
    prime_main_term,
)

print("== partition asymptotic vs exact counts ==")
table = count_partitions_up_to(500, PartClass.ALL)
print("  n    exact           estimate        ratio")
for n in (50, 100, 200, 500):
    est = hardy_ramanujan(n).value
    print(f"{n:>4}   {table[n]:<15} {est:<15.6e} {table[n] / est:.4f}")
print("(convergence from below, as it should be)")

print()
print("== the guaranteed-family lower bound, log scale ==")
print("  n        |P_n| exact   bound (log)   f(n) (log)")
for n in (10, 20, 40, 60):
    print(f"{n:>4}       {p_set_size(n):<13} {cumulative_lower_bound(n).log_value:<13.3f}"
          f" {prime_main_term(n).log_value:.3f}")
print("(the bound is eventual: no finite n is claimed, the table just shows scale)")

print()
print("== past the overflow horizon ==")
for n in (10**4, 10**5, 10**6):
    est = cumulative_lower_bound(n)
    shown = f"{est.value:.3e}" if est.value is not None else "overflows a double"
    print(f"n = {n:>8}: log = {est.log_value:>10.2f}, value = {shown}")

print()
print("== the derivative identity that pins f(n) ==")
report = check_lhospital([10**3, 10**4, 10**5, 10**6])
for n, r in report.rows:
    print(f"n = {n:>8}: d(target)/dn / f(n) = {r:.4f}")
print(f"drifting toward 1: {report.tending_to_one}")
