"""Bass numbers, small support, and injective dimension bounds.

Two five-variable ideals illustrate how Bass numbers of local cohomology
behave along chains of face ideals.  The first has every support prime
carrying a Bass number.  For the second, two height-four primes carry no
Bass number at all, so the small support is strictly inside the support and
the graded injective dimension drops below the dimension of the module.
"""

from lyub import (
    QQ,
    bass_table,
    growth_bound_check,
    injective_dimensions,
    intersect_face_ideals,
    mask_str,
    mask_vector,
    mu0_summand_report,
    nonzero_cohomology_degrees,
    small_support,
)
from lyub.combinatorics import mask_of


def primes_ideal(n, lists):
    return intersect_face_ideals(n, [mask_of(i - 1 for i in L) for L in lists])


def show_bass(ideal, r):
    table = bass_table(ideal, r, QQ)
    print(f"  Bass numbers of H^{r}:")
    for alpha, mu in table.rows:
        cells = "  ".join(f"mu_{p}={v}" for p, v in enumerate(mu) if v)
        print(f"    {mask_str(alpha, ideal.n):<18} {cells}")


first = primes_ideal(5, [[1, 2, 5], [3, 4, 5], [1, 2, 3, 4]])
print("I =", first)
for r in nonzero_cohomology_degrees(first, QQ):
    show_bass(first, r)
print("  growth bound at the maximal ideal:",
      all(growth_bound_check(first, r, QQ) for r in (3, 4)))
print("  mu_0 at a non-minimal prime (an injective summand after localizing):",
      [(mask_str(a, 5), m) for a, m in mu0_summand_report(first, 4, QQ)])

second = primes_ideal(5, [[1, 4], [2, 5], [1, 2, 3]])
print("\nI =", second)
for r in nonzero_cohomology_degrees(second, QQ):
    show_bass(second, r)

small, big = small_support(second, 3, QQ)
print("  support masks of H^3:", [mask_vector(a, 5) for a in big])
print("  small support:       ", [mask_vector(a, 5) for a in small])
missing = [a for a in big if a not in small]
print("  no Bass number at all at:",
      ", ".join(mask_str(a, 5) for a in missing))

for r in (2, 3):
    rec = injective_dimensions(second, r, QQ)
    print(
        f"  H^{r}: *id = {rec.star_id}, ungraded id = {rec.id_ungraded},"
        f" dim = {rec.dim_module}, dim small support = {rec.dim_small_supp}"
    )
print("  for H^3 the graded injective dimension is strictly below the")
print("  dimension of the module; the bound through the small support is tight.")
