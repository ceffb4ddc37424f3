"""The growth study: tracing the certified bound against poset size.

The theory says the dimension of standard-example-free posets grows
sublinearly.  At desk scale with a fixed peel width q the certified
bound tracks a constant multiple of n, so the study reports the ratio
for inspection rather than asserting a trend; push q up with n to watch
the constant move.
"""

from posetdim import growth_records_to_csv, run_growth_experiment

sizes = [12, 24, 48, 96]
records = run_growth_experiment(
    k=3, sizes=sizes, samples=5, q=3, edge_prob=None, seed=321,
)

print(growth_records_to_csv(records))
for rec in records:
    gap = "" if rec.mean_exact is None else (
        f"  (mean exact dimension {rec.mean_exact:.2f} — the certified "
        f"bound is loose but sound)"
    )
    print(f"n={rec.n:4d}: bound/n = {rec.bound_over_n:.3f}{gap}")

# The same seed always regenerates the same records, byte for byte.
again = run_growth_experiment(
    k=3, sizes=sizes, samples=5, q=3, edge_prob=None, seed=321,
)
print("\nreproducible:", growth_records_to_csv(again) ==
      growth_records_to_csv(records))
