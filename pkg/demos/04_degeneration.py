"""Dimension bookkeeping across the degeneration.

The smooth-curve count (kappa/n) dim SVB splits as a weighted sum of
two-point parabolic counts, and the Gieseker total matches the GL_n count.

Run: python3 demos/04_degeneration.py
"""

from thetafactor.factorization import verify_beta_dim_compat, verify_degeneration, verify_main_theorem_dims
from thetafactor.indexsets import enumerate_SA_prime
from thetafactor.verlinde import dim_spb, dim_svb

n, kappa, g = 2, 2, 2
terms = [(kappa - s.a[-1], dim_spb(n, kappa, g, s.a).value) for s in enumerate_SA_prime(n, kappa)]
print("weighted parabolic terms:", " + ".join(f"{w}*{d}" for w, d in terms),
      "=", sum(w * d for w, d in terms))
print("(kappa/n) dim_svb =", kappa / n * dim_svb(n, kappa, g).value)

# the whole grid
ok = all(verify_degeneration(a, b, c).passed for a in range(1, 5) for b in range(1, 5) for c in range(1, 5))
print("degeneration identity on n, kappa, g <= 4:", ok)

for n, kappa, g in [(2, 1, 2), (2, 2, 2), (3, 2, 2), (4, 2, 3)]:
    r = verify_main_theorem_dims(n, kappa, g)
    print(f"  n={n} kappa={kappa} g={g}: gvb={r.lhs} vb={r.rhs} A'' total={r.details['double_prime_total']}")

print("\nblock dimensions that any gluing map must respect (n=2, kappa=2, g=2):")
for r in verify_beta_dim_compat(2, 2, 2):
    print(f"  p={r.parameters['p']}: V_(p,n) vs V_(n,p) = {r.lhs[0]} vs {r.rhs[0]}, "
          f"primed {r.lhs[1]} vs {r.rhs[1]}")
