"""The weighted |J|^2 sum and the two candidate right-hand sides.

For each alcove point mu, sum_lambda gamma(lambda) |J(lambda, mu)|^2 is
constant in mu.  The constant is kappa * m^(n-1); the form n * m^(n-1) only
matches when n == kappa.

Run: python3 demos/02_weighted_character_sum.py
"""

from thetafactor.factorization import verify_zagier, verify_zagier_matrix, zagier_rhs

print(" n  k |  lhs (every mu) | k m^(n-1) | n m^(n-1)")
for n in range(1, 5):
    for k in range(1, 5):
        reports = verify_zagier(n, k)
        values = sorted({round(r.lhs, 6) for r in reports})
        print(f" {n}  {k} | {str(values):>15} | {zagier_rhs(n, k):9d} | {zagier_rhs(n, k, 'printed'):9d}")

# the same statement about DFT minors, certified exactly in Z[zeta_m]
print("\nexact check at m=7, n=3, B={1,2,5}:")
r = verify_zagier_matrix(7, 3, (1, 2, 5), mode="exact")
print(f"  lhs={r.lhs} rhs={r.rhs} passed={r.passed} normalized={r.details['normalized_lhs']:.4f}")

# the smallest case where the two forms disagree
for r in verify_zagier(2, 1, rhs_variant="printed"):
    print(f"  n=2 k=1 mu={r.parameters['mu']}: lhs {r.lhs:.6f} vs printed rhs {r.rhs}")
