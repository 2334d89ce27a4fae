"""Label sets (a, b) and how they fit together.

Run: python3 demos/03_label_sets.py
"""

from thetafactor.indexsets import (
    BundleExponents,
    StratumIndex,
    UnboundedIndexSetError,
    enumerate_A_delta,
    enumerate_A_general,
    enumerate_A_pq,
    enumerate_A_prime,
    enumerate_SA_prime,
    reduce_label,
)

n, kappa = 3, 2
print(f"A(Delta^{kappa}) for n={n}: {len(enumerate_A_delta(n, kappa))} labels")

# strata: I pins tail sums, J pins head sums
L = BundleExponents.delta(n, kappa)
for I, J in [((), ()), ((2,), ()), ((1, 2), ()), ((), (2,)), ((2,), (2,))]:
    s = StratumIndex(n, I, J)
    general = enumerate_A_general(L, s)
    assert set(general) == set(enumerate_A_delta(n, kappa, s))
    print(f"  I={list(I)} J={list(J)}: {[x.a for x in general]}")

# a presentation whose conditions leave a unbounded is refused
try:
    enumerate_A_general(BundleExponents(2, (1, 1), (0, 0), 0, 1), StratumIndex(2, {0}, {0}))
except UnboundedIndexSetError as exc:
    print("\nrefused:", exc)

# A' elements reduce onto SA'; each a' is hit kappa - a'_n times
print("\nfibres of A' -> SA':")
ap = enumerate_A_prime(n, kappa)
for s in enumerate_SA_prime(n, kappa):
    hits = [x.a for x in ap if reduce_label(x).a == s.a]
    print(f"  a'={s.a}: {len(hits)} = kappa - a'_n = {kappa - s.a[-1]}  {hits}")

# the blocks A_{p,q} split by how many entries are below kappa
print("\nA_{3,3} split by flag level:")
for i in range(n + 1):
    print(f"  A'_{{{i},3}}: {[x.a for x in enumerate_A_pq(n, kappa, i, 3, primed=True)]}")
