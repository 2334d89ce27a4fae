"""Verlinde numbers for SL_n and GL_n, computed through DFT minors.

Run: python3 demos/01_verlinde_numbers.py
"""

import math

from thetafactor import dim_gvb, dim_spb, dim_svb, dim_vb
from thetafactor.lattice import enumerate_alcove

# rank 2 has a classical closed form in sines; compare a few levels
print("SL_2, genus 2")
for kappa in range(1, 6):
    m = kappa + 2
    sines = (m / 2) * sum(math.sin(j * math.pi / m) ** -2 for j in range(1, m))
    print(f"  level {kappa}: formula {dim_svb(2, kappa, 2).value:4d}   sine form {sines:8.3f}")

# higher rank: the table grows quickly with the level
print("\nSL_n, genus 2")
for n in (2, 3, 4):
    row = [dim_svb(n, k, 2).value for k in range(1, 5)]
    print(f"  n={n}: {row}")

# at genus 1 only the alcove is counted
print("\ngenus 1 equals the number of alcove points:")
print("  ", [(dim_svb(3, k, 1).value, len(enumerate_alcove(3, k))) for k in range(1, 5)])

# the GL_n numbers differ by the (kappa/n)^g factor
print("\nGL_n vs Gieseker side, genus 2")
for n, k in [(2, 1), (2, 2), (3, 2), (4, 3)]:
    print(f"  n={n} kappa={k}: vb={dim_vb(n, k, 2).value}  gvb={dim_gvb(n, k, 2).value}")

print("\ntwo-point parabolic, n=2, kappa=2, g=2:",
      {a: dim_spb(2, 2, 2, a).value for a in [(0, 0), (0, 1), (0, 2)]})
