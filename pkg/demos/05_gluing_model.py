"""A linear-algebra model of gluing sections along the boundary strata.

V_{n,n} is a sum of blocks W_x.  For each p < n a map beta_p identifies the
pieces over two boundary strata, and H is the subspace where all
identifications agree.  The expectation is dim H = dim V'_{n,n}.

With betas that are only invertible and block triangular, this fails as soon
as n >= 2: the maps must also be compatible with each other.  The script
shows the smallest case.

Run: python3 demos/05_gluing_model.py
"""

from fractions import Fraction

from thetafactor.gluing import (
    BetaMap,
    GluingProblem,
    build_graded_space,
    check_section,
    glued_subspace_dim,
    project_pi,
    random_betas,
    random_section,
    reconstruct,
    verify_gluing,
)

for n, kappa, dims in [(1, 2, "unit"), (2, 1, "unit"), (2, 2, ("verlinde", 2)), (3, 2, "unit")]:
    results = [verify_gluing(n, kappa, dims, seed) for seed in range(10)]
    sizes = sorted({(r.lhs, r.rhs) for r in results})
    print(f"n={n} kappa={kappa} dims={dims}: (dim H, dim V') over 10 seeds -> {sizes}, "
          f"{sum(r.passed for r in results)}/10 pass")

# n=2, kappa=1: labels (1,1), (0,1), (0,0), one dimension each
space = build_graded_space(2, 1, "unit")
problem = random_betas(space, 1)
s = problem.beta(0).matrix[0][0]
(u1, r), (_, u2) = problem.beta(1).matrix
print(f"\nseed 1: beta_0 = ({s}), beta_1 = [[{u1}, {r}], [0, {u2}]]")
print(f"H is nonzero iff u1*u2 + r == beta_0: {u1 * u2 + r} vs {s}; dim H = {glued_subspace_dim(problem)}")

theta_prime = random_section(space, 0)
theta = reconstruct(theta_prime, problem)
print("reconstruct still inverts pi:", project_pi(theta, 2, 2) == theta_prime,
      " but lands in H:", check_section(theta, problem))

b0 = problem.beta(0)
fixed = GluingProblem(space, (BetaMap(0, b0.rows, b0.cols, ((Fraction(u1 * u2 + r),),), 1), problem.beta(1)), 1)
theta = reconstruct(theta_prime, fixed)
print(f"with beta_0 := {u1 * u2 + r}: dim H = {glued_subspace_dim(fixed)}, reconstruct lands in H:",
      check_section(theta, fixed))
