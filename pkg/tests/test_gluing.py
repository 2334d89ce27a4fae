from fractions import Fraction

import numpy as np
import pytest

from thetafactor.gluing import (
    BetaMap,
    GluingProblem,
    IncompatibleDimensionsError,
    SectionVector,
    build_graded_space,
    check_section,
    glued_subspace_dim,
    project_pi,
    project_sigma,
    project_tau,
    projection_is_injective,
    random_betas,
    random_section,
    reconstruct,
    unit_dims,
    validate_problem,
    verify_gluing,
)
from thetafactor.indexsets import LabelPair, enumerate_A_delta
from thetafactor.verlinde import pb_dims

CASES = [(n, k, d) for n in (1, 2, 3) for k in (1, 2) for d in ("unit", ("verlinde", 2))]


def random_vector(space, rng):
    return SectionVector(space, [int(v) for v in rng.integers(-4, 5, size=space.total)])


def test_build_examples():
    space = build_graded_space(2, 1, "unit")
    assert space.total == 3
    space = build_graded_space(2, 2, ("verlinde", 2))
    assert space.total == sum(pb_dims(2, 2, 2).values())
    assert space.dim(2, 2, primed=True) == 10


def test_build_mismatch():
    dims = unit_dims(2, 1)
    dims[LabelPair.from_a((0, 0), 1)] = 2
    with pytest.raises(IncompatibleDimensionsError):
        build_graded_space(2, 1, dims)
    with pytest.raises(ValueError):
        build_graded_space(2, 1, {})
    with pytest.raises(ValueError):
        build_graded_space(2, 1, "nope")


def test_block_ordering_follows_flag_levels():
    space = build_graded_space(3, 2, "unit")
    for q in range(4):
        for p in range(3 - q, 4):
            levels = [sum(v <= 1 for v in x.a) for x in space.block(p, q)]
            assert levels == sorted(levels)


def test_one_dimensional_beta():
    space = build_graded_space(1, 1, "unit")
    problem = random_betas(space, 5)
    (beta,) = problem.betas
    assert len(beta.matrix) == 1 and beta.matrix[0][0] != 0


@pytest.mark.parametrize("n,kappa,dims", CASES)
def test_betas_deterministic_and_valid(n, kappa, dims):
    space = build_graded_space(n, kappa, dims)
    for seed in range(5):
        a, b = random_betas(space, seed), random_betas(space, seed)
        assert a.betas == b.betas
        validate_problem(a)


def test_validate_rejects_bad_beta():
    space = build_graded_space(2, 1, "unit")
    problem = random_betas(space, 0)
    b1 = problem.beta(1)
    # put a nonzero entry under the primed block
    bad = BetaMap(1, b1.rows, b1.cols, ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))), b1.n_primed)
    with pytest.raises(AssertionError):
        validate_problem(GluingProblem(space, (problem.beta(0), bad), 0))


def test_projection_laws():
    space = build_graded_space(3, 2, "unit")
    rng = np.random.default_rng(0)
    n = 3
    for _ in range(100):
        theta = random_vector(space, rng)
        assert project_sigma(theta, n, n) == theta
        for q in range(n + 1):
            for p in range(n - q, n + 1):
                s = project_sigma(theta, p, q)
                assert project_sigma(s, p, q) == s
                assert project_tau(project_tau(theta, p, q), p, q) == project_tau(theta, p, q)
                for q2 in range(q, n + 1):
                    for p2 in range(p, n + 1):
                        # sigma o sigma = sigma along nested blocks
                        assert project_sigma(project_sigma(theta, p2, q2), p, q) == s
                    # pi sigma = tau pi holds whenever p' = p
                    lhs = project_pi(project_sigma(theta, p, q), p, q)
                    rhs = project_tau(project_pi(project_sigma(theta, p, q2), p, q2), p, q)
                    assert lhs == rhs


def test_commutation_fails_across_flag_levels():
    # A'_{p,q} and A'_{n,q} are disjoint for p < n, so tau o pi_{n,q} is zero there
    space = build_graded_space(2, 1, "unit")
    theta = SectionVector(space, [1, 1, 1])
    lhs = project_pi(project_sigma(theta, 1, 2), 1, 2)
    rhs = project_tau(project_pi(project_sigma(theta, 2, 2), 2, 2), 1, 2)
    assert lhs and not rhs


def test_pi_rejects_vectors_outside_block():
    space = build_graded_space(2, 1, "unit")
    with pytest.raises(ValueError):
        project_pi(SectionVector(space, [1, 1, 1]), 2, 0)


def test_reconstruct_zero():
    space = build_graded_space(2, 2, "unit")
    problem = random_betas(space, 3)
    assert not reconstruct(SectionVector(space), problem)


def test_reconstruct_n1_unrolled():
    space = build_graded_space(1, 2, "unit")
    for seed in range(10):
        problem = random_betas(space, seed)
        theta_prime = random_section(space, seed)
        theta = reconstruct(theta_prime, problem)
        beta = problem.beta(0)
        # theta'_0 = beta_0^{-1} (tau theta') on the single boundary stratum
        target = project_tau(theta_prime, 1, 0).values[beta.rows[0]]
        assert theta.values[beta.cols[0]] * beta.matrix[0][0] == target
        assert project_pi(theta, 1, 1) == theta_prime
        assert check_section(theta, problem)
        assert glued_subspace_dim(problem) == 2


@pytest.mark.parametrize("n,kappa,dims", CASES)
def test_properties_that_hold_for_every_seed(n, kappa, dims):
    space = build_graded_space(n, kappa, dims)
    for seed in range(4):
        problem = random_betas(space, seed)
        theta_prime = random_section(space, seed + 1)
        theta = reconstruct(theta_prime, problem)
        assert project_pi(theta, n, n) == theta_prime
        assert projection_is_injective(problem)
        assert glued_subspace_dim(problem) <= space.dim(n, n, primed=True)


def _n2_entries(problem):
    s = problem.beta(0).matrix[0][0]
    (u1, r), (_, u2) = problem.beta(1).matrix
    return s, u1, u2, r


def _with_beta0(problem, value):
    b0 = problem.beta(0)
    b0 = BetaMap(0, b0.rows, b0.cols, ((Fraction(value),),), b0.n_primed)
    return GluingProblem(problem.space, (b0, problem.beta(1)), problem.seed)


def test_n2_closed_form_glued_dimension():
    # theta = (x, y, z) on labels (1,1), (0,1), (0,0); the constraints are
    # z = s x, y = u2 x, z = u1 y + r x, so H != 0 iff u1 u2 + r == s
    space = build_graded_space(2, 1, "unit")
    assert [x.a for x in space.labels] == [(1, 1), (0, 1), (0, 0)]
    for seed in range(30):
        problem = random_betas(space, seed)
        s, u1, u2, r = _n2_entries(problem)
        expected = 1 if u1 * u2 + r == s else 0
        assert glued_subspace_dim(problem) == expected
        if u1 * u2 + r == 0:
            continue
        coherent = _with_beta0(problem, u1 * u2 + r)
        assert glued_subspace_dim(coherent) == 1
        theta = reconstruct(random_section(space, seed), coherent)
        assert check_section(theta, coherent)


def test_n2_random_seed_gives_smaller_h():
    space = build_graded_space(2, 1, "unit")
    problem = random_betas(space, 1)
    assert glued_subspace_dim(problem) == 0
    theta_prime = SectionVector.from_components(space, {LabelPair.from_a((0, 0), 1): [1]})
    theta = reconstruct(theta_prime, problem)
    assert project_pi(theta, 2, 2) == theta_prime
    assert not check_section(theta, problem)


def test_check_section_zero_and_perturbations():
    space = build_graded_space(2, 1, "unit")
    problem = random_betas(space, 1)
    s, u1, u2, r = _n2_entries(problem)
    coherent = _with_beta0(problem, u1 * u2 + r)
    assert check_section(SectionVector(space), coherent)
    theta = reconstruct(SectionVector.from_components(space, {LabelPair.from_a((0, 0), 1): [2]}), coherent)
    assert theta
    assert check_section(theta, coherent)
    rng = np.random.default_rng(0)
    for _ in range(100):
        vals = list(theta.values)
        i = int(rng.integers(space.total))
        vals[i] += Fraction(int(rng.integers(1, 50)), int(rng.integers(1, 7)))
        assert not check_section(SectionVector(space, vals), coherent)


def test_glued_dim_examples():
    space = build_graded_space(1, 2, "unit")
    assert glued_subspace_dim(random_betas(space, 0)) == 2


def test_verify_gluing_report():
    r = verify_gluing(1, 2, "unit", 0)
    assert r.passed and r.lhs == r.rhs == 2 and r.mode == "exact"
    r = verify_gluing(2, 1, "unit", 7)
    assert not r.passed and (r.lhs, r.rhs) == (0, 1)
    assert r.details["right_inverse"] and r.details["injective"]


def test_section_vector_components():
    space = build_graded_space(2, 1, "unit")
    x = LabelPair.from_a((0, 1), 1)
    v = SectionVector.from_components(space, {x: [3]})
    assert v.support() == {x}
    assert v.components[x] == (3,)
    with pytest.raises(ValueError):
        SectionVector.from_components(space, {x: [1, 2]})
    with pytest.raises(ValueError):
        SectionVector(space, [1])
    assert set(space.labels) == set(enumerate_A_delta(2, 1))
