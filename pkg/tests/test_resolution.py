"""Module categories over structure-constant algebras: radicals, simples,
projective covers, minimal resolutions, growth estimates.

Frozen Betti sequences, worked by hand:
- over the A2 path algebra the simple at the source has resolution
  P1 -> P2 -> 0, betti (2, 1, 0);
- over the trivial extension of A2 every simple has constant betti 3;
- over the trivial extension of the Kronecker algebra betti grows by 4
  each step (4, 8, 12, ...);
- over the trivial extension of the 3-arrow Kronecker algebra the first
  twelve betti numbers are five times 1, 3, 8, 21, ... (even-index
  Fibonacci numbers), at which point the syzygy dimension 167761 passes
  the 100000 cap.
"""
from fractions import Fraction

import pytest

from quiverlab import (
    ComplexityEstimate,
    RatMatrix,
    RepModule,
    ResolutionTrace,
    combine_estimates,
    complexity_estimate,
    global_complexity_estimate,
    jacobson_radical,
    minimal_resolution,
    path_algebra,
    projective_cover,
    quiver_from_data,
    simple_modules,
    trivial_extension,
    zero_module,
)
from quiverlab import resolution as res_mod
from conftest import gentle_two_loop, multi_kronecker, path_quiver


def point_algebra():
    return path_algebra(quiver_from_data({"vertices": ["v"], "arrows": []}))


# --- radical and simples -------------------------------------------------

def test_radical_dimensions():
    assert len(jacobson_radical(path_algebra(path_quiver(2)))) == 1
    assert len(jacobson_radical(point_algebra())) == 0
    assert len(jacobson_radical(gentle_two_loop())) == 6
    ta = trivial_extension(path_algebra(path_quiver(2)))
    assert len(jacobson_radical(ta)) == 4


def test_radical_vectors_have_no_idempotent_support():
    a = gentle_two_loop()
    idem = set(a.idempotents)
    for vec in jacobson_radical(a):
        assert all(vec[i] == 0 for i in idem)


def test_simple_modules_shape():
    a = path_algebra(path_quiver(3))
    simples = simple_modules(a)
    assert len(simples) == 3
    for i, s in enumerate(simples):
        s.validate()
        assert s.dim == 1
        vec = s.dim_vector()
        assert vec.count(1) == 1 and vec[i] == 1


def test_dim_vector_counts_idempotent_ranks():
    a = path_algebra(path_quiver(2))
    p, _ = projective_cover(a, simple_modules(a)[0])
    assert p.dim_vector() == (1, 1)


# --- projective covers ---------------------------------------------------

def test_projective_cover_of_simples_matches_cartan_columns():
    a = path_algebra(multi_kronecker(2))
    simples = simple_modules(a)
    p1, m1 = projective_cover(a, simples[0])
    assert p1.dim == 3
    assert (m1.rows, m1.cols) == (1, 3)
    p2, m2 = projective_cover(a, simples[1])
    assert p2.dim == 1


def test_projective_cover_surjective():
    a = gentle_two_loop()
    for s in simple_modules(a):
        p, matrix = projective_cover(a, s)
        assert matrix.rank() == s.dim


def test_zero_module_resolution():
    a = point_algebra()
    trace = minimal_resolution(a, zero_module(a))
    assert trace.betti == (0,)
    assert trace.truncated_by == "resolution-terminated"


# --- resolutions over path algebras (finite global dimension) ------------

def test_resolution_simple_at_source_of_a2():
    a = path_algebra(path_quiver(2))
    s1, s2 = simple_modules(a)
    trace = minimal_resolution(a, s1)
    assert trace.betti == (2, 1, 0)
    assert trace.truncated_by == "resolution-terminated"
    trace = minimal_resolution(a, s2)
    assert trace.betti == (1, 0)


def test_resolution_over_kronecker_path_algebra():
    a = path_algebra(multi_kronecker(2))
    s1, s2 = simple_modules(a)
    assert minimal_resolution(a, s1).betti == (3, 2, 0)
    assert minimal_resolution(a, s2).betti == (1, 0)


def test_path_algebra_global_estimate_is_projective_dimension_zero():
    a = path_algebra(path_quiver(3))
    assert global_complexity_estimate(a) == ComplexityEstimate.finite(0)


# --- resolutions over trivial extensions ---------------------------------

def test_dual_numbers_constant_betti():
    ta = trivial_extension(point_algebra())
    trace = minimal_resolution(ta, simple_modules(ta)[0], steps=15)
    assert trace.betti == (2,) * 15
    assert trace.truncated_by == "steps-exhausted"


def test_trivial_extension_a2_constant_betti(growth_suite):
    _, traces = growth_suite["A2"]
    for trace in traces:
        assert trace.betti == (3,) * 40
        assert trace.truncated_by == "steps-exhausted"
        assert complexity_estimate(trace) == ComplexityEstimate.finite(1)


def test_trivial_extension_a3_constant_betti(growth_suite):
    _, traces = growth_suite["A3"]
    for trace in traces:
        assert trace.betti == (4,) * 40
        assert complexity_estimate(trace) == ComplexityEstimate.finite(1)


def test_trivial_extension_kronecker_linear_betti(growth_suite):
    _, traces = growth_suite["kronecker"]
    for trace in traces:
        assert trace.betti == tuple(4 * (k + 1) for k in range(40))
        assert complexity_estimate(trace) == ComplexityEstimate.finite(2)


def test_trivial_extension_kronecker3_exponential(growth_suite):
    _, traces = growth_suite["kronecker3"]
    expected = (5, 15, 40, 105, 275, 720, 1885, 4935, 12920, 33825, 88555, 231840)
    for trace in traces:
        assert trace.betti == expected
        assert trace.truncated_by == "dimension-cap"
        assert complexity_estimate(trace).kind == "infinite"


def test_dense_and_sparse_engines_agree():
    for base in [
        path_algebra(path_quiver(2)),
        path_algebra(multi_kronecker(2)),
        gentle_two_loop(),
    ]:
        ta = trivial_extension(base)
        rad = jacobson_radical(ta)
        for s in simple_modules(ta):
            sparse = res_mod._sparse_resolution(ta, s, 8, 100000, rad)
            dense = res_mod._dense_resolution(ta, s, 8, 100000, rad)
            assert sparse == dense


def test_sparse_dispatch_applies_to_extensions():
    ta = trivial_extension(path_algebra(path_quiver(2)))
    assert res_mod._radical_is_arrow_span(ta, jacobson_radical(ta))


# --- input validation -----------------------------------------------------

def test_resolution_rejects_foreign_module():
    a = path_algebra(path_quiver(2))
    b = path_algebra(path_quiver(2))
    with pytest.raises(ValueError):
        minimal_resolution(a, simple_modules(b)[0])


def test_resolution_rejects_bad_bounds():
    a = path_algebra(path_quiver(2))
    s = simple_modules(a)[0]
    with pytest.raises(ValueError):
        minimal_resolution(a, s, steps=0)
    with pytest.raises(ValueError):
        minimal_resolution(a, s, dim_cap=0)


def test_repmodule_validation_catches_bad_tables():
    a = path_algebra(path_quiver(2))
    bad = RepModule(
        a,
        1,
        tuple(RatMatrix([[1]]) for _ in range(a.dim)),
    )
    with pytest.raises(ValueError):
        bad.validate()


def test_trace_validation():
    with pytest.raises(ValueError):
        ResolutionTrace((3, 2), "no-such-reason")
    with pytest.raises(ValueError):
        ResolutionTrace((3, 2), "resolution-terminated")  # must end in 0
    with pytest.raises(ValueError):
        ResolutionTrace((), "steps-exhausted")
    with pytest.raises(ValueError):
        ResolutionTrace((-1, 0), "resolution-terminated")
    t = ResolutionTrace((3, 0), "resolution-terminated")
    assert t.to_json_dict() == {"betti": [3, 0], "truncated_by": "resolution-terminated"}


# --- growth estimation ----------------------------------------------------

def exhausted(betti):
    return ResolutionTrace(tuple(betti), "steps-exhausted")


def test_estimate_terminated_is_finite_zero():
    t = ResolutionTrace((2, 1, 0), "resolution-terminated")
    assert complexity_estimate(t) == ComplexityEstimate.finite(0)


def test_estimate_requires_enough_data():
    with pytest.raises(ValueError):
        complexity_estimate(exhausted([3] * 11))


def test_estimate_constant_is_finite_one():
    assert complexity_estimate(exhausted([3] * 12)) == ComplexityEstimate.finite(1)


def test_estimate_bounded_oscillation_is_finite_one():
    betti = [9, 5, 7, 5, 7, 5, 7, 5, 7, 5, 7, 5, 7, 5]
    assert complexity_estimate(exhausted(betti)) == ComplexityEstimate.finite(1)


def test_estimate_linear_is_finite_two():
    betti = [4 * (k + 1) for k in range(20)]
    assert complexity_estimate(exhausted(betti)) == ComplexityEstimate.finite(2)


def test_estimate_quadratic_is_finite_three():
    betti = [3 * (k + 1) ** 2 for k in range(24)]
    assert complexity_estimate(exhausted(betti)) == ComplexityEstimate.finite(3)


def test_estimate_exponential_without_cap_is_infinite():
    betti = [2 ** k for k in range(1, 17)]
    assert complexity_estimate(exhausted(betti)).kind == "infinite"


def test_estimate_zero_in_growing_tail_is_inconclusive():
    betti = [5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0, 16, 17, 18]
    est = complexity_estimate(exhausted(betti))
    assert est.kind == "inconclusive"


def test_combine_estimates_order():
    fin1 = ComplexityEstimate.finite(1)
    fin3 = ComplexityEstimate.finite(3)
    inc = ComplexityEstimate.inconclusive("x")
    inf = ComplexityEstimate.infinite()
    assert combine_estimates([fin1, fin3]) == fin3
    assert combine_estimates([fin1, inc, fin3]).kind == "inconclusive"
    assert combine_estimates([fin1, inc, inf]).kind == "infinite"
    assert combine_estimates([]) == ComplexityEstimate.finite(0)


def test_global_estimates(growth_suite):
    ta_a2, _ = growth_suite["A2"]
    assert global_complexity_estimate(ta_a2).kind == "finite"
    ta_k3, _ = growth_suite["kronecker3"]
    assert global_complexity_estimate(ta_k3, steps=40, dim_cap=100000).kind == "infinite"


def test_thread_env_does_not_change_results(monkeypatch):
    ta = trivial_extension(path_algebra(multi_kronecker(2)))
    baseline = res_mod.resolve_simple_modules(ta, steps=10, dim_cap=100000)
    monkeypatch.setenv("QUIVERLAB_THREADS", "4")
    threaded = res_mod.resolve_simple_modules(ta, steps=10, dim_cap=100000)
    assert baseline == threaded
    monkeypatch.setenv("QUIVERLAB_THREADS", "not-a-number")
    fallback = res_mod.resolve_simple_modules(ta, steps=10, dim_cap=100000)
    assert baseline == fallback
