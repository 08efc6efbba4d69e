import numpy as np
import pytest

from qwalkspec import (
    Graph,
    HypothesisError,
    QuadraticPair,
    RationalEigenvalue,
    ValencyError,
    adjacency_charpoly,
    build_arc_space,
    build_support_set,
    char_poly,
    char_poly_identity_check,
    charpoly_root_multiset,
    closed_form_charpoly_su,
    closed_form_charpoly_su2,
    closed_form_spectrum_su,
    closed_form_spectrum_su2,
    complete_graph,
    cycle_graph,
    greedy_matching_distance,
    hypercube_graph,
    ihara_style_charpoly,
    int_eye,
    mat_equal,
    mat_mul,
    mat_pow,
    mat_trace,
    max_matching_distance,
    outs_matrix,
    petersen_graph,
    poly_divide_exact,
    positive_support,
    scaled_transition_matrix,
    su2_via_identity,
    support_u,
    support_u_power,
)
from qwalkspec.arcspace import ins_matrix


def test_support_u_c3_is_two_directed_triangles():
    a = build_arc_space(cycle_graph(3))
    s1 = support_u(a)
    # arcs: (0,1),(1,0),(0,2),(2,0),(1,2),(2,1); rows mark feeders
    expected = [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
    ]
    assert s1.tolist() == expected
    # a permutation of order 3: s1^3 = I
    assert mat_equal(mat_pow(s1, 3), int_eye(6))


def test_support_u_row_sums(corpus):
    for gid, g in corpus:
        a = build_arc_space(g)
        s1 = support_u(a)
        for i in range(a.size):
            assert sum(s1[i, :]) == a.k - 1, gid
            assert sum(s1[:, i]) == a.k - 1, gid


def test_support_u_matches_sign_of_walk_matrix(corpus):
    for gid, g in corpus:
        a = build_arc_space(g)
        assert mat_equal(
            support_u(a), positive_support(scaled_transition_matrix(a))
        ), gid


def test_support_u_requires_k2():
    with pytest.raises(ValencyError):
        support_u(build_arc_space(Graph(2, [(0, 1)])))
    with pytest.raises(ValencyError):
        support_u_power(build_arc_space(Graph(2, [(0, 1)])), 2)


def test_support_power_rejects_bad_exponent():
    a = build_arc_space(cycle_graph(4))
    with pytest.raises(ValueError):
        support_u_power(a, 4)


def test_squared_support_identity_k_gt_2(corpus):
    for gid, g in corpus:
        a = build_arc_space(g)
        if a.k <= 2:
            continue
        assert mat_equal(support_u_power(a, 2), su2_via_identity(a)), gid


def test_su2_identity_hypothesis_gate():
    with pytest.raises(HypothesisError, match="k > 2"):
        su2_via_identity(build_arc_space(cycle_graph(4)))


def test_squared_support_at_k2_is_square_of_support():
    # At k = 2 the scaled walk matrix is exactly 2*S+(U) (backtracking
    # entries are 2 - k = 0), so supports of powers are powers of the
    # non-backtracking permutation.  In particular the "+ I" of the k > 2
    # identity fails, and the support of (outs^T ins)^2 strictly contains
    # the true support of U^2.
    for n in (3, 4, 5, 6):
        a = build_arc_space(cycle_graph(n))
        s1 = support_u(a)
        s2 = support_u_power(a, 2)
        b2 = mat_mul(s1, s1)
        assert mat_equal(s2, b2)  # B is a permutation at k=2, so B^2 is 0/1
        assert not mat_equal(s2, b2 + int_eye(a.size))
        x = mat_mul(outs_matrix(a).T, ins_matrix(a))
        assert not mat_equal(s2, positive_support(mat_pow(x, 2)))


def test_squared_support_row_sums_k_gt_2(corpus):
    for gid, g in corpus:
        a = build_arc_space(g)
        if a.k <= 2:
            continue
        s2 = support_u_power(a, 2)
        expected = (a.k - 1) ** 2 + 1
        for i in range(a.size):
            assert sum(s2[i, :]) == expected, gid


def test_support_set_consistency():
    a = build_arc_space(petersen_graph())
    ss = build_support_set(a)
    assert mat_equal(ss.s1, support_u(a))
    assert mat_equal(ss.s2, support_u_power(a, 2))
    assert mat_equal(ss.s3, support_u_power(a, 3))


def test_cubed_support_relabeling_invariance():
    from qwalkspec import relabel

    g = petersen_graph()
    base = char_poly(support_u_power(build_arc_space(g), 3))
    rng = np.random.default_rng(17)
    for _ in range(3):
        h = relabel(g, list(rng.permutation(10)))
        assert char_poly(support_u_power(build_arc_space(h), 3)) == base


# ---------------------------------------------------------------------------
# closed-form spectra
# ---------------------------------------------------------------------------


def _entry_map(spec):
    rationals = {}
    pairs = {}
    for e in spec.entries:
        if isinstance(e, RationalEigenvalue):
            rationals[e.value] = rationals.get(e.value, 0) + e.multiplicity
        else:
            pairs[(e.root_sum, e.root_product)] = (e.multiplicity, e.conjugate)
    return rationals, pairs


def test_closed_form_su_k4():
    spec = closed_form_spectrum_su(complete_graph(4))
    rationals, pairs = _entry_map(spec)
    assert rationals == {2: 1, 1: 3, -1: 2}  # k-1=2; n(k-2)/2+1=3; n(k-2)/2=2
    assert pairs == {(-1, 2): (3, True)}  # lambda=-1 thrice, conjugate
    assert spec.total_multiplicity() == 12


def test_closed_form_su_petersen():
    spec = closed_form_spectrum_su(petersen_graph())
    rationals, pairs = _entry_map(spec)
    assert rationals == {2: 1, 1: 6, -1: 5}
    assert pairs == {(1, 2): (5, True), (-2, 2): (4, True)}
    assert spec.total_multiplicity() == 30


def test_closed_form_su_c3():
    spec = closed_form_spectrum_su(cycle_graph(3))
    rationals, pairs = _entry_map(spec)
    # k=2: eigenvalue -1 has multiplicity n(k-2)/2 = 0 and is omitted
    assert rationals == {1: 2}
    assert pairs == {(-1, 1): (2, True)}
    assert spec.total_multiplicity() == 6


def test_closed_form_su_bipartite_real_pair():
    # lambda = -k on a bipartite graph: real pair {-1, -(k-1)}, no special case
    spec = closed_form_spectrum_su(hypercube_graph(3))
    _, pairs = _entry_map(spec)
    assert (-3, 2) in pairs
    mult, conjugate = pairs[(-3, 2)]
    assert mult == 1 and conjugate is False


def test_closed_form_su_degenerate_discriminant():
    # C4: lambda = -2, k = 2 gives discriminant 0: double real root -1
    spec = closed_form_spectrum_su(cycle_graph(4))
    _, pairs = _entry_map(spec)
    mult, conjugate = pairs[(-2, 1)]
    assert mult == 1 and conjugate is False


def test_closed_form_conjugate_pairs_product_exact(corpus):
    for gid, g in corpus:
        a = build_arc_space(g)
        if a.k < 2:
            continue
        spec = closed_form_spectrum_su(g)
        for e in spec.entries:
            if isinstance(e, QuadraticPair):
                assert e.root_product == a.k - 1, gid
                if e.conjugate:
                    r1, r2 = e.numeric_values()[:2]
                    assert abs(abs(r1) ** 2 - (a.k - 1)) < 1e-6


def test_closed_form_multiplicities_sum(corpus):
    for gid, g in corpus:
        nk = 2 * g.edge_count
        spec = closed_form_spectrum_su(g)
        assert spec.total_multiplicity() == nk, gid
        if spec.k > 2:
            spec2 = closed_form_spectrum_su2(g)
            assert spec2.total_multiplicity() == nk, gid


def test_closed_form_su2_k4():
    spec = closed_form_spectrum_su2(complete_graph(4))
    rationals, pairs = _entry_map(spec)
    assert rationals == {5: 1, 2: 5}  # k^2-2k+2 = 5; both +-1 families map to 2
    # (lambda,k)=(-1,3) maps to root sum lambda^2-2k+4 = -1, product lambda^2+(k-2)^2 = 2
    assert pairs == {(-1, 2): (3, True)}
    assert spec.total_multiplicity() == 12


def test_closed_form_su2_eigenvalue_of_two_multiplicity(corpus):
    for gid, g in corpus:
        spec_k = closed_form_spectrum_su(g).k
        if spec_k <= 2:
            continue
        spec2 = closed_form_spectrum_su2(g)
        rationals, _ = _entry_map(spec2)
        assert rationals[2] == g.n * (spec_k - 2) + 1, gid


def test_closed_form_su2_hypothesis_gate():
    with pytest.raises(HypothesisError):
        closed_form_spectrum_su2(cycle_graph(5))  # k=2


def test_closed_form_rejects_disconnected_and_irregular():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(HypothesisError, match="connected"):
        closed_form_spectrum_su(two_triangles)
    with pytest.raises(HypothesisError, match="regular"):
        closed_form_spectrum_su(Graph(3, [(0, 1)]))
    with pytest.raises(HypothesisError):
        closed_form_spectrum_su(Graph(2, [(0, 1)]))  # k=1


def test_trace_zero_exact(corpus):
    # trace of the support is zero, and the closed-form eigenvalue sum is
    # zero exactly: (k-1) + sum_{lambda != k} m_lambda lambda + 1 = 0, with
    # the middle sum read off the psi = phi_A/(x-k) coefficients.
    for gid, g in corpus:
        a = build_arc_space(g)
        assert mat_trace(support_u(a)) == 0, gid
        cp_a = adjacency_charpoly(g)
        psi = poly_divide_exact(list(cp_a.coeffs), [-a.k, 1])
        lambda_sum = -psi[-2] if len(psi) >= 2 else 0  # sum of roots of psi
        plus = g.n * (a.k - 2) // 2 + 1
        minus = g.n * (a.k - 2) // 2
        assert (a.k - 1) + lambda_sum + plus - minus == 0, gid


# ---------------------------------------------------------------------------
# exact closed-form characteristic polynomials
# ---------------------------------------------------------------------------


def test_closed_form_charpoly_su_c3():
    cp = closed_form_charpoly_su(cycle_graph(3))
    assert cp.coeffs == (1, 0, 0, -2, 0, 0, 1)  # (t^3 - 1)^2


def test_closed_form_charpoly_su_matches_brute_force(small_corpus):
    for gid, g in small_corpus:
        lhs = char_poly(support_u(build_arc_space(g)))
        assert lhs == closed_form_charpoly_su(g), gid


def test_ihara_identity_small(small_corpus):
    for gid, g in small_corpus:
        assert char_poly_identity_check(g), gid


def test_ihara_equals_closed_form(corpus):
    for gid, g in corpus:
        assert ihara_style_charpoly(g) == closed_form_charpoly_su(g), gid


def test_closed_form_charpoly_su2_matches_brute_force(small_corpus):
    for gid, g in small_corpus:
        a = build_arc_space(g)
        if a.k <= 2:
            continue
        lhs = char_poly(support_u_power(a, 2))
        assert lhs == closed_form_charpoly_su2(g), gid


def test_numeric_roots_match_closed_form(small_corpus):
    for gid, g in small_corpus:
        cp = char_poly(support_u(build_arc_space(g)))
        roots = charpoly_root_multiset(cp)
        expected = closed_form_spectrum_su(g).numeric_values()
        assert greedy_matching_distance(roots, expected) < 1e-6, gid
        assert max_matching_distance(roots, expected) < 1e-6, gid


def test_matching_distance_validates_sizes():
    with pytest.raises(ValueError):
        max_matching_distance([1 + 0j], [1 + 0j, 2 + 0j])
