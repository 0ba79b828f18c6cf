import math

import numpy as np
import pytest

from trigcut.maxcut import (
    CutInstance,
    brute_force_opt,
    cut_vertices,
    graph_to_objective,
    load_graph,
    mc_membership,
    read_rudy,
    sign_vector,
)
from trigcut.symmetric import SymMatrix, rank1_cut_matrix, sample_elliptope
from trigcut.trigmap import TaCandidate, arcsin_map

TRIANGLE = [(1, 2, 1.0), (2, 3, 1.0), (1, 3, 1.0)]


def naive_brute_force(a: np.ndarray):
    """Independent oracle: direct enumeration with exact evaluation and the
    same tie rule (lexicographically smallest argmax, first entry +1)."""
    n = a.shape[0]
    best_val = -math.inf
    best_x = None
    for index in range(1 << (n - 1)):
        x = sign_vector(n, index)
        val = float(x @ (a @ x))
        if val > best_val or (val == best_val and x.tolist() < best_x.tolist()):
            best_val = val
            best_x = x
    return best_val, tuple(int(v) for v in best_x)


def neg_half_triangle():
    m = np.full((3, 3), -0.5)
    np.fill_diagonal(m, 1.0)
    return TaCandidate(SymMatrix(m))


class TestSignVectors:
    def test_index_zero_is_all_ones(self):
        assert np.array_equal(sign_vector(4, 0), np.ones(4))

    def test_bit_encoding(self):
        assert np.array_equal(sign_vector(3, 1), [1, -1, 1])
        assert np.array_equal(sign_vector(3, 2), [1, 1, -1])

    def test_vertices_match_sign_vector(self):
        verts = cut_vertices(4)
        assert verts.shape == (8, 4)
        for k in range(8):
            assert np.array_equal(verts[k], sign_vector(4, k))


class TestBruteForce:
    def test_identity_objective(self):
        result = brute_force_opt(CutInstance(SymMatrix.identity(3)))
        assert result.optimum == 3.0
        assert result.evaluations == 4

    def test_single_coupling(self):
        result = brute_force_opt(CutInstance(SymMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))))
        assert result.optimum == 2.0
        assert result.argmax == (1, 1)

    def test_triangle_cut(self):
        inst = graph_to_objective(3, TRIANGLE, form="cut-value")
        result = brute_force_opt(inst)
        assert inst.constant + result.optimum == 2.0

    def test_dimension_one(self):
        result = brute_force_opt(CutInstance(SymMatrix(np.array([[2.5]]))))
        assert result.optimum == 2.5 and result.argmax == (1,) and result.evaluations == 1

    def test_resource_cap(self):
        with pytest.raises(ValueError, match="capped"):
            brute_force_opt(CutInstance(SymMatrix(np.eye(25))))

    def test_optimum_equals_argmax_quadratic_form_exactly(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = SymMatrix(rng.standard_normal((7, 7)))
            result = brute_force_opt(CutInstance(a))
            x = np.array(result.argmax, dtype=float)
            assert result.optimum == float(x @ (a.entries @ x))

    def test_gray_code_matches_naive_enumeration(self):
        rng = np.random.default_rng(42)
        for case in range(100):
            n = int(rng.integers(2, 13))
            a = SymMatrix(rng.standard_normal((n, n)))
            result = brute_force_opt(CutInstance(a))
            expected_val, expected_x = naive_brute_force(a.entries)
            assert result.optimum == expected_val
            assert result.argmax == expected_x

    def test_matches_naive_under_massive_ties(self):
        # A = I makes every sign vector optimal; the lex rule must still agree
        result = brute_force_opt(CutInstance(SymMatrix.identity(4)))
        expected_val, expected_x = naive_brute_force(np.eye(4))
        assert (result.optimum, result.argmax) == (expected_val, expected_x)

    def test_sign_relabeling_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            a = rng.standard_normal((n, n))
            a = (a + a.T) / 2
            d = rng.choice([-1.0, 1.0], size=n)
            conjugated = SymMatrix(d[:, None] * a * d[None, :])
            r1 = brute_force_opt(CutInstance(SymMatrix(a)))
            r2 = brute_force_opt(CutInstance(conjugated))
            assert r1.optimum == r2.optimum

    def test_optimum_equals_vertex_form_maximum(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((6, 6))
        a = (a + a.T) / 2
        result = brute_force_opt(CutInstance(SymMatrix(a)))
        vertex_max = max(float(np.sum(a * np.outer(v, v))) for v in cut_vertices(6))
        assert result.optimum == pytest.approx(vertex_max, rel=1e-12)


class TestGraphToObjective:
    def test_single_edge_cut_values(self):
        inst = graph_to_objective(2, [(1, 2, 1.0)], form="cut-value")
        assert inst.objective([1, -1]) == 1.0
        assert inst.objective([1, 1]) == 0.0

    def test_triangle_cut_identity(self):
        inst = graph_to_objective(3, TRIANGLE, form="cut-value")
        assert inst.objective([1, 1, -1]) == 2.0
        assert inst.objective([1, 1, 1]) == 0.0

    def test_cut_identity_on_random_graphs(self):
        # cut(x) = sum_E w_ij (1 - x_i x_j) / 2 must equal constant + x^T A x
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            edges = [
                (i + 1, j + 1, float(rng.normal()))
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.6
            ]
            if not edges:
                continue
            inst = graph_to_objective(n, edges, form="cut-value")
            for _ in range(5):
                x = rng.choice([-1.0, 1.0], size=n)
                direct = sum(w * (1 - x[i - 1] * x[j - 1]) / 2 for i, j, w in edges)
                assert inst.objective(x) == pytest.approx(direct, abs=1e-12)

    def test_quadratic_form_keeps_weight_matrix(self):
        inst = graph_to_objective(2, [(1, 2, 3.0)], form="quadratic")
        assert inst.constant == 0.0
        assert inst.a.entries[0, 1] == 3.0

    def test_duplicate_edges_accumulate(self):
        inst = graph_to_objective(2, [(1, 2, 1.0), (2, 1, 2.0)], form="quadratic")
        assert inst.a.entries[0, 1] == 3.0

    def test_rejects_self_loops_and_bad_indices(self):
        with pytest.raises(ValueError, match="self-loop"):
            graph_to_objective(3, [(1, 1, 1.0)])
        with pytest.raises(ValueError, match="out of range"):
            graph_to_objective(3, [(1, 4, 1.0)])

    def test_rejects_unknown_form(self):
        with pytest.raises(ValueError, match="form"):
            graph_to_objective(2, [(1, 2, 1.0)], form="other")


class TestRudyParser:
    def test_reads_triangle_with_comments(self, tmp_path):
        path = tmp_path / "t.rudy"
        path.write_text("# unit triangle\n3 3\n1 2 1\n2 3 1\n1 3 1\n")
        n, edges = read_rudy(path)
        assert n == 3 and len(edges) == 3
        inst = load_graph(path)
        assert inst.constant + brute_force_opt(inst).optimum == 2.0

    def test_decimal_weights(self, tmp_path):
        path = tmp_path / "t.rudy"
        path.write_text("2 1\n1 2 0.25\n")
        _, edges = read_rudy(path)
        assert edges == [(1, 2, 0.25)]

    def test_header_errors(self, tmp_path):
        path = tmp_path / "t.rudy"
        path.write_text("3\n")
        with pytest.raises(ValueError, match="header"):
            read_rudy(path)

    def test_edge_count_mismatch(self, tmp_path):
        path = tmp_path / "t.rudy"
        path.write_text("3 2\n1 2 1\n")
        with pytest.raises(ValueError, match="expected 2 edge lines"):
            read_rudy(path)

    def test_bad_weight_reports_line(self, tmp_path):
        path = tmp_path / "t.rudy"
        path.write_text("2 1\n1 2 x\n")
        with pytest.raises(ValueError, match="line 2"):
            read_rudy(path)


class TestHullMembership:
    def test_cut_matrix_gets_unit_weight_on_its_own_vertex(self):
        x = np.array([1.0, -1.0, 1.0])
        result = mc_membership(TaCandidate(rank1_cut_matrix(x).matrix))
        assert result.in_hull
        assert result.residual <= 1e-12
        # (1,-1,1) encodes to index 1 (bit 0 set, bit 1 clear)
        assert result.weights[1] == pytest.approx(1.0, abs=1e-12)
        assert sum(result.weights) == pytest.approx(1.0, abs=1e-10)

    def test_identity_is_average_of_vertices(self):
        result = mc_membership(TaCandidate(SymMatrix.identity(3)))
        assert result.in_hull
        verts = cut_vertices(3)
        recon = (verts.T * result.weights) @ verts
        assert np.max(np.abs(recon - np.eye(3))) <= 1e-8
        assert np.all(result.weights >= -1e-10)

    def test_negative_control_is_outside(self):
        result = mc_membership(neg_half_triangle())
        assert not result.in_hull
        assert result.weights is None
        assert result.residual > 1e-3

    def test_dimension_cap(self):
        with pytest.raises(ValueError, match="capped"):
            mc_membership(TaCandidate(SymMatrix.identity(6)))
        # explicit cap raise allows larger n
        assert mc_membership(TaCandidate(SymMatrix.identity(6)), n_cap=6).in_hull

    def test_sampled_members_are_inside(self):
        for seed in range(12):
            n = 3 + seed % 3
            c = TaCandidate(arcsin_map(sample_elliptope(n, n, seed).matrix))
            result = mc_membership(c)
            assert result.in_hull, (seed, result.residual)
            assert result.residual <= 1e-8

    def test_boundary_vertex_mixture(self):
        # midpoint of two vertices lies on the hull boundary; LP must still decide
        a = rank1_cut_matrix([1, 1, 1]).entries
        b = rank1_cut_matrix([1, -1, 1]).entries
        c = TaCandidate(SymMatrix(0.5 * a + 0.5 * b))
        result = mc_membership(c)
        assert result.in_hull
        assert result.residual <= 1e-12
