import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigcut.symmetric import (
    ElliptopePoint,
    SymMatrix,
    psd_check,
    rank1_cut_matrix,
    read_matrix,
    sample_elliptope,
    write_matrix,
)


def offdiag_constant(n, c):
    m = np.full((n, n), c)
    np.fill_diagonal(m, 1.0)
    return SymMatrix(m)


class TestSymMatrix:
    def test_symmetrizes_on_construction(self):
        m = SymMatrix(np.array([[1.0, 2.0], [4.0, 1.0]]))
        assert m.entries[0, 1] == m.entries[1, 0] == 3.0

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            SymMatrix(np.ones((2, 3)))

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="at least 1"):
            SymMatrix(np.ones((0, 0)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="non-finite"):
            SymMatrix(np.array([[1.0, np.nan], [np.nan, 1.0]]))

    def test_rejects_beyond_desk_scale(self):
        with pytest.raises(ValueError, match="256"):
            SymMatrix(np.eye(257))

    def test_entries_read_only(self):
        m = SymMatrix.identity(3)
        with pytest.raises(ValueError):
            m.entries[0, 0] = 2.0


class TestPsdCheck:
    def test_identity(self):
        v = psd_check(SymMatrix.identity(3), 1e-9)
        assert v.is_psd and v.min_eigenvalue == 1.0

    def test_rank1_cut_matrix_boundary(self):
        v = psd_check(SymMatrix(np.array([[1.0, -1.0], [-1.0, 1.0]])), 1e-9)
        assert v.is_psd
        assert abs(v.min_eigenvalue) <= 1e-14

    def test_indefinite_pattern_matrix(self):
        # eigenvalues of the unit-diagonal matrix with constant off-diagonal c
        # are 1 + (n-1)c and 1 - c; at n=3, c=-0.75 the smallest is -0.5
        v = psd_check(offdiag_constant(3, -0.75), 1e-9)
        assert not v.is_psd
        assert v.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)

    def test_negative_tolerance_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            psd_check(SymMatrix.identity(2), -1.0)

    def test_verdict_consistency(self):
        v = psd_check(offdiag_constant(4, 0.3))
        assert v.is_psd == (v.min_eigenvalue >= -v.tolerance_used)

    def test_spectral_invariance_under_orthogonal_conjugation(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            m = SymMatrix(rng.standard_normal((6, 6)))
            q, _ = np.linalg.qr(rng.standard_normal((6, 6)))
            conj = SymMatrix(q.T @ m.entries @ q)
            a, b = psd_check(m, 1e-8), psd_check(conj, 1e-8)
            assert abs(a.min_eigenvalue - b.min_eigenvalue) <= 1e-8
            assert a.is_psd == b.is_psd


class TestSampleElliptope:
    def test_dimension_one(self):
        p = sample_elliptope(1, 1, 123)
        assert p.entries.shape == (1, 1) and p.entries[0, 0] == 1.0

    def test_full_rank_sample_is_valid(self):
        p = sample_elliptope(5, 5, 7)
        assert np.all(np.diag(p.entries) == 1.0)
        assert psd_check(p.matrix, 1e-12).is_psd

    def test_rank_one_sample_has_sign_entries(self):
        # normalized 1-D rows are exactly +-1, so every entry is exactly +-1
        p = sample_elliptope(3, 1, 1)
        assert np.all(np.abs(p.entries) == 1.0)

    def test_deterministic_per_seed(self):
        a = sample_elliptope(6, 3, 11)
        b = sample_elliptope(6, 3, 11)
        c = sample_elliptope(6, 3, 12)
        assert np.array_equal(a.entries, b.entries)
        assert not np.array_equal(a.entries, c.entries)

    def test_rank_bounds(self):
        with pytest.raises(ValueError, match="rank"):
            sample_elliptope(4, 0, 1)
        with pytest.raises(ValueError, match="rank"):
            sample_elliptope(4, 5, 1)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(2, 30), st.integers(0, 10**6), st.data())
    def test_always_unit_diagonal_and_psd(self, n, seed, data):
        rank = data.draw(st.integers(1, n))
        p = sample_elliptope(n, rank, seed)
        assert np.all(np.diag(p.entries) == 1.0)
        assert psd_check(p.matrix, 1e-10).is_psd


class TestRank1CutMatrix:
    def test_all_ones(self):
        p = rank1_cut_matrix([1, 1])
        assert np.array_equal(p.entries, np.ones((2, 2)))

    def test_mixed_signs(self):
        p = rank1_cut_matrix([1, -1, 1])
        expected = np.outer([1, -1, 1], [1, -1, 1]).astype(float)
        assert np.array_equal(p.entries, expected)

    def test_psd_with_zero_min_eigenvalue(self):
        v = psd_check(rank1_cut_matrix([1, -1, 1, -1]).matrix, 1e-9)
        assert v.is_psd
        assert abs(v.min_eigenvalue) <= 1e-12

    def test_rejects_non_sign_entries(self):
        with pytest.raises(ValueError, match="\\+1 or -1"):
            rank1_cut_matrix([1, 0.5])

    @settings(deadline=None, max_examples=40)
    @given(st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=12))
    def test_global_sign_symmetry(self, signs):
        x = np.array(signs, dtype=float)
        assert np.array_equal(rank1_cut_matrix(x).entries, rank1_cut_matrix(-x).entries)


class TestElliptopePoint:
    def test_rejects_non_psd(self):
        with pytest.raises(ValueError, match="positive semidefinite"):
            ElliptopePoint(offdiag_constant(3, -0.75))

    def test_rejects_wrong_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            ElliptopePoint(SymMatrix(2.0 * np.eye(3)))

    def test_pins_diagonal_exactly(self):
        m = np.eye(3)
        m[0, 0] = 1.0 + 1e-10
        p = ElliptopePoint(SymMatrix(m))
        assert np.all(np.diag(p.entries) == 1.0)


class TestMatrixIO:
    def test_round_trip_is_exact(self, tmp_path):
        p = sample_elliptope(5, 3, 21)
        path = tmp_path / "m.txt"
        write_matrix(p.matrix, path)
        again = read_matrix(path)
        assert np.array_equal(again.entries, p.entries)

    def test_symmetrizes_on_load(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("2\n1 0.25\n0.35 1\n")
        m = read_matrix(path)
        assert m.entries[0, 1] == m.entries[1, 0] == pytest.approx(0.3)

    def test_bad_dimension_line(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("x\n1\n")
        with pytest.raises(ValueError, match="line 1"):
            read_matrix(path)

    def test_wrong_row_length(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("2\n1 0\n0\n")
        with pytest.raises(ValueError, match="line 3"):
            read_matrix(path)

    def test_bad_token_reports_column(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("2\n1 0\n0 abc\n")
        with pytest.raises(ValueError, match="column 2"):
            read_matrix(path)

    def test_missing_rows(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("3\n1 0 0\n0 1 0\n")
        with pytest.raises(ValueError, match="expected 3 matrix rows"):
            read_matrix(path)
