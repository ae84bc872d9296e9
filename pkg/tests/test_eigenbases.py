import numpy as np
import pytest
from numpy.testing import assert_allclose

from rotorsusy import (
    ContractViolation,
    HarmonicSpace,
    TridiagonalData,
    VerificationError,
    closed_form_tridiagonal,
    decompose,
    f_basis,
    g_basis,
    j3,
    joint_diagonalize,
    m_basis,
    q_action_on_m,
    supercharge,
    symmetry_generators,
    tridiagonal_extract,
)


def test_m_basis_order_and_eigenvalues():
    basis = m_basis(HarmonicSpace(1))
    assert [lbl["m"] for lbl in basis.labels] == [0, 1, 1]
    assert [lbl["epsilon"] for lbl in basis.labels] == [1, 1, -1]
    assert [lbl["k3"] for lbl in basis.labels] == [0.5, 0.5, -1.5]
    assert basis.orthonormality_residual() < 1e-14


def test_m_basis_diagonalizes_third_generator():
    for j in (1, 4, 9):
        space = HarmonicSpace(j)
        basis = m_basis(space)
        _, _, k3 = symmetry_generators(space)
        v = basis.matrix()
        t = v.conj().T @ k3.matrix @ v
        expected = np.diag([lbl["k3"] for lbl in basis.labels])
        assert_allclose(t, expected, atol=1e-13)


def test_m_basis_explicit_degree_one_vector():
    basis = m_basis(HarmonicSpace(1))
    # m=1, eps=+1: (Y^{-1} + i Y^{1}) / sqrt(2)
    assert_allclose(basis.vectors[1].coeffs, [1 / np.sqrt(2), 0, 1j / np.sqrt(2)])


def test_supercharge_closed_form_on_m_basis():
    mat = q_action_on_m(HarmonicSpace(1))
    # the m=0 state only feels the -1/2 diagonal plus one raising entry
    assert mat[0, 0] == -0.5
    for j in (1, 2, 3, 7, 10):
        space = HarmonicSpace(j)
        v = m_basis(space).matrix()
        direct = v.conj().T @ supercharge(space).matrix @ v
        assert_allclose(q_action_on_m(space), direct, atol=1e-12)


def test_supercharge_chain_entries_vanish_exactly():
    # each eps chain splits into closed 2x2 blocks: on the eps=+1 chain an
    # even m can only move up and an odd m only down, and the forbidden
    # entries are zero by the coefficient itself, not by roundoff
    mat = q_action_on_m(HarmonicSpace(4))
    assert mat[1, 2] == 0.0  # (m=2,+1) -> (m=1,+1)
    assert mat[3, 2] != 0.0  # (m=2,+1) -> (m=3,+1)
    assert mat[2, 1] == 0.0  # (m=1,+1) -> (m=2,+1)
    assert mat[0, 1] != 0.0  # (m=1,+1) -> (m=0,+1)
    # the eps=-1 chain pairs the other way around
    assert mat[7, 6] == 0.0  # (m=2,-1) -> (m=3,-1)
    assert mat[5, 6] != 0.0  # (m=2,-1) -> (m=1,-1)


def test_joint_diagonalization_labels():
    space = HarmonicSpace(1)
    q = supercharge(space)
    _, _, k3 = symmetry_generators(space)
    basis = joint_diagonalize(q, k3)
    got = sorted((round(lbl["q"], 8), lbl["k"]) for lbl in basis.labels)
    assert got == [(-1.5, 0), (-1.5, 1), (1.5, 0)]
    for lbl, vec in zip(basis.labels, basis.vectors):
        assert_allclose(q.matrix @ vec.coeffs, lbl["q"] * vec.coeffs, atol=1e-10)
        assert_allclose(k3.matrix @ vec.coeffs, lbl["k3"] * vec.coeffs, atol=1e-10)
    assert basis.orthonormality_residual() < 1e-12


def test_joint_diagonalization_requires_commuting_inputs():
    space = HarmonicSpace(2)
    with pytest.raises(ContractViolation):
        joint_diagonalize(supercharge(space), j3(space))


def test_f_basis_structure():
    space = HarmonicSpace(1)
    fb = f_basis(space)
    assert len(fb) == 2
    # F_1^1 has no upper term, so it is a pure M^{1,-1} state
    m_mat = m_basis(space).matrix()
    overlap = np.abs(m_mat.conj().T @ fb.vectors[1].coeffs)
    assert_allclose(overlap, [0.0, 0.0, 1.0], atol=1e-14)


@pytest.mark.parametrize("j", [1, 2, 5, 10])
def test_f_and_g_bases_are_joint_eigenvectors(j):
    space = HarmonicSpace(j)
    q = supercharge(space)
    _, _, k3 = symmetry_generators(space)
    for basis, q_eig in ((f_basis(space), -(j + 0.5)), (g_basis(space), j + 0.5)):
        for lbl, vec in zip(basis.labels, basis.vectors):
            assert lbl["q"] == q_eig
            assert_allclose(q.matrix @ vec.coeffs, q_eig * vec.coeffs, atol=1e-10)
            assert_allclose(k3.matrix @ vec.coeffs, lbl["k3"] * vec.coeffs, atol=1e-10)


@pytest.mark.parametrize("j", [1, 3, 8])
def test_f_and_g_bases_span_everything(j):
    space = HarmonicSpace(j)
    fb, gb = f_basis(space), g_basis(space)
    assert (len(fb), len(gb)) == (j + 1, j)
    t = np.column_stack([fb.matrix(), gb.matrix()])
    assert_allclose(t.conj().T @ t, np.eye(space.dim), atol=1e-12)


def test_g_basis_empty_on_trivial_degree():
    gb = g_basis(HarmonicSpace(0))
    assert len(gb) == 0
    assert gb.matrix().shape == (1, 0)


def test_closed_form_tridiagonal_values():
    diag, off = closed_form_tridiagonal("F", 1)
    assert_allclose(diag, [-1.0, 0.0])
    assert_allclose(off, [np.sqrt(3.0) / 2.0])
    diag, off = closed_form_tridiagonal("G", 2)
    assert_allclose(diag, [-1.0, 0.0])
    assert_allclose(off, [np.sqrt(3.0) / 2.0])
    with pytest.raises(ValueError):
        closed_form_tridiagonal("Q", 3)


@pytest.mark.parametrize("j", [1, 2, 6, 11])
def test_first_generator_is_tridiagonal_in_both_blocks(j):
    space = HarmonicSpace(j)
    k1, _, _ = symmetry_generators(space)
    f_tri = tridiagonal_extract(k1, f_basis(space))
    assert f_tri.N == j + 1
    assert np.all(f_tri.offdiag > 0)
    g_tri = tridiagonal_extract(k1, g_basis(space))
    assert g_tri.N == j
    # the smaller block repeats the larger block's pattern one degree down
    lower_diag, lower_off = closed_form_tridiagonal("F", j - 1)
    assert_allclose(g_tri.diag, lower_diag, atol=1e-12)
    assert_allclose(g_tri.offdiag, lower_off, atol=1e-12)


def test_tridiagonal_extract_rejects_wrong_family():
    space = HarmonicSpace(2)
    k1, _, _ = symmetry_generators(space)
    with pytest.raises(ValueError):
        tridiagonal_extract(k1, m_basis(space))


def test_tridiagonal_extract_rejects_non_tridiagonal_operator():
    space = HarmonicSpace(3)
    _, _, k3 = symmetry_generators(space)
    fb = f_basis(space)
    # K3 is diagonal in the F-basis, so extraction against the K1 closed
    # form must fail the entry comparison
    with pytest.raises(VerificationError):
        tridiagonal_extract(k3, fb)


def test_tridiagonal_data_validation():
    with pytest.raises(VerificationError):
        TridiagonalData(diag=np.zeros(3), offdiag=np.array([1.0, -0.5]), N=3)
    with pytest.raises(ValueError):
        TridiagonalData(diag=np.zeros(3), offdiag=np.array([1.0]), N=3)


def test_decomposition_report_degree_three():
    report = decompose(HarmonicSpace(3))
    assert report["dims"] == [4, 3]
    assert report["q_eigenvalues"] == [-3.5, 3.5]
    assert report["completeness_residual"] < 1e-12
    assert all(v < 1e-12 for v in report["offblock_residuals"].values())
    assert_allclose(report["f_block"]["diag"], [-2.0, 0.0, 0.0, 0.0])
    assert_allclose(
        report["f_block"]["offdiag"],
        [np.sqrt(15.0) / 2.0, np.sqrt(3.0), np.sqrt(7.0) / 2.0],
    )
    assert report["offdiag_positive"] is True
    assert report["g_matches_f_pattern_one_degree_lower"] is True


def test_decomposition_report_trivial_degree():
    report = decompose(HarmonicSpace(0))
    assert report["dims"] == [1, 0]
    assert "g_block" not in report
    assert_allclose(report["f_block"]["diag"], [0.5])


@pytest.mark.parametrize("j", [2, 5, 10])
def test_closed_forms_agree_with_numerical_diagonalization(j):
    space = HarmonicSpace(j)
    q = supercharge(space)
    _, _, k3 = symmetry_generators(space)
    oracle = joint_diagonalize(q, k3)
    fb, gb = f_basis(space), g_basis(space)
    for basis in (fb, gb):
        for lbl, vec in zip(basis.labels, basis.vectors):
            match = [
                o_vec
                for o_lbl, o_vec in zip(oracle.labels, oracle.vectors)
                if abs(o_lbl["q"] - lbl["q"]) < 1e-8 and o_lbl["k"] == lbl["k"]
            ]
            assert len(match) == 1
            overlap = abs(np.vdot(match[0].coeffs, vec.coeffs))
            assert_allclose(overlap, 1.0, atol=1e-10)
