import math

import numpy as np
import pytest

import lueq


def w_state():
    amp = np.zeros(8, dtype=complex)
    amp[1] = amp[2] = amp[4] = 1.0 / math.sqrt(3.0)
    return lueq.PureState([2, 2, 2], amp)


def ghz_state():
    amp = np.zeros(8, dtype=complex)
    amp[0] = amp[7] = 1.0 / math.sqrt(2.0)
    return lueq.PureState([2, 2, 2], amp)


def test_state_roundtrip():
    psi = lueq.random_state([2, 3, 2], seed=5)
    assert psi.dims == [2, 3, 2]
    assert psi.hilbert_dim == 12
    np.testing.assert_allclose(np.vdot(psi.amplitudes, psi.amplitudes).real, 1.0, atol=1e-12)

    again = lueq.random_state([2, 3, 2], seed=5)
    np.testing.assert_array_equal(psi.amplitudes, again.amplitudes)


def test_unnormalized_amplitudes_raise():
    with pytest.raises(lueq.Error):
        lueq.PureState([2], np.array([0.9, 0.0], dtype=complex))
    lueq.PureState.normalized([2], np.array([3.0, 4.0], dtype=complex))


def test_partial_trace_matches_numpy():
    psi = lueq.random_state([2, 2, 2], seed=11)
    reduced = lueq.partial_trace(psi, [2])
    tensor = psi.amplitudes.reshape(2, 2, 2)
    expected = np.einsum("abk,cdk->abcd", tensor, tensor.conj()).reshape(4, 4)
    np.testing.assert_allclose(reduced.matrix, expected, atol=1e-13)


def test_w_fingerprint_table():
    fp = lueq.fingerprint(w_state(), "12-3")
    assert fp.rank == 2
    np.testing.assert_allclose(fp.spectrum, [2.0 / 3.0, 1.0 / 3.0], atol=1e-12)
    np.testing.assert_allclose(fp.J[1], 5.0 / 9.0, atol=1e-12)
    np.testing.assert_allclose(fp.omega, [[0.5, 0.5], [0.5, 1.0]], atol=1e-12)
    np.testing.assert_allclose(fp.theta, [[0.5, 0.5], [0.5, 1.0]], atol=1e-12)
    np.testing.assert_allclose(fp.X[0, 0, 0], 0.25, atol=1e-12)
    np.testing.assert_allclose(fp.X[1, 1, 1], 1.0, atol=1e-12)
    assert fp.generic
    assert fp.canonical


def test_compare_verdicts():
    w_fp = lueq.fingerprint(w_state(), "12-3")
    g_fp = lueq.fingerprint(ghz_state(), "12-3")
    assert lueq.compare_fingerprints(w_fp, w_fp) == lueq.Verdict.ConsistentGeneric
    assert lueq.compare_fingerprints(g_fp, w_fp) == lueq.Verdict.Distinct
    assert lueq.compare_fingerprints(g_fp, g_fp) == lueq.Verdict.Inconclusive

    verdict, reason = lueq.compare_fingerprints_detailed(g_fp, w_fp)
    assert verdict == lueq.Verdict.Distinct
    assert reason == "spectrum[1]"


def test_fingerprint_is_lu_invariant():
    psi = lueq.random_state([2, 2, 2], seed=21)
    units = [lueq.haar_unitary(2, seed) for seed in (31, 32, 33)]
    moved = lueq.apply_local_unitaries(psi, units)
    before = lueq.fingerprint(psi, "12-3")
    after = lueq.fingerprint(moved, "12-3")
    assert lueq.compare_fingerprints(before, after) == lueq.Verdict.ConsistentGeneric


def test_witness_recovery():
    psi = lueq.random_state([2, 2, 2], seed=41)
    units = [lueq.haar_unitary(2, seed) for seed in (51, 52, 53)]
    moved = lueq.apply_local_unitaries(psi, units)

    lifted = lueq.lift_witness(psi, moved, 2, [units[0], units[1]])
    assert lifted.fidelity >= 1.0 - 1e-9
    assert len(lifted.unitaries) == 3
    assert abs(abs(lifted.phase) - 1.0) < 1e-12
    np.testing.assert_allclose(
        lueq.check_lu_fidelity(psi, moved, list(lifted.unitaries)), lifted.fidelity, atol=1e-12
    )

    single = lueq.apply_local_unitaries(psi, [np.eye(2), units[1], np.eye(2)])
    recovered = lueq.match_purification(psi, single, 1)
    assert abs(np.trace(recovered.conj().T @ units[1])) == pytest.approx(2.0, abs=1e-9)


def test_search_separates_orbits():
    psi = lueq.random_state([2, 2, 2], seed=61)
    units = [lueq.haar_unitary(2, seed) for seed in (71, 72, 73)]
    moved = lueq.apply_local_unitaries(psi, units)
    found = lueq.search_lu(psi, moved, budget=16, seed=1)
    assert found.fidelity >= 1.0 - 1e-4

    missed = lueq.search_lu(ghz_state(), w_state(), budget=8, seed=1)
    assert missed.fidelity < 1.0 - 1e-6


def test_counterexample_report():
    report = lueq.counterexample_report()
    assert max(report.reduced_residuals) < 1e-12
    np.testing.assert_allclose(report.spectrum_1, [2.0 / 3.0, 1.0 / 3.0], atol=1e-12)
    np.testing.assert_allclose(report.spectrum_2, [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(report.max_spectral_gap, 1.0 / 6.0, atol=1e-12)
    assert report.verdict == lueq.CounterexampleVerdict.NotUnitarilyEquivalent


def test_linear_algebra_helpers():
    u = lueq.haar_unitary(4, seed=81)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-12)

    h = u @ np.diag([3.0, 1.0, 0.5, -2.0]).astype(complex) @ u.conj().T
    values, vectors = lueq.hermitian_eig(h)
    np.testing.assert_allclose(values, [3.0, 1.0, 0.5, -2.0], atol=1e-10)
    np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.conj().T, h, atol=1e-10)

    coeffs = lueq.schmidt_coefficients(ghz_state(), "12-3")
    np.testing.assert_allclose(coeffs, [1.0 / math.sqrt(2.0)] * 2, atol=1e-12)
