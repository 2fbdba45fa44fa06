from __future__ import annotations

import numpy as np
import pytest

import diagsynth as ds
from conftest import PI, random_diagonal, wrapped_max_diff


def test_block_gates_reference():
    assert ds.controlled_rotation_gates([1, 3], 0.4, 4) == [ds.MCRZ((1, 3), 4, 0.4)]
    assert ds.controlled_rotation_gates([], 0.4, 4) == [ds.RZ(4, 0.4)]


def test_block_gates_reject_bad_controls():
    with pytest.raises(ValueError):
        ds.controlled_rotation_gates([4], 0.4, 4)
    with pytest.raises(ValueError):
        ds.controlled_rotation_gates([2, 2], 0.4, 4)


def test_block_obstruction_formula():
    # obstruction of a conditioned block is alpha * sum of v_j over the
    # conditioned states, mod 2*pi
    rng = np.random.default_rng(41)
    for n in range(2, 7):
        dim = (1 << (n - 1)) - 1
        for _ in range(6):
            mask = int(rng.integers(1, 1 << (n - 1)))
            alpha = float(rng.uniform(-4, 4))
            block = ds.from_thetas(n, ds.controlled_block_angles(n, mask, alpha))
            expected = np.zeros(dim)
            for j in ds.conditioned_states(mask, n - 1):
                expected[j - 1] += alpha
                if j < dim:
                    expected[j] -= alpha
            assert wrapped_max_diff(ds.obstruction(block), expected) <= 1e-12


def test_reference_synthesis_angles(reference_ctrl_u3):
    system = ds.controlled_block_matrix(3)
    alphas = ds.solve_block_angles(system, ds.obstruction(reference_ctrl_u3))
    assert np.abs(alphas - np.array([-1, -4, 2]) * PI / 6).max() <= 1e-12


def test_reference_synthesis_remainder_and_quotient(reference_ctrl_u3):
    system = ds.controlled_block_matrix(3)
    alphas = ds.solve_block_angles(system, ds.obstruction(reference_ctrl_u3))
    remainder = reference_ctrl_u3.thetas
    for mask, alpha in zip(system.column_subsets, alphas):
        remainder = remainder + ds.controlled_block_angles(3, mask, -alpha)
    expected = np.array([12, 6, 20, 14, 9, 3, 9, 3]) * PI / 12
    assert np.abs(remainder - expected).max() <= 1e-12
    split = ds.tensor_split(ds.from_thetas(3, remainder), 1e-9)
    assert np.abs(split.v.thetas - np.array([0, 8, -3, -3]) * PI / 12).max() <= 1e-12


def test_reference_synthesis_structure(reference_ctrl_u3):
    circuit, report = ds.synth_controlled(reference_ctrl_u3)
    assert report.counts["mcrz"] == 4
    assert report.counts["rz"] == 3
    assert report.blocks + report.counts["rz"] == 7  # 2**3 - 1
    assert ds.verify(circuit, reference_ctrl_u3) <= 1e-12
    # first level blocks appear in dictionary order after the bare rotation
    mcrz = [g for g in circuit.gates if isinstance(g, ds.MCRZ) and g.target == 3]
    assert [g.controls for g in mcrz] == [(1,), (1, 2), (2,)]
    assert np.abs(np.array([g.alpha for g in mcrz]) - np.array([-1, -4, 2]) * PI / 6).max() <= 1e-12


def test_identity_synthesizes_to_nothing():
    circuit, report = ds.synth_controlled(ds.DiagonalUnitary.identity(4))
    assert circuit.gates == ()
    assert report.blocks == 0 and report.elementary == 0


def test_generic_block_count_and_equivalence():
    rng = np.random.default_rng(42)
    for n in range(1, 7):
        u = random_diagonal(n, rng)
        circuit, report = ds.synth_controlled(u)
        assert report.counts["rz"] + report.counts["mcrz"] == 2**n - 1
        assert ds.verify(circuit, u) <= 1e-8


def test_five_qubit_block_total():
    rng = np.random.default_rng(43)
    u = random_diagonal(5, rng)
    circuit, report = ds.synth_controlled(u)
    assert report.counts["rz"] + report.counts["mcrz"] == 31
    assert ds.verify(circuit, u) <= 1e-8


def test_agrees_with_parity_route():
    rng = np.random.default_rng(44)
    for n in (2, 3, 4, 6):
        u = random_diagonal(n, rng)
        c1, _ = ds.synth_xor(u)
        c2, _ = ds.synth_controlled(u)
        d1 = ds.circuit_to_diagonal(c1)
        d2 = ds.circuit_to_diagonal(c2)
        assert ds.equal_up_to_global_phase(d1, d2, 1e-10)
