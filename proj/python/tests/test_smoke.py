import numpy as np
import pytest

import bsinterp as b


def commuting_pair():
    z = np.array([[0.3, 0.2], [0.0, -0.4]], dtype=complex)
    return [z, 0.5 * z @ z + 0.1 * z]


def test_kappa_and_bscr():
    assert b.kappa(3, 2, 4) == 1
    assert b.kappa(5, 1, 4) == 1
    for s in range(8):
        for t in range(8):
            assert b.bscr_check(4, s, t) == 0.0
    q = b.bscr_q(4, 1, 2)
    assert q.shape == (4, 4)
    assert q.dtype == np.complex128


def test_eval_matches_integer_powers():
    pair = commuting_pair()
    e = b.eval_discretized(pair, 3, [3, 0])
    assert e.shape == (18, 18)
    np.testing.assert_allclose(e, np.kron(np.eye(9), pair[0]), atol=1e-15)


def test_compression_and_laws():
    pair = commuting_pair()
    c = b.compress_discretized(pair, 4, [1, 6])
    m = b.multilinear_compress(pair, [0.25, 1.5])
    np.testing.assert_allclose(c, m, atol=1e-12)
    rep = b.check_semigroup_laws(pair, 3)
    assert rep["pass"] is True
    assert rep["pairs_checked"] == 36 * 36
    assert rep["homomorphism"]["deviation"] <= 1e-10


def test_dilation_round_trip():
    s = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    cand = b.egervary_dilation(s, 4)
    rep = b.power_dilation_verify([s], cand)
    assert rep["pass"] is True
    mats, warnings = b.parrott_tuple(np.array([[0, 1], [1, 0]]), np.array([[1, 0], [0, -1]]))
    assert len(mats) == 3 and warnings == []


def test_von_neumann():
    mats, poly = b.crabb_davie_fixture()
    assert len(mats) == 3
    rep = b.vn_check(mats, poly, 256)
    assert rep["verdict"] == "VIOLATED"
    assert rep["lhs"] == pytest.approx(4.0)
    one = {"d": 1, "terms": [{"alpha": [1], "coeff": [1.0, 0.0]}]}
    ts = b.torus_sup(one, 8)
    assert ts["grid_sup"] == pytest.approx(1.0)
    search = b.vn_search(2, 2, 5, 7, 32)
    assert search["violations_found"] == 0


def test_structure_and_errors():
    rep = b.structure_report(np.eye(3))
    assert rep["flags"]["is_unitary"] is True
    assert b.bimarkov_check(np.full((2, 2), 0.5))
    assert b.op_norm(np.diag([0.5, -2.0])) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        b.eval_discretized([2.0 * np.eye(2)], 2, [1])
    with pytest.raises(b.InputError):
        b.bscr_check(0, 0, 0)
    sweep = b.approx_error_sweep([np.diag([-1.0, -2.0])], [0.5, 0.25], 1.0, 4)
    assert [row["eps"] for row in sweep] == [0.5, 0.25]
