import numpy as np
import pytest

from jampack.configuration import Configuration
from jampack.construction import assemble_square, five_disc_config
from jampack.metropolis import (ChainParams, ChainStats, escape_experiment,
                                metropolis_step, run_chain, shrink_radius)


def _free_disc():
    return Configuration(0.1, [[0.5, 0.5]], (1.0, 1.0))


def test_params_validation():
    with pytest.raises(ValueError):
        ChainParams(steps=0, step_radius=0.1)
    with pytest.raises(ValueError):
        ChainParams(steps=10, step_radius=0.0)


def test_single_free_disc_always_accepts():
    # 7 steps of size <= 0.05 cannot carry the disc from the center into a
    # wall, so geometry forces every acceptance
    _, stats = run_chain(_free_disc(), ChainParams(7, 0.05, seed=1))
    assert stats.accepted == 7
    assert stats.acceptance_rate == 1.0


def test_step_determinism():
    p = ChainParams(1, 0.05, seed=42)
    out = []
    for _ in range(2):
        rng = np.random.default_rng(123)
        cfg, acc = metropolis_step(_free_disc(), p, rng)
        out.append((cfg.centers.copy(), acc))
    assert np.array_equal(out[0][0], out[1][0])
    assert out[0][1] == out[1][1]


def test_run_chain_matches_manual_stepping():
    config = five_disc_config()
    config = shrink_radius(config, 0.95)
    params = ChainParams(500, config.radius, seed=9)
    final, stats = run_chain(config, params)

    rng = np.random.default_rng(9)
    cur = config
    accepted = 0
    for _ in range(params.steps):
        cur, acc = metropolis_step(cur, params, rng)
        accepted += acc
    assert accepted == stats.accepted
    assert np.array_equal(cur.centers, final.centers)


def test_rejected_step_leaves_config_identical():
    config = five_disc_config()
    params = ChainParams(1, config.radius, seed=0)
    rng = np.random.default_rng(0)
    before = config.centers.copy()
    out, acc = metropolis_step(config, params, rng)
    assert not acc
    assert out is config
    assert np.array_equal(config.centers, before)


def test_chain_determinism_same_seed():
    config = shrink_radius(five_disc_config(), 0.9)
    params = ChainParams(2000, config.radius, seed=777)
    f1, s1 = run_chain(config, params)
    f2, s2 = run_chain(config, params)
    assert np.array_equal(f1.centers, f2.centers)
    assert s1.accepted == s2.accepted


def test_invalid_input_rejected():
    bad = Configuration(1.0, [[0.0, 0.0], [1.5, 0.0]])
    with pytest.raises(ValueError):
        run_chain(bad, ChainParams(10, 0.5))


def test_five_disc_chain_is_frozen():
    config = five_disc_config()
    _, stats = run_chain(config, ChainParams(100000, config.radius, seed=3))
    assert stats.accepted == 0
    assert stats.max_center_displacement == 0.0


def test_square_assembly_admits_finite_hops():
    # discs with near-collinear contact pairs can jump past their neighbors
    # when the proposal radius equals the disc radius, even though every
    # disc is jammed against infinitesimal motion
    config, _ = assemble_square(4)
    _, stats = run_chain(config, ChainParams(2000, config.radius, seed=7))
    assert stats.accepted > 0


def test_shrink_radius():
    config = five_disc_config()
    assert shrink_radius(config, 1.0).radius == config.radius
    shrunk = shrink_radius(config, 0.99)
    assert shrunk.radius == pytest.approx(0.99 * config.radius)
    assert np.array_equal(shrunk.centers, config.centers)
    with pytest.raises(ValueError):
        shrink_radius(config, 0.0)
    with pytest.raises(ValueError):
        shrink_radius(config, 1.5)


def test_escape_experiment_table():
    config = five_disc_config()
    params = ChainParams(20000, config.radius, seed=11)
    table = escape_experiment(config, [1.0, 0.95], params)
    assert set(table) == {1.0, 0.95}
    assert table[1.0].accepted == 0
    assert table[0.95].accepted > 0
    assert isinstance(table[0.95], ChainStats)


def test_validity_preserved_along_chain():
    from jampack.verifier import overlap_audit
    config = shrink_radius(five_disc_config(), 0.9)
    final, stats = run_chain(config, ChainParams(5000, config.radius, seed=2))
    assert stats.accepted > 0
    assert overlap_audit(final).pairs == []
    r = final.radius
    assert np.all(final.centers >= r - 1e-12)
    assert np.all(final.centers <= 1.0 - r + 1e-12)
