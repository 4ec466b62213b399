from collections import defaultdict
from fractions import Fraction

import pytest

from mlqtasep.chains import build_tasep_chain
from mlqtasep.core import build_composition, bully_projection, word_label
from mlqtasep.sim import (
    AbsorbingStateError,
    EmpiricalDistribution,
    SimConfig,
    build_process_chain,
    compare_to_exact,
    gillespie_run,
    to_csv,
    total_variation,
)
from mlqtasep.solve import stationary_solve


def _config(**overrides):
    base = dict(
        process="tasep",
        m=(1, 1, 1),
        rates=(Fraction(2), Fraction(1)),
        seed=7,
        events=50_000,
    )
    base.update(overrides)
    return SimConfig(**base)


def test_determinism():
    a = gillespie_run(_config())
    b = gillespie_run(_config())
    assert a.fractions == b.fractions
    assert a.total_time == b.total_time
    c = gillespie_run(_config(seed=8))
    assert c.fractions != a.fractions


def test_tasep_matches_exact_target():
    cfg = _config(events=200_000)
    emp = gillespie_run(cfg)
    chain = build_tasep_chain(build_composition((1, 1, 1)))
    exact = stationary_solve(chain, cfg.rates)
    assert exact == [3, 2, 2, 3, 3, 2]
    report = compare_to_exact(emp, exact, tolerance=0.02)
    assert report["passed"], report["tv"]


def test_uniform_multiline_target():
    cfg = _config(process="fm", m=(1, 1, 1), rates=(Fraction(1), Fraction(1)), events=100_000)
    emp = gillespie_run(cfg)
    report = compare_to_exact(emp, [1] * 9, tolerance=0.02)
    assert report["passed"], report["tv"]


def test_tv_shrinks_with_horizon():
    chain = build_tasep_chain(build_composition((1, 1, 1)))
    exact = stationary_solve(chain, (Fraction(2), Fraction(1)))
    small = compare_to_exact(gillespie_run(_config(events=10_000)), exact, 1.0)
    large = compare_to_exact(gillespie_run(_config(events=1_000_000)), exact, 1.0)
    assert large["tv"] < small["tv"]


def test_sample_level_lumping():
    cfg = _config(process="coupe", events=100_000)
    chain = build_process_chain("coupe", build_composition(cfg.m))
    emp = gillespie_run(cfg, chain)
    by_word = defaultdict(float)
    for q, fraction in zip(chain.states, emp.fractions):
        by_word[word_label(bully_projection(q).word)] += fraction
    word_chain = build_tasep_chain(build_composition(cfg.m))
    exact = stationary_solve(word_chain, cfg.rates)
    labels = [word_chain.state_label(i) for i in range(6)]
    projected = EmpiricalDistribution(
        labels=labels,
        fractions=[by_word[label] for label in labels],
        total_time=emp.total_time,
        events=emp.events,
    )
    report = compare_to_exact(projected, exact, tolerance=0.02)
    assert report["passed"], report["tv"]


def test_compare_to_exact_edges():
    emp = EmpiricalDistribution(
        labels=["a", "b"], fractions=[0.5, 0.5], total_time=1.0, events=100
    )
    assert compare_to_exact(emp, [1, 1], 0.01)["tv"] == 0.0
    lopsided = compare_to_exact(emp, [1, 0], 0.01)
    assert lopsided["tv"] == pytest.approx(0.5)
    assert not lopsided["passed"]
    with pytest.raises(ValueError):
        compare_to_exact(emp, [1, 1, 1], 0.01)
    assert total_variation([1.0, 0.0], [0.0, 1.0]) == 1.0


def test_absorbing_state_detected():
    from mlqtasep.chains import ChainGraph, TransitionRecord
    from mlqtasep.poly import LaurentPoly

    c = build_composition((1, 1))
    chain = ChainGraph(
        kind="custom",
        composition=c,
        states=((1, 2), (2, 1)),
        transitions=(TransitionRecord(0, 1, LaurentPoly.one(1), "a"),),
        nvars=1,
    )
    cfg = SimConfig(process="tasep", m=(1, 1), rates=(Fraction(1),), events=100, seed=3)
    with pytest.raises(AbsorbingStateError):
        gillespie_run(cfg, chain)


def test_csv_output_stable():
    emp = gillespie_run(_config(events=5_000))
    chain = build_tasep_chain(build_composition((1, 1, 1)))
    exact = stationary_solve(chain, (Fraction(2), Fraction(1)))
    report = compare_to_exact(emp, exact, 0.05)
    text = to_csv(emp, report)
    assert text.splitlines()[0] == "state,empirical,exact,z_score"
    assert len(text.splitlines()) == 7
    assert text == to_csv(gillespie_run(_config(events=5_000)), report)


def test_bad_config_rejected():
    with pytest.raises(ValueError):
        gillespie_run(_config(rates=(Fraction(0), Fraction(1))))
    with pytest.raises(ValueError):
        gillespie_run(_config(events=0))
    with pytest.raises(ValueError):
        build_process_chain("nonsense", build_composition((1, 1)))
