"""Acceptance criteria. Each test carries a `criterion` marker and the
terminal summary prints one PASS/FAIL line per criterion."""

import math

import numpy as np
import pytest

from citebenford import (
    DigitDistribution,
    GeneratorSpec,
    Law,
    Verdict,
    chi_square,
    chi_square_critical,
    classical,
    conformity_test,
    expected_counts,
    first_digit,
    generalized,
    generate,
    p_value,
    probability_vector,
    tally,
    uniform,
    validate_snapshot,
)
from citebenford import fixtures
from citebenford.chart import render_svg
from citebenford.gof import reported_verdict
from citebenford.report import analyze, render_csv, render_json, render_table

criterion = pytest.mark.criterion

SN13 = (78, 53, 29, 22, 15, 11, 11, 6, 6)
FB13 = (140, 90, 54, 47, 33, 27, 28, 13, 17)
SN15 = (112, 59, 36, 39, 24, 18, 23, 13, 9)
FB15 = (206, 104, 76, 69, 48, 39, 44, 27, 22)
SERIES_TABLES = ("table3", "table4", "table6", "table7")


def chi2_of(counts, model=None):
    return conformity_test(DigitDistribution(10, counts), model or classical()).chi2


@criterion(1, "classical probabilities at 3 d.p.")
def test_classical_probabilities_three_places():
    printed = [0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046]
    got = [round(p, 3) for p in probability_vector(classical(10))]
    assert got == printed


@criterion(2, "two-window chi2 values")
@pytest.mark.parametrize("counts, printed", [(SN13, 11.919), (FB13, 7.623)], ids=["SN", "FB"])
def test_two_window_chi2(counts, printed):
    assert sum(counts) in (231, 449)
    assert abs(chi2_of(counts) - printed) <= 0.05


@criterion(2, "two-window expected and error cells at 1 d.p.")
@pytest.mark.parametrize("name, counts", [("table2_sn", SN13), ("table2_fb", FB13)], ids=["SN", "FB"])
def test_two_window_cells(name, counts):
    fixture = fixtures.load_distribution(name)
    assert fixture.distribution.counts == counts
    exp = expected_counts(classical(), sum(counts))
    bad = []
    for d, (e, s, pe, ps) in enumerate(
        zip(exp.expected, exp.errors, fixture.reference["expected"], fixture.reference["errors"]), start=1
    ):
        if abs(round(e, 1) - pe) > 0.05 + 1e-9:
            bad.append(f"d={d} expected {e:.4f} vs printed {pe}")
        if abs(round(s, 1) - ps) > 0.05 + 1e-9:
            bad.append(f"d={d} error {s:.4f} vs printed {ps}")
    assert not bad, "; ".join(bad)


@criterion(3, "extended-window chi2 values")
@pytest.mark.parametrize("counts, n, printed", [(SN15, 333, 8.792), (FB15, 635, 7.176)], ids=["SN", "FB"])
def test_extended_window_chi2(counts, n, printed):
    assert sum(counts) == n
    assert abs(chi2_of(counts) - printed) <= 0.05


@criterion(4, "critical value and p-value at df 8")
def test_critical_value():
    assert abs(chi_square_critical(8, 0.05) - 15.507) <= 0.001
    assert abs(p_value(15.507, 8) - 0.0500) <= 0.0002


@criterion(5, "every printed series chi2 conforms")
def test_verdict_sweep():
    values = [
        (name, s.label, s.reported_chi2)
        for name in SERIES_TABLES
        for s in fixtures.load_series(name).snapshots
    ]
    # the four series tables print 3 + 3 + 11 + 18 values
    assert len(values) == 35
    rejected = [v for v in values if reported_verdict(v[2], 10, 0.05).verdict is not Verdict.CONFORMS]
    assert not rejected


@criterion(6, "series bookkeeping totals reconcile")
@pytest.mark.parametrize("name", SERIES_TABLES)
def test_bookkeeping(name):
    failures = []
    for s in fixtures.load_series(name).snapshots:
        try:
            validate_snapshot(s)
        except Exception as exc:  # collect every row, not only the first
            failures.append(str(exc))
    assert not failures, "; ".join(failures)


@criterion(6, "worked bookkeeping examples")
def test_bookkeeping_examples():
    rows = {(s.total_citations, s.uncited, s.cited) for n in SERIES_TABLES for s in fixtures.load_series(n).snapshots}
    assert (410, 179, 231) in rows
    assert (1060, 421, 639) in rows


@criterion(7, "model normalization")
@pytest.mark.parametrize("base", [2, 3, 8, 10, 16, 36])
@pytest.mark.parametrize("beta", [None, 0.3, 0.999, 1.0, 1.5, 3.0])
def test_normalization(base, beta):
    for model in (classical(base) if beta is None else generalized(beta, base), uniform(base)):
        assert abs(math.fsum(probability_vector(model)) - 1.0) <= 1e-12


@criterion(7, "generalized law continuous at beta 1")
@pytest.mark.parametrize("base", [3, 10, 16])
def test_beta_continuity(base):
    ref = probability_vector(classical(base))
    for eps in (1e-6, 1e-8, 1e-10):
        for beta in (1 - eps, 1 + eps):
            assert max(abs(a - b) for a, b in zip(probability_vector(generalized(beta, base)), ref)) <= 1e-5


@criterion(7, "first digit invariant under base powers")
def test_scale_invariance():
    rng = np.random.default_rng(20131)
    for base in (2, 3, 7, 10, 16, 36):
        for n in rng.integers(1, 10**9, 300):
            n = int(n)
            for k in (1, 2, 5):
                assert first_digit(n * base**k, base) == first_digit(n, base)
    # powers of two scale a float exactly
    for x in rng.uniform(1e-3, 1e6, 500):
        x = float(x)
        for k in (-8, -1, 3, 12):
            assert first_digit(math.ldexp(x, k), 2) == 1
            assert first_digit(math.ldexp(x, 4 * k), 16) == first_digit(x, 16)


@criterion(7, "chi2 of a distribution against itself is zero")
@pytest.mark.parametrize("counts", [SN13, FB13, SN15, FB15])
def test_chi2_self_zero(counts):
    from citebenford.gof import ExpectedDistribution

    dist = DigitDistribution(10, counts)
    own = ExpectedDistribution(tuple(float(c) for c in counts), (0.0,) * 9, dist.N, classical())
    assert chi_square(dist, own) == 0.0


@criterion(7, "p-value and critical value invert each other")
@pytest.mark.parametrize("df", [1, 2, 5, 8, 14, 34, 100])
@pytest.mark.parametrize("alpha", [0.01, 0.05, 0.1, 0.5])
def test_round_trip(df, alpha):
    assert abs(p_value(chi_square_critical(df, alpha), df) - alpha) <= 1e-4


SEEDS = range(1, 501)


@criterion(7, "benford samples conform 93-97% of the time")
def test_sampler_acceptance_rate():
    accepted = sum(
        conformity_test(tally(generate(GeneratorSpec(Law.BENFORD_EXACT, 500, seed=s))), classical()).conforms
        for s in SEEDS
    )
    assert 465 <= accepted <= 485, f"acceptance {accepted / 5:.1f}%"


@criterion(7, "uniform-digit samples rejected over 99% of the time")
def test_uniform_digit_rejection_rate():
    rejected = sum(
        not conformity_test(tally(generate(GeneratorSpec(Law.UNIFORM_DIGIT, 500, seed=s))), classical()).conforms
        for s in SEEDS
    )
    assert rejected > 495, f"rejection {rejected / 5:.1f}%"


@criterion(8, "synthetic sequences are bit-identical per seed")
@pytest.mark.parametrize("law, beta", [(Law.BENFORD_EXACT, None), (Law.UNIFORM_DIGIT, None), (Law.ZIPF, 1.4), (Law.ZIPF, 1.0)])
def test_synth_determinism(law, beta):
    spec = GeneratorSpec(law, 2000, seed=77, beta=beta)
    a, b = generate(spec), generate(spec)
    assert a.tobytes() == b.tobytes()
    assert generate(GeneratorSpec(law, 2000, seed=78, beta=beta)).tobytes() != a.tobytes()


@criterion(8, "reports and charts are byte-identical")
def test_emission_determinism():
    def build():
        return analyze(DigitDistribution(10, FB15), classical(), 0.05, "FB-2015")

    for render in (render_table, render_csv, render_json, render_svg):
        assert render(build()).encode() == render(build()).encode()
