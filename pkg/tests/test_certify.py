"""Certificate construction, replay verification, thresholds, reports."""

from __future__ import annotations

import json
import math

import pytest

from ramseyforge import certify as ce
from ramseyforge import geometry as geo
from ramseyforge import graphcore as gc
from ramseyforge.graphcore import ForbiddenPattern

E2 = math.e**2


def test_t_pseudo_values():
    assert ce.t_pseudo(57, 8) == 233  # 232.934... by direct evaluation
    assert ce.t_pseudo(3, 4) == 2
    assert ce.t_pseudo(3, 8) == 1
    # doubling d halves the pre-ceiling value
    assert 2 * 50 * math.log(50) ** 2 / 20 == (2 * 50 * math.log(50) ** 2 / 10) / 2
    with pytest.raises(ValueError):
        ce.t_pseudo(2, 1)
    with pytest.raises(ValueError):
        ce.t_pseudo(3, 0)


def test_t_transfer_values():
    assert ce.t_transfer(63, 9, 4) == 7691  # 7690.17... by direct evaluation
    assert ce.t_transfer(12, 4, 3) == 1581
    assert ce.t_transfer(10, 100, 600) == 1  # r*d beats 256 n ln^2 n
    # scaling n -> 4n, r -> 2r, d -> 2d keeps the pre-log factor
    assert 256 * 4 * 63 / (18 * 8) == 256 * 63 / (9 * 4)
    with pytest.raises(ValueError):
        ce.t_transfer(0, 1, 1)


def test_default_probability():
    assert ce.default_probability(57, math.sqrt(7)) == pytest.approx(
        math.log(57) ** 2 / (4 * E2 * math.sqrt(7))
    )
    assert ce.default_probability(57, 0.01) == 1.0  # expression > 1, clamped
    assert ce.default_probability(2, 5.0) == 1.0


def test_sampled_vertices():
    s = ce.sampled_vertices(4000, 0.3, 7)
    assert s == ce.sampled_vertices(4000, 0.3, 7)
    assert s != ce.sampled_vertices(4000, 0.3, 8)
    assert abs(len(s) / 4000 - 0.3) < 0.05
    assert ce.sampled_vertices(10, 1.0, 3) == list(range(10))
    with pytest.raises(ValueError):
        ce.sampled_vertices(5, 0.0, 1)
    with pytest.raises(ValueError):
        ce.sampled_vertices(5, 1.5, 1)


@pytest.fixture(scope="module")
def er3():
    return geo.polarity_graph(3)


def test_certificate_er7_roundtrip():
    G = geo.polarity_graph(7)
    alpha = gc.independence_number(G).value
    assert alpha == 15
    cert = ce.sample_and_delete(G, ForbiddenPattern.c4(), alpha + 1, 1.0, 0, "er", {"q": 7})
    assert cert.valid and cert.witness_count == 57
    assert cert.deletion_trace == ()  # alpha < t already
    assert cert.claim() == "r(c4, 16) > 57"
    assert cert.params == {"q": 7, "p": 1.0}
    rt = ce.RamseyCertificate.from_json(cert.to_json())
    assert rt == cert
    assert ce.verify_certificate(rt).status == "VALID"


def test_deletion_loop(er3):
    alpha = gc.independence_number(er3).value
    assert alpha == 5
    cert = ce.sample_and_delete(er3, ForbiddenPattern.c4(), alpha, 1.0, 5, "er", {"q": 3})
    assert cert.valid
    assert cert.witness_count == er3.n - len(cert.deletion_trace)
    assert cert.deletion_trace == (4, 1, 8)  # canonical tie-breaking, pinned
    sub = er3.induced(sorted(set(range(er3.n)) - set(cert.deletion_trace)))
    assert gc.independence_number(sub).value < alpha
    # p=1 is fully deterministic
    assert cert == ce.sample_and_delete(er3, ForbiddenPattern.c4(), alpha, 1.0, 5, "er", {"q": 3})
    assert ce.verify_certificate(cert).status == "VALID"


def test_degenerate_t_empties_witness(er3):
    cert = ce.sample_and_delete(er3, ForbiddenPattern.c4(), 1, 1.0, 5, "er", {"q": 3})
    assert cert.witness_count == 0
    assert len(cert.deletion_trace) == er3.n
    assert cert.valid and ce.verify_certificate(cert).status == "VALID"


def test_subsampled_certificate_replays(er3):
    cert = ce.sample_and_delete(er3, ForbiddenPattern.c4(), 5, 0.7, 11, "er", {"q": 3})
    assert cert.params["p"] == 0.7
    assert cert.witness_count <= er3.n
    assert ce.verify_certificate(cert).status == "VALID"


def test_ambient_must_be_pattern_free(er3):
    with pytest.raises(ValueError, match="contains k3"):
        ce.sample_and_delete(er3, ForbiddenPattern.clique(3), 5, 1.0, 0, "er", {"q": 3})
    with pytest.raises(ValueError):
        ce.sample_and_delete(er3, ForbiddenPattern.c4(), 0, 1.0, 0, "er", {"q": 3})


def test_budget_exhaustion_never_valid(er3):
    cert = ce.sample_and_delete(er3, ForbiddenPattern.c4(), 5, 1.0, 0, "er", {"q": 3}, budget=1)
    assert not cert.valid  # loop could not be decided
    assert ce.verify_certificate(cert).status == "INVALID"  # alpha(ER_3) = 5
    good = ce.sample_and_delete(er3, ForbiddenPattern.c4(), 5, 1.0, 5, "er", {"q": 3})
    res = ce.verify_certificate(good, budget=1)
    assert res.status == "UNVERIFIED" and not res.valid


def test_mutated_certificates_rejected():
    G = geo.polarity_graph(7)
    cert = ce.sample_and_delete(G, ForbiddenPattern.c4(), 16, 1.0, 0, "er", {"q": 7})
    raw = json.loads(cert.to_json())

    def verify(**changes):
        mutated = ce.RamseyCertificate.from_json(json.dumps({**raw, **changes}))
        return ce.verify_certificate(mutated).status

    assert verify(witnessCount=58) == "INVALID"  # one phantom vertex
    assert verify(deletionTrace=[0]) == "INVALID"
    assert verify(deletionTrace=[99]) == "INVALID"
    assert verify(t=15) == "INVALID"  # alpha = 15 is no longer < t
    assert verify(family="nope") == "INVALID"
    assert verify(params={}) == "INVALID"  # construction params gone
    assert verify(t=17) == "VALID"  # raising t only weakens the claim


def test_verify_ignores_embedded_valid_bit():
    G = geo.polarity_graph(3)
    cert = ce.sample_and_delete(G, ForbiddenPattern.c4(), 6, 1.0, 0, "er", {"q": 3})
    lie = ce.RamseyCertificate.from_json(
        json.dumps({**json.loads(cert.to_json()), "t": 5, "valid": True})
    )
    assert ce.verify_certificate(lie).status == "INVALID"


def test_build_family_dispatch():
    assert ce.build_family("er", {"q": 3}).n == 13
    assert ce.build_family("bip", {"q": 5, "s": 2}).n == 10
    G = ce.build_family("unital-transfer", {"q": 2, "colorSeed": 9})
    assert G.n == 12
    with pytest.raises(ValueError):
        ce.build_family("er7", {"q": 7})


def test_pipeline_unital_small():
    best = ce.pipeline_unital(2, 3, 42)
    assert best.family == "unital-transfer"
    assert best.t == 1581 and best.witness_count <= 12
    assert best.valid
    assert ce.verify_certificate(best).status == "VALID"
    assert best.pattern == "k4"


def test_pipeline_unital_forced_deletions():
    best = ce.pipeline_unital(3, 4, 7, t=12)
    assert best.valid and best.deletion_trace
    assert best.witness_count + len(best.deletion_trace) == 63
    assert ce.verify_certificate(best).status == "VALID"
    # reproducible
    again = ce.pipeline_unital(3, 4, 7, t=12)
    assert again == best


def test_pipeline_guards():
    with pytest.raises(ValueError):
        ce.pipeline_unital(5, 1, 0)
    with pytest.raises(ValueError):
        ce.pipeline_unital(2, 0, 0)


def test_report_rst_gate_equality():
    n = 100
    lam = math.log(n) ** 2 / (4 * E2)
    rep = ce.report_rst(n, 10, lam, 3)
    assert rep.lower_bound == pytest.approx(n / 2)
    gate = rep.gates["lambdaGate"]
    assert gate["ok"] and gate["lhs"] == pytest.approx(gate["rhs"])
    assert rep.t == ce.t_pseudo(100, 10)


def test_report_rst_values():
    rep = ce.report_rst(57, 8, math.sqrt(7), 3)
    assert rep.lower_bound == pytest.approx(57 * math.log(57) ** 2 / (8 * E2 * math.sqrt(7)))
    assert rep.gates["lambdaGate"]["ok"]
    assert rep.gates["ssvRatio"] == pytest.approx(8 / (7**0.5 * 57) ** 0.5, rel=1e-9)
    # K_{n,n} shape: lambda = d gives ssv ratio sqrt(d/n)
    assert ce.report_rst(50, 25, 25.0, 3).gates["ssvRatio"] == pytest.approx(math.sqrt(0.5))
    assert ce.report_rst(1000, 100, 10.0, 4).gates["ssvRatio"] == pytest.approx(
        100 / (10 ** (1 / 3) * 1000 ** (2 / 3))
    )
    for bad in [(2, 1, 1.0, 3), (5, 0, 1.0, 3), (5, 1, 0.0, 3), (5, 1, 1.0, 2)]:
        with pytest.raises(ValueError):
            ce.report_rst(*bad)
