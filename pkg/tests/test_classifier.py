from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from symbreak import constructions as c
from symbreak.catalog import BRANCHES, CATALOG, REQUIRED_BRANCHES, UNREACHABLE_BRANCHES, catalog_graphs, entry
from symbreak.classifier import (
    ClassificationError,
    classify,
    cubic_expected_d,
    exceptional_family,
    verify_theorem,
)
from symbreak.colourings import PreconditionError, recognize_wreath
from symbreak.distinguishing import distinguishing_number, is_distinguishing
from symbreak.graph import disjoint_union
from tests.strategies import four_valent_circulants


def test_catalog_shape():
    names = [e.name for e in CATALOG]
    assert len(names) == len(set(names))
    four = catalog_graphs(4)
    assert len([n for n, _ in four if entry(n).exceptional is None]) >= 40
    assert {e.branch for e in CATALOG if e.branch} == REQUIRED_BRANCHES
    assert REQUIRED_BRANCHES | UNREACHABLE_BRANCHES == set(BRANCHES)


@pytest.mark.parametrize(("graph", "family"), [
    (c.complete(5), "K5"), (c.complete_bipartite(4), "K44_W4"), (c.named("k3_box_k3"), "K3boxK3"),
    (c.named("k4_box_k2"), "K4boxK2"), (c.named("k5_tensor_k2"), "K5xK2"), (c.wreath(3), "W3"),
    (c.wreath(9), "W9"), (c.hypercube(4), None), (c.cage46(), None), (c.petersen(), None),
])
def test_exceptional_family(graph, family):
    assert exceptional_family(graph) == family


def test_cubic_expected_d():
    assert [cubic_expected_d(g) for g in (c.complete(4), c.complete_bipartite(3), c.hypercube(3), c.petersen(),
                                           c.heawood())] == [4, 4, 3, 3, 2]


@pytest.mark.parametrize(("graph", "name", "d"), [
    (c.wreath(7), "W7", 3), (c.complete_bipartite(4), "K44_W4", 5), (c.named("k5_tensor_k2"), "K5xK2", 3),
])
def test_classify_exceptional(graph, name, d):
    cert = classify(graph)
    assert cert.exceptional.name == name and cert.D == d


@pytest.mark.parametrize("graph", [c.cage46(), c.circulant(12, [1, 2]), c.circulant(11, [1, 3])])
def test_classify_non_exceptional(graph):
    cert = classify(graph)
    assert cert.exceptional is None and cert.verified
    assert is_distinguishing(graph, cert.colouring)


def test_classify_rejects_ineligible():
    with pytest.raises(PreconditionError):
        classify(c.petersen())


def test_classification_error_is_distinct():
    assert not issubclass(ClassificationError, PreconditionError)


def test_verify_exceptional_catalog():
    graphs = [c.complete(5), c.complete_bipartite(4), c.named("k3_box_k3"), c.named("k4_box_k2"),
              c.named("k5_tensor_k2")] + [c.wreath(n) for n in (3, 5, 6, 7, 8)]
    report = verify_theorem(graphs)
    assert report.ok
    by_name = {r.exceptional: r.D for r in report.rows}
    assert by_name == {"K5": 5, "K44_W4": 5, "K3boxK3": 3, "K4boxK2": 3, "K5xK2": 3,
                       "W3": 3, "W5": 3, "W6": 3, "W7": 3, "W8": 3}


def test_verify_non_exceptional_catalog():
    graphs = [c.hypercube(4), c.cage46(), c.heawood_bipcomp()]
    graphs += [c.circulant(n, [1, 2]) for n in range(7, 16)]
    graphs += [c.cycle_of_k33(n) for n in range(2, 6)]
    report = verify_theorem(graphs, confirm_upto=16)
    assert report.ok
    assert all(r.exceptional is None and r.D == 2 for r in report.rows)
    assert sum(r.note == "exact D = 2 confirmed" for r in report.rows) == 12


def test_verify_skips_disconnected():
    report = verify_theorem([("two K5", disjoint_union(c.complete(5), c.complete(5))), ("K5", c.complete(5)),
                             ("petersen", c.petersen()), ("K4", c.complete(4)), ("path", c.path(4))])
    status = {r.name: (r.status, r.note) for r in report.rows}
    assert status["two K5"] == ("skipped", "not connected")
    assert status["path"] == ("skipped", "not vertex-transitive")
    assert status["petersen"][0] == "ok" and status["K4"][0] == "ok"
    assert report.ok


def test_report_output_is_deterministic():
    graphs = [c.circulant(9, [1, 2]), c.complete(5)]
    a = verify_theorem(graphs)
    b = verify_theorem(list(reversed(graphs)))
    assert a.json_lines() == b.json_lines()
    summary = json.loads(a.json_lines().splitlines()[-1])["summary"]
    assert summary["status"] == "PASSED" and summary["counts"] == {"ok": 2}
    assert "PASSED" in a.table()


def test_missing_branch_fails_report():
    report = verify_theorem([c.complete(5)], required_branches=frozenset({"type2.single_cycle"}))
    assert not report.ok and report.missing_branches == ["type2.single_cycle"]


@settings(max_examples=25)
@given(four_valent_circulants())
def test_random_circulants_classified_consistently(params):
    n, a, b = params
    g = c.circulant(n, [a, b])
    cert = classify(g)
    family = exceptional_family(g)
    if cert.exceptional is None:
        assert family is None and is_distinguishing(g, cert.colouring)
    else:
        assert family == cert.exceptional.name


@pytest.mark.parametrize("n", range(3, 13))
def test_recognize_wreath_inverts_constructor(n):
    assert recognize_wreath(c.wreath(n)) == n


def test_two_colourable_verdict_matches_exact_search():
    for name, g in catalog_graphs(4):
        cert = classify(g)
        d, _ = distinguishing_number(g, k_max=5)
        assert (cert.exceptional is None) == (d == 2), name
        if cert.exceptional is not None:
            assert d == cert.D, name
