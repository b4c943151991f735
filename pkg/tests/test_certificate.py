import json

import pytest
from hypothesis import assume, given, settings

from linedist.certificate import (
    SCHEMA,
    certificate_from_json,
    certificate_to_json,
    verify_certificate,
)
from linedist.distinguish import break_symmetry
from linedist.exceptions import CapExceeded, IneligibleGraph, ParseError
from linedist.graph import build, complete, cycle, double_star, paw, path, star
from linedist.io import dumps
from linedist.linegraph import clusters

from conftest import graphs

K33 = build(6, [(u, v) for u in range(3) for v in range(3, 6)])
PRISM = build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


@pytest.fixture(scope="module")
def k4_json():
    return certificate_to_json(break_symmetry(complete(4)))


@pytest.mark.parametrize("g", [complete(4), complete(5), star(4), paw(), K33, PRISM,
                               double_star(2), cycle(6), cycle(9), path(1), path(2), path(6)])
def test_break_then_verify(g):
    cert = break_symmetry(g)
    report = verify_certificate(cert)
    assert report.ok, report.reason


@pytest.mark.parametrize("g", [complete(4), paw(), star(4)])
def test_remark_certificates_verify(g):
    report = verify_certificate(break_symmetry(g, remark_opt=True))
    assert report.ok, report.reason


def test_json_roundtrip(k4_json):
    text = dumps(k4_json)
    again = certificate_to_json(certificate_from_json(json.loads(text)))
    assert dumps(again) == text
    assert k4_json["schema"] == SCHEMA
    assert len(k4_json["coloring"]["bits"]) == 180


def _tampered(obj, **changes):
    return certificate_from_json({**obj, **changes})


def test_wrong_k(k4_json):
    assert not verify_certificate(_tampered(k4_json, K=k4_json["K"] + 1)).ok


def test_wrong_r(k4_json):
    report = verify_certificate(_tampered(k4_json, r=3))
    assert not report.ok


def test_wrong_counts(k4_json):
    counts = list(k4_json["ones_per_cluster"])
    counts[0], counts[1] = counts[1], counts[0]
    assert not verify_certificate(_tampered(k4_json, ones_per_cluster=counts)).ok


def test_wrong_graph(k4_json):
    other = {"n": 5, "edges": [[u, v] for u in range(5) for v in range(u + 1, 5)]}
    assert not verify_certificate(_tampered(k4_json, graph=other)).ok


def test_bit_flips_fail(k4_json):
    bits = k4_json["coloring"]["bits"]
    for i in range(0, len(bits), 7):
        flipped = bits[:i] + ("1" if bits[i] == "0" else "0") + bits[i + 1:]
        cert = _tampered(k4_json, coloring={"k": 2, "bits": flipped})
        report = verify_certificate(cert)
        assert not report.ok
        assert report.reason == "ones_per_cluster matches the coloring"


def test_colliding_counts_fail_even_if_declared(k4_json):
    # recolour so that two clusters carry the same count, and declare it
    cert = certificate_from_json(k4_json)
    bits = list(k4_json["coloring"]["bits"])
    zero = cert.ones_per_cluster.index(0)
    one = cert.ones_per_cluster.index(1)
    fam = clusters(cert.base, cert.r)
    bits[fam.clusters[zero][0]] = "1"
    counts = list(cert.ones_per_cluster)
    counts[zero] = 1
    report = verify_certificate(_tampered(k4_json, coloring={"k": 2, "bits": "".join(bits)},
                                          ones_per_cluster=counts))
    assert not report.ok
    assert report.reason == "cluster counts are pairwise distinct"
    assert counts[one] == 1


def test_direct_certificate_tamper():
    obj = certificate_to_json(break_symmetry(cycle(6)))
    assert verify_certificate(certificate_from_json(obj)).ok
    bad = {**obj, "coloring": {"k": 2, "bits": "000000"}}
    assert not verify_certificate(certificate_from_json(bad)).ok


@pytest.mark.parametrize("mutate", [
    lambda o: {**o, "schema": "other/1"},
    lambda o: {**o, "coloring": {"k": 2, "bits": "012"}},
    lambda o: {k: v for k, v in o.items() if k != "m"},
    lambda o: {**o, "graph": {"n": 2, "edges": [[0, 0]]}},
])
def test_malformed(k4_json, mutate):
    with pytest.raises(ParseError):
        certificate_from_json(mutate(k4_json))


def test_disconnected_graph_fails_verification(k4_json):
    obj = {**k4_json, "graph": {"n": 4, "edges": [[0, 1], [2, 3]]}}
    report = verify_certificate(certificate_from_json(obj))
    assert not report.ok and report.reason == "graph is connected"


@settings(max_examples=25)
@given(graphs(min_n=3, max_n=6, connected=True))
def test_break_then_verify_random(g):
    try:
        cert = break_symmetry(g, vertex_cap=20000)
    except (IneligibleGraph, CapExceeded):
        assume(False)
    report = verify_certificate(cert)
    assert report.ok, report.reason
