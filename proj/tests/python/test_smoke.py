"""Smoke tests for the python module."""

import netcg
import pytest


def test_gamma_21_2_1():
    g = netcg.construction2(7, 3, 2, 1)
    assert g.n == 21
    assert g.m == 42
    assert g.valency() == 4
    assert netcg.automorphism_order(g) == 336
    assert netcg.is_vertex_primitive(g)


def test_flag_graph_identification():
    g = netcg.construction2(7, 3, 2, 1)
    f = netcg.flag_graph_pg(2)
    assert netcg.are_isomorphic(g, f)
    assert netcg.canonical_fingerprint(g) == netcg.canonical_fingerprint(f)


def test_incidence_identifications():
    assert netcg.are_isomorphic(netcg.construction2(7, 2, 3, 1), netcg.incidence_graph_pg(2))
    assert netcg.are_isomorphic(netcg.construction2(11, 2, 5, 1),
                                netcg.incidence_graph_biplane())


def test_net_verdict():
    v = netcg.net_verdict(7, 3, 2, 1)
    assert v["is_net"]
    assert not v["is_arc_transitive"]
    v14 = netcg.net_verdict(7, 2, 3, 1)
    assert v14["is_net"]
    assert v14["is_arc_transitive"]


def test_valid_params():
    assert netcg.valid_params(5, 3) == [(1, 1, 0), (1, 2, 0), (1, 4, 2)]


def test_predicted_aut_order():
    assert netcg.predicted_aut_order(11, 5, 2, 1) == 110
    assert netcg.predicted_aut_order(13, 3, 3, 1) == 234
    assert netcg.predicted_aut_order(7, 3, 2, 1) is None  # exceptional


def test_classify():
    rows = netcg.classify(11, 5)
    assert all(r["match"] for r in rows)
    ell2 = [r for r in rows if r["graph"].startswith("Gamma(55,2")]
    assert len(ell2) == 2


def test_abelian():
    g = netcg.gamma_abelian(5, 3, 1, 4, 2)
    assert g.n == 15
    assert g.valency() == 2
    with pytest.raises(netcg.NetcgError):
        netcg.gamma_abelian(5, 3, 1, 2, 1)


def test_prime_square():
    assert netcg.gamma_prime_square(3, 2, "lex").valency() == 6
    assert netcg.gamma_prime_square(3, 2, "units").valency() == 2
    assert netcg.gamma_prime_square(5, 2, "diag", (2, 2, 0)).valency() == 4


def test_serialize_roundtrip():
    g = netcg.construction2(7, 3, 2, 1)
    text = netcg.serialize(g)
    assert text.startswith("NETCG v1 21 42\n")
    assert netcg.parse(text) == g


def test_errors_are_typed():
    with pytest.raises(netcg.NetcgError):
        netcg.construction2(7, 3, 1, 1)
