import json

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from egr import adg, census
from egr.adg import RelationSet, Side, Vertex
from egr.census import (
    BaseEdgeOnly,
    Exhaustive,
    Lcg,
    NonUniformCountsError,
    Sampled,
    certify,
    certify_relations,
    count_cycles_through_edge,
    count_cycles_total,
    girth,
)
from egr.families import Family, FamilySpec, relations
from egr.finite_field import Field


def spec(fam, q, idx=None):
    return FamilySpec(fam, q, idx)


def base_edge(rel):
    pt = adg.vertex_from_id(0, rel)
    ln = adg.vertex_from_id(rel.field.q**rel.d, rel)
    return pt, ln


# the smallest genuinely non-edge-girth-regular control graph found here:
# squaring the point coordinate makes opposite points share all neighbours
def square_relation_graph():
    f5 = Field(5)
    return RelationSet(field=f5, d=2, relations=(lambda pp, ll: pp[0] * pp[0] * ll[0],))


# ---------------------------------------------------------------------------
# girth

@pytest.mark.parametrize(
    "fam,q,idx,expected",
    [
        (Family.WENGER, 3, 1, 6),
        (Family.WENGER, 2, 2, 8),
        (Family.WENGER, 2, 1, 8),
        (Family.LINEARIZED, 4, 1, 6),
        (Family.LINEARIZED, 3, 2, 6),
        (Family.LINEARIZED, 2, 2, 8),
        (Family.WENGER_ALT, 3, 2, 8),
    ],
)
def test_girth_known_values(fam, q, idx, expected):
    assert girth(spec(fam, q, idx)) == expected


def test_girth_hint_validated():
    assert girth(spec(Family.WENGER, 3, 2), hint=8) == 8
    with pytest.raises(ValueError):
        girth(spec(Family.WENGER, 3, 2), hint=6)
    with pytest.raises(ValueError):
        girth(spec(Family.WENGER, 3, 2), hint=7)
    # a wrong-but-large hint still finds the true girth
    assert girth(spec(Family.WENGER, 3, 1), hint=8) == 6


# ---------------------------------------------------------------------------
# per-edge counts

def test_count_through_base_edge_examples():
    w13 = spec(Family.WENGER, 3, 1)
    assert count_cycles_through_edge(w13, base_edge(relations(w13)), 6) == 4
    w23 = spec(Family.WENGER, 3, 2)
    assert count_cycles_through_edge(w23, base_edge(relations(w23)), 8) == 8
    w24 = spec(Family.WENGER, 4, 2)
    assert count_cycles_through_edge(w24, base_edge(relations(w24)), 8) == 45
    w12 = spec(Family.WENGER, 2, 1)
    rel = relations(w12)
    for pt, ln in adg.edge_iter(rel):
        assert count_cycles_through_edge(w12, (pt, ln), 8) == 1


def test_count_below_girth_is_zero():
    w13 = spec(Family.WENGER, 3, 1)
    assert count_cycles_through_edge(w13, base_edge(relations(w13)), 4) == 0


def test_count_rejects_bad_input():
    w13 = spec(Family.WENGER, 3, 1)
    rel = relations(w13)
    pt, ln = base_edge(rel)
    with pytest.raises(ValueError):
        count_cycles_through_edge(w13, (pt, ln), 5)
    not_line = Vertex(Side.LINE, (rel.field.one(), rel.field.one()))
    assert not adg.adjacent(pt, not_line, rel)
    with pytest.raises(ValueError):
        count_cycles_through_edge(w13, (pt, not_line), 6)


def test_count_endpoint_symmetric():
    for fam, q, idx in [(Family.WENGER, 3, 1), (Family.LINEARIZED, 4, 2), (Family.WENGER, 4, 2)]:
        s = spec(fam, q, idx)
        ctx = census.GraphContext.build(s)
        g = census.girth_of_context(ctx)
        for pid in (0, 1, ctx.n_points - 1):
            for lid in ctx.adj[pid][:2]:
                forward = census.cycles_through_edge_ids(ctx.adj, pid, lid, g)
                backward = census.cycles_through_edge_ids(ctx.adj, lid, pid, g)
                assert forward == backward


def test_count_matches_networkx_oracle():
    s = spec(Family.WENGER, 3, 1)
    rel = relations(s)
    G = nx.Graph()
    for pt, ln in adg.edge_iter(rel):
        G.add_edge(adg.vertex_id(pt, rel), adg.vertex_id(ln, rel))
    through_base = 0
    total = 0
    for cyc in nx.simple_cycles(G, length_bound=6):
        assert len(cyc) == 6
        total += 1
        if {0, 9} <= set(cyc):
            k = cyc.index(0)
            if cyc[(k + 1) % 6] == 9 or cyc[(k - 1) % 6] == 9:
                through_base += 1
    assert through_base == count_cycles_through_edge(s, base_edge(rel), 6) == 4
    assert total == count_cycles_total(s) == 18


# ---------------------------------------------------------------------------
# certificates

def test_certify_known_certificates():
    c = certify(spec(Family.WENGER, 3, 2), Exhaustive(), workers=1)
    assert c.parameters() == (54, 3, 8, 8)
    assert c.total_girth_cycles == 81
    c = certify(spec(Family.WENGER, 3, 1), Exhaustive(), workers=1)
    assert c.parameters() == (18, 3, 6, 4)
    assert c.total_girth_cycles == 18
    c = certify(spec(Family.LINEARIZED, 2, 2), Exhaustive(), workers=1)
    assert c.parameters() == (16, 2, 8, 1)


def test_certify_handshake_identity():
    for fam, q, idx in [(Family.WENGER, 3, 1), (Family.WENGER, 4, 2), (Family.LINEARIZED, 3, 2)]:
        c = certify(spec(fam, q, idx), Exhaustive(), workers=1)
        assert sum(c.per_edge_counts.values()) == c.g * c.total_girth_cycles
        assert c.total_girth_cycles * 2 * c.g == c.v * c.k * c.lam
        assert len(c.per_edge_counts) == q ** (idx + 2)


def test_count_cycles_total_examples():
    assert count_cycles_total(spec(Family.WENGER, 3, 2)) == 81
    assert count_cycles_total(spec(Family.WENGER, 5, 1)) == 1000
    assert count_cycles_total(spec(Family.WENGER, 2, 1), length=8) == 1
    with pytest.raises(ValueError):
        count_cycles_total(spec(Family.WENGER, 3, 1), length=8)


@pytest.mark.parametrize("n,q", [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)])
def test_representation_certificates_agree(n, q):
    std = certify(spec(Family.WENGER, q, n), Exhaustive(), workers=1)
    alt = certify(spec(Family.WENGER_ALT, q, n), Exhaustive(), workers=1)
    assert std.parameters() == alt.parameters()
    assert std.total_girth_cycles == alt.total_girth_cycles


def test_base_edge_mode():
    c = certify(spec(Family.WENGER, 3, 2), BaseEdgeOnly(), workers=1)
    assert c.parameters() == (54, 3, 8, 8)
    assert c.mode == "base-edge-only"
    assert list(c.per_edge_counts) == [(0, 27)]


def test_sampled_mode_deterministic():
    s = spec(Family.WENGER, 4, 2)
    a = certify(s, Sampled(seed=7, count=40), workers=1)
    b = certify(s, Sampled(seed=7, count=40), workers=1)
    assert a == b
    assert a.lam == 45
    assert 0 < len(a.per_edge_counts) <= 40
    c = certify(s, Sampled(seed=8, count=40), workers=1)
    assert set(c.per_edge_counts) != set(a.per_edge_counts)


def test_parallel_census_deterministic():
    s = spec(Family.WENGER, 3, 2)
    certs = [certify(s, Exhaustive(), workers=w) for w in (1, 2, 3)]
    assert certs[0] == certs[1] == certs[2]


def test_certify_accepts_girth_hint():
    s = spec(Family.WENGER, 3, 2)
    assert certify(s, Exhaustive(), workers=1, girth_hint=8).parameters() == (54, 3, 8, 8)
    with pytest.raises(ValueError):
        certify(s, Exhaustive(), workers=1, girth_hint=6)


def test_non_uniform_graph_raises_with_witnesses():
    with pytest.raises(NonUniformCountsError) as err:
        certify_relations(square_relation_graph(), Exhaustive(), workers=1)
    wa, wb = err.value.witness_a, err.value.witness_b
    assert wa[:2] != wb[:2]
    assert wa[2] != wb[2]
    assert {wa[2], wb[2]} == {0, 4}


def test_non_uniform_graph_base_edge_rejected():
    # the base edge of the control graph lies on no 4-cycle at all
    with pytest.raises(ValueError):
        certify_relations(square_relation_graph(), BaseEdgeOnly(), workers=1)


def test_certify_relations_named_family_matches():
    rel = relations(spec(Family.WENGER, 3, 1))
    c = certify_relations(rel, Exhaustive(), workers=1)
    assert c.parameters() == (18, 3, 6, 4)
    assert c.family == "custom"


def test_certificate_json_schema():
    s = spec(Family.WENGER, 3, 2)
    cert = certify(s, Exhaustive(), workers=1)
    payload = census.certificate_to_json(cert, relations(s).field, 12.5, 2)
    assert list(payload) == [
        "family",
        "q",
        "index",
        "field",
        "v",
        "k",
        "g",
        "lambda",
        "mode",
        "total_girth_cycles",
        "elapsed_ms",
        "workers",
    ]
    assert payload["lambda"] == 8
    json.dumps(payload)


def test_auto_mode_policy():
    assert isinstance(census.auto_mode(spec(Family.WENGER, 3, 2), 8), Exhaustive)
    assert isinstance(census.auto_mode(spec(Family.LIE_M3, 5), 12), Sampled)


# ---------------------------------------------------------------------------
# seeded generator

def test_lcg_reference_states():
    rng = Lcg(0)
    assert rng.next_raw() == 1442695040888963407
    assert rng.next_raw() == 1876011003808476466
    assert rng.next_raw() == 11166244414315200793


def test_lcg_draws_are_top_bits():
    rng = Lcg(0)
    assert rng.below(1 << 31) == 1442695040888963407 >> 33


@given(st.integers(0, 2**64 - 1), st.integers(1, 10**6))
def test_lcg_below_in_range(seed, n):
    rng = Lcg(seed)
    for _ in range(5):
        assert 0 <= rng.below(n) < n
