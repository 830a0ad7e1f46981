"""Acceptance gate: every release criterion, each at its stated budget."""

import itertools
import os
import random
import time

import pytest

from strongdraw.engine import FP, find_threats
from strongdraw.hypergraph import Hypergraph, intersection_size, tight_paths
from strongdraw.matching import (
    enumerate_monomorphisms,
    is_isomorphic,
    monomorphisms_by_exhaustion,
)
from strongdraw.simulate import campaign, replay, run_game
from strongdraw.strategies import adversary_suite
from strongdraw.verifier import (
    check_property_iii,
    check_property_iv,
    check_single_edge_rigidity,
    check_structure_facts,
    check_unique_completion_pair,
)

from conftest import (
    DEGREE_TABLE,
    INTERSECTION_TABLE,
    oracle_threats,
    random_hypergraph,
    state_with_edges,
)

pytestmark = pytest.mark.acceptance

CAMPAIGN_GAMES = int(os.environ.get("STRONGDRAW_ACCEPTANCE_GAMES", "10000"))


def test_canonical_construction(target, named):
    t0 = time.perf_counter()
    graph = target.graph
    assert len(graph.vertices) == 10
    assert len(graph.edges) == 9
    assert graph.degrees() == DEGREE_TABLE
    checked = 0
    for (a, b), expected in INTERSECTION_TABLE.items():
        assert intersection_size(named[a], named[b]) == expected
        checked += 1
    assert checked == 36
    assert time.perf_counter() - t0 < 1.0


def test_two_edge_deleted_rigidity(graph):
    t0 = time.perf_counter()
    report, results = check_property_iv(graph)
    elapsed = time.perf_counter() - t0
    assert report.holds
    assert len(results) == 36
    for r in results:
        assert r.monomorphism_count == 1
        assert r.all_identity
    assert elapsed < 60.0


@pytest.mark.slow
def test_rigidity_spot_checked_by_exhaustive_oracle(graph):
    rng = random.Random(20240)
    pairs = rng.sample(list(itertools.combinations(graph.sorted_edges, 2)), 3)
    for e, f in pairs:
        t0 = time.perf_counter()
        sub = graph.remove_edges([e, f])
        naive = monomorphisms_by_exhaustion(sub, graph)
        assert naive == enumerate_monomorphisms(sub, graph)
        assert len(naive) == 1 and naive[0].is_identity()
        assert time.perf_counter() - t0 < 600.0


def test_one_edge_deleted_rigidity(graph):
    rep = check_single_edge_rigidity(graph)
    assert rep.holds
    counts = rep.witness["counts"]
    assert len(counts) == 9 and all(c == 1 for c in counts.values())


def test_structural_facts(graph):
    rep = check_structure_facts(graph, 0)
    assert rep.holds
    assert all(rep.witness[i]["holds"] for i in "12345")
    assert len(tight_paths(graph, 5)) == 2


def test_unique_completion_pair(graph):
    rep = check_unique_completion_pair(graph, 0)
    assert rep.holds
    assert len(rep.witness["matches"]) == 1


def test_fast_builder_cover_and_suite(target, graph):
    t0 = time.perf_counter()
    rep = check_property_iii(graph, 0)
    cover_elapsed = time.perf_counter() - t0
    assert rep.holds
    assert cover_elapsed < 10.0
    for adv in adversary_suite():
        t = run_game(adv.name, 40, seed=17)
        build = [m for m in t.moves if m.player == "SP"
                 and m.ann["role"] == "build"]
        assert len(build) == 7
        built = Hypergraph.from_edges(5, [m.edge for m in build])
        assert is_isomorphic(built, target.reduced) is not None


@pytest.mark.slow
def test_draw_at_desk_scale():
    t0 = time.perf_counter()
    workers = min(os.cpu_count() or 1, 4)
    report = campaign(games=CAMPAIGN_GAMES, horizon=200, base_seed=0,
                      workers=workers)
    elapsed = time.perf_counter() - t0
    assert report.games >= 10_000
    assert report.outcomes.get("FpWin", 0) == 0
    assert not report.violations
    assert not report.monitor_failures
    assert elapsed < 1800.0


@pytest.mark.slow
def test_safety_over_ten_thousand_seeded_random_games():
    # a second, disjoint seed range, played by the noisiest adversary only
    workers = min(os.cpu_count() or 1, 4)
    report = campaign(games=10_000, horizon=200, base_seed=1_000_000,
                      workers=workers, mix=(("random-local", 1.0),))
    assert report.games == 10_000
    assert report.outcomes.get("FpWin", 0) == 0
    assert not report.violations
    assert not report.monitor_failures


def test_threat_search_matches_oracle_on_500_positions(target):
    rng = random.Random(60601)
    structured = 0
    for i in range(500):
        if rng.random() < 0.7:
            pool = list(range(rng.randint(10, 12)))
            fp = {tuple(sorted(rng.sample(pool, 5)))
                  for _ in range(rng.randint(0, 7))}
            state = state_with_edges(target, sorted(fp), [])
        else:
            structured += 1
            skip = rng.sample(target.graph.sorted_edges, rng.randint(1, 2))
            mapping = {v: v + 50 for v in target.graph.vertices}
            fp = [tuple(mapping[v] for v in e)
                  for e in target.graph.sorted_edges if e not in skip]
            sp = []
            if rng.random() < 0.5:
                sp = [tuple(sorted(mapping[v] for v in skip[0]))]
            state = state_with_edges(target, fp, sp)
        got = {(frozenset(t.copy.apply_edge(e) for e in
                          state.target.threat_templates[t.template_edge].edges),
                t.completing_edge) for t in find_threats(state, FP)}
        assert got == oracle_threats(state, FP)
    assert structured >= 100


def test_matcher_agrees_with_oracle_on_500_positions():
    rng = random.Random(70707)
    for _ in range(500):
        k = rng.choice((2, 3, 5))
        template = random_hypergraph(rng, k, 5, 4)
        host = random_hypergraph(rng, k, 8, 6)
        assert enumerate_monomorphisms(template, host) == \
            monomorphisms_by_exhaustion(template, host)


def test_transcript_replay_is_byte_exact():
    for adv in adversary_suite():
        for seed in (0, 1, 2):
            t = run_game(adv.name, 200, seed=seed)
            assert replay(t).to_jsonl() == t.to_jsonl()
