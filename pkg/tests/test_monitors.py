from strongdraw.engine import FP, SP
from strongdraw.matching import monomorphisms_by_dfs
from strongdraw.monitors import (
    NO_THREAT_LINE,
    SPECIAL_LINE,
    STANDARD_CHAIN_LINE,
    monitor_no_threat_line,
    run_monitors,
)
from strongdraw.simulate import replay, run_game
from strongdraw.transcript import MoveRecord, Transcript


def _verdicts(t):
    return {m.name: m for m in t.monitors}


def test_no_threat_line_holds_for_pacifist():
    t = run_game("pacifist", 200, seed=1)
    v = _verdicts(t)[NO_THREAT_LINE]
    assert v.applicable and v.holds


def test_no_threat_line_holds_for_blocker():
    t = run_game("blocker", 200, seed=1)
    v = _verdicts(t)[NO_THREAT_LINE]
    assert v.applicable and v.holds


def test_special_line_holds_for_special_once():
    t = run_game("special-once", 200, seed=1)
    v = _verdicts(t)[SPECIAL_LINE]
    assert v.applicable and v.holds


def test_standard_chain_line_holds():
    t = run_game("standard-chain", 200, seed=1)
    v = _verdicts(t)[STANDARD_CHAIN_LINE]
    assert v.applicable and v.holds


def test_gates_are_exclusive():
    chain = run_game("standard-chain", 120, seed=5)
    v = _verdicts(chain)
    assert not v[NO_THREAT_LINE].applicable
    assert not v[SPECIAL_LINE].applicable
    special = run_game("special-once", 120, seed=5)
    v = _verdicts(special)
    assert not v[NO_THREAT_LINE].applicable
    assert not v[STANDARD_CHAIN_LINE].applicable


def test_monitors_are_pure():
    t = run_game("standard-chain", 120, seed=9)
    assert run_monitors(t) == run_monitors(t)
    assert run_monitors(t) == t.monitors


def test_short_transcripts_not_applicable():
    t = run_game("pacifist", 200, seed=2)
    clipped = Transcript(
        adversary=t.adversary, seed=t.seed, horizon=t.horizon, k=t.k, z=t.z,
        target_edges=t.target_edges, moves=t.moves[:6], outcome="OngoingAtHorizon")
    for v in run_monitors(clipped):
        assert not v.applicable and v.holds


def _null_sp_transcript(target, fp_edges):
    """Raw transcript where a do-nothing opponent lets FP move freely."""
    moves = []
    filler = 5000
    for i, fp_edge in enumerate(fp_edges):
        moves.append(MoveRecord(2 * i, FP, tuple(fp_edge), {}))
        moves.append(MoveRecord(2 * i + 1, SP,
                                tuple(range(filler, filler + 5)), {}))
        filler += 5
    raw = Transcript(
        adversary="scripted", seed=0, horizon=2 * len(fp_edges) + 20,
        k=target.k, z=target.z, target_edges=target.graph.sorted_edges,
        moves=tuple(moves), outcome="OngoingAtHorizon")
    return replay(raw, target)


def test_threat_against_idle_opponent_is_flagged(target):
    # seven copy edges, one quiet junk move, then a threat-creating edge
    fp = list(target.reduced.sorted_edges)
    fp.append((20, 21, 22, 23, 24))
    fp.append(tuple(sorted((30, 1, 3, 5, 8))))
    t = _null_sp_transcript(target, fp)
    fp_records = [m for m in t.moves if m.player == FP]
    assert fp_records[7].ann["kinds"] == []       # gate holds at the critical move
    assert fp_records[8].ann["kinds"] == ["standard"]
    v = monitor_no_threat_line(t)
    assert v.applicable and not v.holds
    assert v.first_violation_index == fp_records[8].index


def test_stale_edge_without_new_vertex_is_flagged(target):
    fp = list(target.reduced.sorted_edges)
    fp.append((20, 21, 22, 23, 24))
    fp.append((1, 2, 3, 4, 6))  # re-uses covered vertices only
    t = _null_sp_transcript(target, fp)
    fp_records = [m for m in t.moves if m.player == FP]
    assert fp_records[8].ann["kinds"] == []  # quiet move, still a violation
    v = monitor_no_threat_line(t)
    assert v.applicable and not v.holds
    assert v.first_violation_index == fp_records[8].index


def test_copy_count_annotation_matches_direct_enumeration(target):
    t = run_game("special-once", 60, seed=4)
    fp_records = [m for m in t.moves if m.player == FP]
    critical = fp_records[7]
    first_eight = [m.edge for m in fp_records[:8]]
    maps = monomorphisms_by_dfs(target.reduced, first_eight)
    assert critical.ann["copies"] == len(maps)
    assert critical.ann["copies"] <= 1


def test_chain_openness_flip(target):
    t = run_game("standard-chain", 120, seed=13)
    claimed = set()
    open_completion = None
    for rec in t.moves:
        if open_completion is not None and rec.player == SP:
            # the previous threat is answered, closing that copy
            assert rec.edge == open_completion
            claimed.add(rec.edge)
            open_completion = None
            continue
        claimed.add(rec.edge)
        if rec.player == FP and rec.ann.get("kinds") == ["standard"]:
            comps = [tuple(c) for c in rec.ann["completions"]]
            assert len(comps) == 1
            assert comps[0] not in claimed
            open_completion = comps[0]
