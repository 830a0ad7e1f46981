import pytest

from strongdraw.engine import FP
from strongdraw.simulate import campaign, campaign_tasks, replay, run_game
from strongdraw.strategies import adversary_suite
from strongdraw.transcript import Transcript


def test_same_inputs_same_bytes():
    a = run_game("random-local", 200, seed=123).to_jsonl()
    b = run_game("random-local", 200, seed=123).to_jsonl()
    assert a == b


def test_different_seeds_differ():
    a = run_game("random-local", 200, seed=1).to_jsonl()
    b = run_game("random-local", 200, seed=2).to_jsonl()
    assert a != b


def test_pacifist_never_threatens():
    t = run_game("pacifist", 200, seed=6)
    assert t.outcome in ("SpWin", "OngoingAtHorizon")
    for rec in t.moves:
        if rec.player == FP:
            assert rec.ann["kinds"] == []


def test_standard_chain_threats_all_standard():
    t = run_game("standard-chain", 200, seed=6)
    kinds = {k for rec in t.moves if rec.player == FP
             for k in rec.ann["kinds"]}
    assert kinds == {"standard"}


def test_horizon_respected():
    t = run_game("blocker", 120, seed=2)
    assert t.plies == 120 and t.outcome == "OngoingAtHorizon"


def test_rejects_tiny_horizon():
    with pytest.raises(ValueError):
        run_game("pacifist", 10, seed=0)


@pytest.mark.parametrize("name", [a.name for a in adversary_suite()])
def test_replay_round_trip(name):
    t = run_game(name, 140, seed=8)
    text = t.to_jsonl()
    parsed = Transcript.from_jsonl(text)
    assert parsed.to_jsonl() == text
    assert replay(parsed).to_jsonl() == text


def test_replay_detects_tampering():
    t = run_game("pacifist", 60, seed=8)
    lines = t.to_jsonl().splitlines()
    # claim that the first player's opening move threatened something
    tampered = "\n".join(
        line.replace('"kinds":[]', '"kinds":["standard"]', 1)
        if '"player":"FP"' in line and '"index":0' in line else line
        for line in lines) + "\n"
    parsed = Transcript.from_jsonl(tampered)
    assert replay(parsed).to_jsonl() != tampered


def test_campaign_task_split_is_deterministic():
    tasks = campaign_tasks(100, 200, base_seed=0)
    assert len(tasks) == 100
    assert len({seed for _, seed, _ in tasks}) == 100
    assert tasks == campaign_tasks(100, 200, base_seed=0)
    names = {name for name, _, _ in tasks}
    assert names == {a.name for a in adversary_suite()}


def test_small_campaign_clean():
    report = campaign(games=90, horizon=60, base_seed=0)
    assert report.games == 90
    assert report.ok
    assert sum(report.outcomes.values()) == 90
    assert report.outcomes.get("FpWin", 0) == 0
    obj = report.to_obj()
    assert obj["ok"] and set(obj["by_adversary"]) == \
        {a.name for a in adversary_suite()}


def test_campaign_deterministic():
    a = campaign(games=30, horizon=60, base_seed=5).to_obj()
    b = campaign(games=30, horizon=60, base_seed=5).to_obj()
    assert a == b


def test_aborted_transcript_round_trips():
    import dataclasses
    from strongdraw.monitors import run_monitors
    base = run_game("pacifist", 60, seed=0)
    clipped = dataclasses.replace(
        base, moves=base.moves[:15], outcome="Aborted",
        violation={"kind": "UniqueThreatViolation", "detail": "synthetic",
                   "index": 15},
        monitors=())
    clipped = dataclasses.replace(clipped, monitors=run_monitors(clipped))
    rebuilt = replay(clipped)
    assert rebuilt.outcome == "Aborted"
    assert rebuilt.to_jsonl() == clipped.to_jsonl()


def test_any_violation_fails_a_campaign_report():
    from strongdraw.simulate import CampaignReport, GameSummary
    clean = GameSummary("pacifist", 0, "SpWin", 18, (), None)
    base = dict(games=1, horizon=60, outcomes={"SpWin": 1},
                by_adversary={"pacifist": {"SpWin": 1}},
                fp_wins=(), violations=(), monitor_failures=())
    assert CampaignReport(**base).ok
    hurt = GameSummary("pacifist", 1, "Aborted", 20, (),
                       {"kind": "UniqueThreatViolation"})
    assert not CampaignReport(**{**base, "violations": (hurt,)}).ok
    assert not CampaignReport(**{**base, "fp_wins": (clean,)}).ok
    assert not CampaignReport(**{**base, "monitor_failures": (hurt,)}).ok
