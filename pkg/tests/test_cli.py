import json

import pytest

from strongdraw.cli import main
from strongdraw.simulate import run_game
from strongdraw.target import NAMED_EDGES


@pytest.fixture()
def graph_file(tmp_path, graph):
    p = tmp_path / "target.graph"
    p.write_text(graph.to_text({"z": 0}))
    return p


def test_verify_canonical_exits_zero(graph_file, capsys):
    assert main(["verify", str(graph_file)]) == 0
    out = capsys.readouterr().out
    assert "draw-sufficient" in out


def test_verify_json_report(graph_file, capsys):
    assert main(["verify", str(graph_file), "--report", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["draw_sufficient"] is True
    assert len(payload["rigidity"]) == 36


def test_verify_mutated_exits_one(tmp_path, graph, capsys):
    mutated = graph.remove_edges([NAMED_EDGES["chord"]])
    p = tmp_path / "mutated.graph"
    p.write_text(mutated.to_text({"z": 0}))
    assert main(["verify", str(p)]) == 1


def test_verify_single_pair(graph_file, capsys):
    code = main(["verify", str(graph_file),
                 "--pairs", "0,1,3,5,8:0,2,4,7,9"])
    assert code == 0
    assert "count=1" in capsys.readouterr().out


def test_simulate_and_replay(tmp_path, capsys):
    out = tmp_path / "game.jsonl"
    assert main(["simulate", "--adversary", "pacifist", "--seed", "7",
                 "--horizon", "200", "--out", str(out)]) == 0
    assert out.exists()
    assert main(["replay", str(out)]) == 0


def test_replay_flags_tampered_file(tmp_path, capsys):
    out = tmp_path / "game.jsonl"
    main(["simulate", "--adversary", "pacifist", "--seed", "7",
          "--horizon", "200", "--out", str(out)])
    text = out.read_text().replace('"kinds":[]', '"kinds":["special"]', 1)
    out.write_text(text)
    assert main(["replay", str(out)]) == 1


def test_campaign_small(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert main(["campaign", "--games", "12", "--horizon", "60",
                 "--out", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["ok"] is True and payload["games"] == 12


def test_campaign_seed_corpus(tmp_path):
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("5\n6\n7\n")
    assert main(["campaign", "--games", "6", "--horizon", "60",
                 "--seeds-file", str(seeds)]) == 0


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["simulate"])  # missing required --adversary
    assert exc.value.code == 2


def test_unreadable_inputs_exit_two(tmp_path):
    assert main(["verify", str(tmp_path / "missing.graph")]) == 2
    junk = tmp_path / "junk.graph"
    junk.write_text("this is not a graph\n")
    assert main(["verify", str(junk)]) == 2
    not_transcript = tmp_path / "nope.jsonl"
    not_transcript.write_text('{"something": "else"}\n')
    assert main(["replay", str(not_transcript)]) == 2


def test_verify_multiple_pairs(graph_file, capsys):
    code = main(["verify", str(graph_file), "--pairs",
                 "0,1,3,5,8:0,2,4,7,9;1,2,3,4,5:5,6,7,8,9"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("count=1") == 2


def test_transcript_written_matches_run(tmp_path):
    out = tmp_path / "g.jsonl"
    main(["simulate", "--adversary", "blocker", "--seed", "3",
          "--horizon", "120", "--out", str(out)])
    assert out.read_text() == run_game("blocker", 120, seed=3).to_jsonl()
