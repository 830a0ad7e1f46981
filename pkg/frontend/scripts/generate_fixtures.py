"""Regenerate the golden service payloads used by the web client tests.

Drives the real play service in-process and snapshots its replies, so the
client tests pin the exact wire format. Run from the repository root:

    python3 frontend/scripts/generate_fixtures.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from fastapi.testclient import TestClient

from strongdraw.engine import FP, SP, CopyTracker, claim, new_game
from strongdraw.service import create_app
from strongdraw.strategies import adversary_by_name

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(payload, indent=2,
                                                 sort_keys=True) + "\n")
    print(f"wrote {name}.json")


def drive(client, sid, policy_name: str, seed: int, plies: int,
          snap: dict[int, str]) -> None:
    """Play FP via a suite adversary through the service, snapshotting replies."""
    adv = adversary_by_name(policy_name)
    policy = adv.make()
    rng = random.Random(seed)
    shadow = new_game(client.app_target)
    for i in range(plies):
        edge = policy(shadow, rng)
        r = client.post(f"/sessions/{sid}/moves", json={"vertices": list(edge)})
        body = r.json()
        if i in snap:
            dump(snap[i], body)
        shadow = claim(shadow, FP, edge)
        if body["spMove"] is not None:
            shadow = claim(shadow, SP, tuple(body["spMove"]["edge"]))
        if body["status"] != "Active":
            return


def main() -> None:
    app = create_app()
    client = TestClient(app)
    from strongdraw.target import canonical_target
    client.app_target = canonical_target()

    created = client.post("/sessions").json()
    dump("create", created)
    sid = created["sessionId"]
    dump("state-empty", client.get(f"/sessions/{sid}").json())

    # idle human: watch the build, the first counter-threat, and the loss
    drive(client, sid, "pacifist", 0, 12,
          {0: "reply-build-first", 3: "reply-build-mid", 6: "reply-build-last",
           7: "reply-attack", 8: "reply-spwin"})
    dump("state-spwin", client.get(f"/sessions/{sid}").json())

    # obedient human: blocks every counter-threat, long attack phase
    sid = client.post("/sessions").json()["sessionId"]
    drive(client, sid, "blocker", 1, 24, {7: "reply-attack-early",
                                          14: "reply-mid-block",
                                          23: "reply-late-block"})
    dump("state-attack", client.get(f"/sessions/{sid}").json())

    # chain-building human: standard threat badges, engine blocks
    sid = client.post("/sessions").json()["sessionId"]
    drive(client, sid, "standard-chain", 2, 14,
          {7: "reply-fp-standard", 9: "reply-fp-standard-again"})
    dump("state-fp-standard", client.get(f"/sessions/{sid}").json())

    # special-threat human
    sid = client.post("/sessions").json()["sessionId"]
    drive(client, sid, "special-once", 3, 10, {7: "reply-fp-special"})
    dump("state-fp-special", client.get(f"/sessions/{sid}").json())

    # a human win cannot be reached against the faithful strategy, so build
    # the refutation-candidate payload from a doctored session
    created = client.post("/sessions").json()
    sid = created["sessionId"]
    session = app.state.sessions[sid]
    mapping = {v: v + 100 for v in session.target.graph.vertices}
    copy_edges = [tuple(mapping[v] for v in e)
                  for e in session.target.graph.sorted_edges]
    missing = copy_edges.pop(4)
    state = new_game(session.target)
    tracker = CopyTracker(session.target, track_reduced_for=frozenset({FP}))
    filler = 9000
    for e in copy_edges:
        state = claim(state, FP, e)
        tracker.feed(FP, e)
        junk = tuple(range(filler, filler + 5))
        state = claim(state, SP, junk)
        tracker.feed(SP, junk)
        filler += 5
    session.state, session.tracker = state, tracker
    r = client.post(f"/sessions/{sid}/moves", json={"vertices": list(missing)})
    dump("reply-fpwin", r.json())
    dump("state-fpwin", client.get(f"/sessions/{sid}").json())

    # error payloads
    sid = client.post("/sessions").json()["sessionId"]
    dump("error-400", client.post(f"/sessions/{sid}/moves",
                                  json={"vertices": [1, 1, 2, 3, 4]}).json())
    client.post(f"/sessions/{sid}/moves", json={"vertices": [0, 1, 2, 3, 4]})
    dump("error-409", client.post(f"/sessions/{sid}/moves",
                                  json={"vertices": [0, 1, 2, 3, 4]}).json())
    dump("error-404", client.get("/sessions/does-not-exist").json())


if __name__ == "__main__":
    main()
