"""Record HTTP fixtures for the web UI tests from the real service.

Each fixture is one user flow: an ordered list of request/response
exchanges captured against an in-process service instance with a fixed
seed, so the UI test suite replays real payloads without a live server.

    python frontend/fixtures/record_fixtures.py
"""

import json
import pathlib
import tempfile

from fastapi.testclient import TestClient

from plateau_dose.service import create_app

HERE = pathlib.Path(__file__).parent

CONFIG = {
    "grid": {"levels": [1, 2, 3], "ref_level": 1, "target": 0.5,
             "initial_guesses": [0.5, 0.65, 0.8]},
    "design": {"n": 24, "k_model": 2, "c_f": 0.05, "s_base": 0.05,
               "method": "selection"},
}


class Recorder:
    def __init__(self, client: TestClient):
        self.client = client
        self.exchanges = []

    def call(self, method: str, path: str, body=None):
        if method == "GET":
            resp = self.client.get(path)
        else:
            resp = self.client.post(path, json=body)
        self.exchanges.append({
            "request": {"method": method, "path": path, "body": body},
            "response": {"status": resp.status_code, "body": resp.json()},
        })
        return resp.json()


def outcomes(pairs):
    return [{"activity": bool(a), "safety": bool(s)} for a, s in pairs]


def record(name: str, seed: int, cohorts, include_invalid_create=False) -> None:
    with tempfile.TemporaryDirectory() as data_dir:
        rec = Recorder(TestClient(create_app(data_dir)))
        if include_invalid_create:
            bad = json.loads(json.dumps(CONFIG))
            bad["design"]["n"] = 23
            rec.call("POST", "/trials", {"config": bad, "seed": seed})
        trial = rec.call("POST", "/trials", {"config": CONFIG, "seed": seed})
        trial_id = trial["id"]
        for seq, pairs in enumerate(cohorts):
            rec.call("POST", f"/trials/{trial_id}/cohorts",
                     {"seq": seq, "outcomes": outcomes(pairs)})
        rec.call("GET", f"/trials/{trial_id}/posterior")
        rec.call("GET", f"/trials/{trial_id}")
        out = HERE / f"{name}.json"
        out.write_text(json.dumps({"name": name, "exchanges": rec.exchanges},
                                  indent=2) + "\n", encoding="utf-8")
        print(f"wrote {out} ({len(rec.exchanges)} exchanges)")


def main():
    # plain create plus a rejected odd-n create for inline-error rendering
    record("create_trial", seed=1001, cohorts=[], include_invalid_create=True)

    # full safe escalation into the model phase with a first recommendation
    record("escalation", seed=1002, cohorts=[
        [(1, 0), (0, 0), (1, 0), (0, 0), (1, 0), (0, 0)],
        [(1, 0), (1, 0), (0, 0), (1, 0), (1, 0), (0, 0)],
        [(1, 0), (1, 0), (1, 0), (0, 0), (1, 0), (1, 0)],
        [(1, 0), (0, 0)],
    ])

    # a safety issue at level 2 eliminates levels 2 and 3
    record("safety_elimination", seed=1003, cohorts=[
        [(1, 0), (0, 0), (1, 0), (0, 0), (1, 0), (0, 0)],
        [(1, 0), (1, 0), (0, 1), (1, 0), (0, 0), (0, 0)],
    ])

    # an inactive drug: the refit finds nothing admissible and stops
    record("futility_stop", seed=1004, cohorts=[
        [(0, 0)] * 6,
        [(0, 0)] * 6,
        [(1, 0)] + [(0, 0)] * 5,
    ])


if __name__ == "__main__":
    main()
