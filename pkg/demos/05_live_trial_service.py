"""Conduct a live trial against the HTTP service, in process.

Creates a trial, feeds it cohort outcomes as a trial statistician would,
and prints each recommendation with its rationale.  The same flow works
over the network via `plateau-dose serve`.
"""

import tempfile

from fastapi.testclient import TestClient

from plateau_dose.service import create_app

CONFIG = {
    "grid": {"levels": [1, 2, 3], "ref_level": 1, "target": 0.5,
             "initial_guesses": [0.5, 0.65, 0.8]},
    "design": {"n": 24, "k_model": 2, "c_f": 0.05, "s_base": 0.05,
               "method": "bma"},
}

# a plausible observed-outcome stream: mildly active low dose, active top
OUTCOME_STREAM = [
    [(0, 0), (1, 0), (0, 0), (1, 0), (0, 0), (0, 0)],   # level 1
    [(1, 0), (1, 0), (0, 0), (1, 0), (0, 0), (1, 0)],   # level 2
    [(1, 0), (1, 0), (1, 0), (0, 0), (1, 0), (1, 0)],   # level 3
    [(1, 0), (1, 0)], [(1, 0), (0, 0)], [(0, 0), (1, 0)],  # model phase
]

with tempfile.TemporaryDirectory() as data_dir:
    client = TestClient(create_app(data_dir))
    trial = client.post("/trials", json={"config": CONFIG, "seed": 20240614}).json()
    print(f"created trial {trial['id'][:8]}..., phase={trial['phase']}, "
          f"first cohort: {trial['announced']}")

    seq = 0
    view = trial
    while view["phase"] in ("startup", "model_based") and seq < len(OUTCOME_STREAM):
        pairs = OUTCOME_STREAM[seq]
        body = {"seq": seq,
                "outcomes": [{"activity": bool(a), "safety": bool(s)}
                             for a, s in pairs]}
        reply = client.post(f"/trials/{trial['id']}/cohorts", json=body).json()
        view = reply["trial"]
        print(f"\ncohort {seq} recorded "
              f"({sum(a for a, _ in pairs)}/{len(pairs)} active)")
        if reply["refit"]:
            r = reply["refit"]
            print(f"  refit: pi={[round(v, 2) for v in r['pi']]} "
                  f"tau_hat={r['tau_hat']} "
                  f"phi={[round(v, 2) for v in r['phi']]}")
        if reply["recommendation"]:
            rec = reply["recommendation"]
            print(f"  recommendation: {rec['kind']}"
                  + (f" -> level {rec['level']}" if rec["level"] else ""))
        elif view["announced"]:
            print(f"  next start-up cohort: {view['announced']}")
        seq += 1

    posterior = client.get(f"/trials/{trial['id']}/posterior").json()
    print(f"\nfinal phase: {view['phase']}")
    print(f"posterior exceedance by dose: "
          f"{[round(v, 3) for v in posterior['summary']['exceed']]}")
    events = client.get(f"/trials/{trial['id']}/events").json()["events"]
    print(f"event log holds {len(events)} records; replaying them rebuilds "
          f"this exact state.")
