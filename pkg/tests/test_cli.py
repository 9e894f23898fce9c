import json
import os
import subprocess
import sys

import pytest

from stonework.finmon import validate_monoid

RUN = [sys.executable, "-m", "stonework"]


def run_cli(args, stdin=None, env_extra=None):
    env = None
    if env_extra:
        env = dict(os.environ, **env_extra)
    return subprocess.run(
        RUN + args, input=stdin, capture_output=True, text=True, timeout=300,
        env=env,
    )


def test_dualize_round_trip():
    proc = run_cli(["dualize"], stdin=json.dumps({"map": [1, 0, 0]}))
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["ring_endo"]["atom_images"] == ["011", "100", "000"]
    assert out["dual_group_endo"]["matrix"] == ["011", "100", "000"]


def test_metrize_from_chain_file(tmp_path):
    chain = {
        "carrier_size": 3,
        "chain": [{"classes": [[0, 1], [2]]}],
    }
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(chain))
    proc = run_cli(["metrize", "--chain", str(path)])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["dist"][0][1] == "1/2"
    assert out["dist"][0][2] == "1"


def test_theta_counts_and_injective_filter():
    proc = run_cli(["theta", "--metric", "discrete:3"])
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 27
    proc = run_cli(["theta", "--metric", "discrete:3", "--injective"])
    assert json.loads(proc.stdout)["count"] == 6


def test_saturate_subcommand(tmp_path):
    monoid = {"size": 1, "identity": 0, "table": [[0]]}
    action = {"monoid": monoid, "carrier_size": 3, "act": [[0, 1, 2]]}
    family = {"carrier_size": 3, "members": [
        {"classes": [[0, 1], [2]]},
        {"classes": [[0], [1, 2]]},
    ]}
    apath = tmp_path / "a.json"
    fpath = tmp_path / "f.json"
    apath.write_text(json.dumps(action))
    fpath.write_text(json.dumps(family))
    proc = run_cli(["saturate", "--action", str(apath), "--family", str(fpath)])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    # the pairwise meet joins the family
    assert {"classes": [[0], [1], [2]]} in out["members"]
    assert len(out["members"]) == 3


def test_cover_ops(tmp_path):
    p = tmp_path / "p.json"
    q = tmp_path / "q.json"
    p.write_text(json.dumps({"blocks": [[0, 1], [2, 3]]}))
    q.write_text(json.dumps({"blocks": [[0, 1, 2], [3]]}))
    proc = run_cli(["cover-ops", "--op", "wedge", str(p), str(q)])
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["blocks"] == [[0, 1], [2], [3]]
    proc = run_cli(["cover-ops", "--op", "star", str(p), "--set", "0"])
    assert json.loads(proc.stdout)["star"] == [0, 1]
    proc = run_cli(["cover-ops", "--op", "ord", str(p)])
    assert json.loads(proc.stdout)["order"] == 1


def test_kantorovich_subcommand(tmp_path):
    metric = {"dist": [["0", "1/2", "1"], ["1/2", "0", "1"], ["1", "1", "0"]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(metric))
    proc = run_cli(["kantorovich", "--metric", str(path), "--vector", "0,1"])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["norm"] == "1/2"
    assert out["pairing"] == [[0, 1]]
    assert out["auxiliary_oracle_norm"] == "1/2"


def test_example_contrast():
    proc = run_cli(["example", "contrast", "--k", "3"])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["carrier_size"] == 11
    assert len(out["obstruction_witnesses"]) == 3


def test_verify_passes_at_small_bounds():
    proc = run_cli([
        "verify", "--all", "--bound-points", "2", "--bound-atoms", "2",
        "--bound-k", "2", "--out", "json",
    ])
    assert proc.returncode == 0
    reports = json.loads(proc.stdout)
    assert all(r["outcome"] == "pass" for r in reports)
    from stonework.suite import CHECKS

    assert [r["check"] for r in reports] == [name for name, _ in CHECKS]


def test_verify_self_test_fails_with_replayable_witness():
    proc = run_cli([
        "verify", "--self-test", "--bound-points", "2", "--bound-atoms", "2",
        "--bound-k", "2", "--out", "json",
    ])
    assert proc.returncode == 1
    reports = json.loads(proc.stdout)
    control = [r for r in reports if r["check"] == "corrupted-table-control"]
    assert control and control[0]["outcome"] == "fail"
    witness = control[0]["witness"]
    # the witness replays through table validation
    from stonework.errors import AssociativityViolation

    with pytest.raises(AssociativityViolation) as exc:
        validate_monoid(witness["table"], witness["identity"])
    assert list(exc.value.triple) == witness["violating_triple"]


def test_verify_duality_tsv():
    proc = run_cli(["verify-duality", "--points", "2"])
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0].startswith("check\t")
    assert len(lines) == 6  # header plus the five duality checks
    assert all(line.split("\t")[3] == "pass" for line in lines[1:])


def test_cli_output_feeds_back_in(tmp_path):
    # metrize emits a metric that theta and kantorovich accept unchanged
    chain = {"carrier_size": 3, "chain": [{"classes": [[0, 1], [2]]}]}
    cpath = tmp_path / "chain.json"
    cpath.write_text(json.dumps(chain))
    metric = run_cli(["metrize", "--chain", str(cpath)]).stdout
    mpath = tmp_path / "metric.json"
    mpath.write_text(metric)
    theta = run_cli(["theta", "--metric", str(mpath)])
    assert theta.returncode == 0
    assert json.loads(theta.stdout)["count"] == 15
    norm = run_cli(["kantorovich", "--metric", str(mpath), "--vector", "0,1"])
    assert json.loads(norm.stdout)["norm"] == "1/2"


def test_check_nonexpansive_subcommand(tmp_path):
    monoid = {"size": 2, "identity": 0, "table": [[0, 1], [1, 1]]}
    mpath = tmp_path / "m.json"
    mpath.write_text(json.dumps(monoid))
    proc = run_cli([
        "check", "--nonexpansive", "left",
        "--monoid", str(mpath), "--metric", "discrete:2",
    ])
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["nonexpansive"] is True and out["counterexample"] is None
    proc = run_cli([
        "check", "--nonexpansive", "right",
        "--monoid", str(mpath), "--metric", "discrete:2",
    ])
    assert json.loads(proc.stdout)["nonexpansive"] is True


def test_verify_reports_reproducible_across_runs():
    args = ["verify", "--bound-points", "2", "--bound-atoms", "2",
            "--bound-k", "2", "--out", "json"]
    first = json.loads(run_cli(args).stdout)
    second = json.loads(run_cli(args).stdout)

    def strip(reports):
        return [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in reports]

    assert strip(first) == strip(second)


def test_parse_error_exit_code_and_location():
    proc = run_cli(["dualize"], stdin="{bad json")
    assert proc.returncode == 2
    assert "line 1" in proc.stderr
    proc = run_cli(["metrize", "--chain", "/nonexistent/file.json"])
    assert proc.returncode == 2


def test_usage_error_exit_code():
    proc = run_cli(["theta"])  # missing required --metric
    assert proc.returncode == 2


def test_domain_error_exit_code():
    # a self-map value outside its carrier is a usage-class error
    proc = run_cli(["dualize"], stdin=json.dumps({"map": [5, 0]}))
    assert proc.returncode == 2


def test_enumeration_cap_env_var():
    proc = run_cli(["theta", "--metric", "discrete:3"],
                   env_extra={"STONEWORK_MAX_ENUM": "26"})
    assert proc.returncode == 2
    assert "26" in proc.stderr
    proc = run_cli(["theta", "--metric", "discrete:3"],
                   env_extra={"STONEWORK_MAX_ENUM": "27"})
    assert proc.returncode == 0
