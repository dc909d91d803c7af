import json
from pathlib import Path

import jsonschema
import pytest

from wps.cli import main

ROOT = Path(__file__).resolve().parent.parent
SCHEMA = json.loads((ROOT / "docs" / "cli-schema.json").read_text())
MANIFEST = str(ROOT / "manifests" / "default.manifest")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err.splitlines()


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    captured = capsys.readouterr()
    payload = json.loads(captured.out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


# === text outputs ===


def test_wellform_chain(capsys):
    code, out, _ = run(capsys, "wellform", "12,20,30")
    assert code == 0
    assert out == [
        "(1,1,1)",
        "step 1: case I d=2 (12,20,30) -> (6,10,15)",
        "step 2: case II d=5 spared=0 (6,10,15) -> (6,2,3)",
        "step 3: case II d=2 spared=2 (6,2,3) -> (3,1,3)",
        "step 4: case II d=3 spared=1 (3,1,3) -> (1,1,1)",
    ]


def test_wellform_noop(capsys):
    code, out, _ = run(capsys, "wellform", "1,2,3")
    assert code == 0
    assert out == ["(1,2,3)", "already well-formed"]


def test_genus_single(capsys):
    code, out, _ = run(capsys, "genus", "--weights", "1,2,3", "--degree", "6")
    assert code == 0
    assert out == ["genus=1 b=18"]


def test_genus_non_integer_is_domain_error(capsys):
    code, out, err = run(capsys, "genus", "--weights", "1,1,2", "--degree", "3")
    assert code == 1
    assert out == []
    assert err == ["error[E_GENUS_NONINT]: genus formula gives 1/4 for d=3, a=(1, 1, 2)"]


def test_genus_sweep_small(capsys):
    code, out, _ = run(
        capsys, "genus", "--sweep", "--max-entry", "1", "--max-degree", "6"
    )
    assert code == 0
    assert out == ["checked=5 failures=0"]


def test_genus_sweep_full_fails(capsys):
    code, out, _ = run(capsys, "genus", "--sweep")
    assert code == 1
    assert out[0] == "checked=777 failures=431"
    assert len(out) == 432


def test_check_with_census(capsys):
    code, out, _ = run(
        capsys,
        "check", "--weights", "1,2,3", "--poly", "x^7 + y^2*z + x*z^2", "--census",
    )
    assert code == 0
    assert out == [
        "degree: 7",
        "weights: (1,2,3)",
        "sufficiently general: yes",
        "vertices on curve: p0=no p1=yes p2=yes",
        "census:",
        "  edge 0: count=0 predicted=7 agree=no squarefree=no",
        "  edge 1: count=6 predicted=6 agree=yes squarefree=yes",
        "  edge 2: count=0 predicted=6 agree=no squarefree=yes",
    ]


def test_check_reports_violations_without_failing(capsys):
    code, out, _ = run(
        capsys, "check", "--weights", "1,2,3", "--poly", "x^7 + x*y^3", "--census"
    )
    assert code == 0
    assert out == [
        "degree: 7",
        "weights: (1,2,3)",
        "sufficiently general: no",
        "  clause (ii) fails at i=2: none of x*z^2 present",
        "census: skipped (not sufficiently general)",
    ]


def test_cover(capsys):
    code, out, _ = run(
        capsys, "cover", "--weights", "1,1,2", "--poly", "x^4 + y^4 + z^2 + x*y*z"
    )
    assert code == 0
    assert out == ["x^4 + y^4 + x*y*z^2 + z^4", "degree: 4"]


def test_truncate(capsys):
    code, out, _ = run(capsys, "truncate", "--weights", "6,10,15", "--d", "5")
    assert code == 0
    assert out == ["generators: y, z, x^5", "regraded weights: (2,3,6)"]


def test_truncate_with_poly(capsys):
    code, out, _ = run(
        capsys,
        "truncate", "--weights", "6,10,15", "--d", "5", "--poly", "x^5 + y^3 + z^2",
    )
    assert code == 0
    assert out[-1] == "poly degree 30: in the truncation (regraded degree 6)"
    code, out, _ = run(capsys, "truncate", "--weights", "1,1", "--d", "2", "--poly", "x")
    assert out[-1] == "poly degree 1: f^2 lands in the truncation (degree 2, regraded 1)"


def test_straighten(capsys):
    code, out, _ = run(
        capsys,
        "straighten", "--weights", "12,20,30", "--poly", "x^5 + y^3 + z^2",
    )
    assert code == 0
    assert out == [
        "step 1: case I d=2 (12,20,30) -> (6,10,15) [unchanged-regraded]",
        "step 2: case II d=5 spared=0 (6,10,15) -> (6,2,3) [re-expressed]",
        "step 3: case II d=2 spared=2 (6,2,3) -> (3,1,3) [re-expressed]",
        "step 4: case II d=3 spared=1 (3,1,3) -> (1,1,1) [re-expressed]",
        "final weight: (1,1,1)",
        "generators: x -> x^5, y -> y^3, z -> z^2",
        "relation: x + y + z (degree 1)",
    ]


def test_hilbert_expand(capsys):
    code, out, _ = run(
        capsys,
        "hilbert", "expand", "--weights", "1,2,3", "--numerator", "1 - t^6", "-N", "10",
    )
    assert code == 0
    assert out == ["1 1 2 3 4 5 6 7 8 9 10"]


def test_hilbert_numerator(capsys):
    code, out, _ = run(
        capsys,
        "hilbert", "numerator", "--weights", "1,2,3", "--genus", "1", "--deg", "1",
    )
    assert code == 0
    assert out == ["1 - t^6", "relation degrees: 6"]


def test_hilbert_numerator_with_overrides(capsys):
    code, out, _ = run(
        capsys,
        "hilbert", "numerator", "--weights", "1,1", "--genus", "3", "--deg", "1",
        "--override", "1=1", "--override", "2=1", "--override", "3=1",
        "--override", "4=2", "-N", "8",
    )
    assert code == 0
    assert out == ["1 - t + t^4"]


def test_hilbert_table_defaults(capsys):
    code, out, _ = run(capsys, "hilbert", "table")
    assert code == 0
    assert out == [
        "k=1 weights=(1,2,3) numerator=1 - t^6 relations=6",
        "k=2 weights=(1,1,2) numerator=1 - t^4 relations=4",
        "k=3 weights=(1,1,1) numerator=1 - t^3 relations=3",
        "k=4 weights=(1,1,1,1) numerator=1 - 2*t^2 + t^4 relations=2,2",
    ]


def test_eq_rational_example(capsys):
    code, out, _ = run(
        capsys, "eq", "--weights", "1,1,2", "--field", "q", "1:0:2", "3:0:18"
    )
    assert code == 0
    assert out == ["equal: yes", "geometric: yes", "scaling: yes"]


def test_eq_finite_field_cone_point(capsys):
    code, out, _ = run(
        capsys, "eq", "--weights", "1,1,2", "--field", "5", "0:0:1", "0:0:2"
    )
    assert code == 0
    assert out == ["equal: yes", "geometric: yes", "scaling: no"]


def test_eq_undecided_scaling(capsys):
    code, out, _ = run(capsys, "eq", "--weights", "2,3", "--field", "q", "1:1", "4:8")
    assert code == 0
    assert out == [
        "equal: yes",
        "geometric: yes",
        "scaling: undecided (no weight-1 anchor)",
    ]


def test_oracle_run(capsys):
    code, out, _ = run(capsys, "oracle", "run", "--manifest", MANIFEST)
    assert code == 0
    assert out[-1] == "9/9 checks passed"
    assert all(line.startswith("ok ") for line in out[:-1])


def test_oracle_run_missing_file(capsys):
    code, out, err = run(capsys, "oracle", "run", "--manifest", "no-such-file")
    assert code == 1
    assert err and err[0].startswith("error[E_IO]:")


# === exit codes ===


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["wellform", "1,x"],
        ["genus", "--weights", "1,2,3"],
        ["genus", "--sweep", "--weights", "1,2,3"],
        ["hilbert", "numerator", "--weights", "1,1", "--genus", "3", "--deg", "1",
         "--override", "junk"],
        [],
    ):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2, argv
        capsys.readouterr()


def test_value_error_exits_1(capsys):
    code, _, err = run(capsys, "eq", "--weights", "1,1", "--field", "4", "1:1", "2:2")
    assert code == 1
    assert err[0].startswith("error[E_VALUE]:")


# === json envelopes ===


def test_json_envelopes_validate(capsys):
    cases = [
        ("wellform", ["wellform", "12,20,30"]),
        ("genus", ["genus", "--weights", "1,2,3", "--degree", "6"]),
        ("check", ["check", "--weights", "1,1,2", "--poly", "x^4 + y^4 + z^2 + x*y*z",
                   "--census"]),
        ("cover", ["cover", "--weights", "1,1,2", "--poly", "x^4 + y^4 + z^2 + x*y*z"]),
        ("truncate", ["truncate", "--weights", "6,10,15", "--d", "5"]),
        ("straighten", ["straighten", "--weights", "12,20,30", "--poly",
                        "x^5 + y^3 + z^2"]),
        ("hilbert expand", ["hilbert", "expand", "--weights", "1,2,3", "-N", "5"]),
        ("hilbert numerator", ["hilbert", "numerator", "--weights", "1,2,3",
                               "--genus", "1", "--deg", "1"]),
        ("hilbert table", ["hilbert", "table"]),
        ("eq", ["eq", "--weights", "1,1,2", "--field", "q", "1:0:2", "3:0:18"]),
        ("oracle run", ["oracle", "run", "--manifest", MANIFEST]),
    ]
    for command, argv in cases:
        code, payload = run_json(capsys, *argv)
        assert code == 0, command
        assert payload["command"] == command
        assert payload["ok"] is True
        assert "data" in payload and "error" not in payload


def test_json_genus_payload(capsys):
    code, payload = run_json(capsys, "genus", "--weights", "1,2,3", "--degree", "6")
    assert code == 0
    assert payload["data"] == {"weights": [1, 2, 3], "d": 6, "genus": 1, "b": 18}


def test_json_error_envelope(capsys):
    code, payload = run_json(capsys, "genus", "--weights", "1,1,2", "--degree", "3")
    assert code == 1
    assert payload["ok"] is False
    assert payload["error"]["code"] == "E_GENUS_NONINT"
    assert "1/4" in payload["error"]["message"]
    assert "data" not in payload


def test_json_env_var(capsys, monkeypatch):
    monkeypatch.setenv("WPS_JSON", "1")
    code = main(["genus", "--weights", "1,2,3", "--degree", "6"])
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, SCHEMA)
    assert code == 0
    assert payload["command"] == "genus"
