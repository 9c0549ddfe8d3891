"""CLI contract: exit codes, JSON schema conformance, text agreement."""

import json
from pathlib import Path

import jsonschema
import pytest

import nlie
from nlie.cli import main

SCHEMA = json.loads(
    (Path(nlie.__file__).parent / "schemas" / "report.schema.json").read_text())


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *args):
    code, out, err = run(capsys, *args, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["exit_code"] == code
    return code, doc


def test_algebra_list(capsys):
    code, doc = run_json(capsys, "algebra", "list")
    assert code == 0
    names = {a["name"] for a in doc["data"]["algebras"]}
    assert {"sl2", "elliptic", "quadric", "malcev-splittable"} <= names


def test_algebra_show(capsys):
    code, doc = run_json(capsys, "algebra", "show", "sl2")
    assert code == 0
    assert doc["data"]["arity"] == 2
    assert doc["data"]["variables"] == ["e", "f", "h"]
    code, _, err = run(capsys, "algebra", "show", "unknown-name")
    assert code == 2 and err


def test_bracket_text_and_json_agree(capsys):
    code, out, _ = run(capsys, "bracket", "--algebra", "sl2", "e", "f")
    assert code == 0 and out.strip() == "[e, f] = h"
    code, doc = run_json(capsys, "bracket", "--algebra", "sl2", "e", "f")
    assert doc["data"]["result"] == "h"


def test_bracket_with_explicit_casimir(capsys):
    code, doc = run_json(capsys, "bracket",
                         "--casimir", "1/2*h^2 + 2*e*f",
                         "--vars", "e,f,h", "e", "f")
    assert code == 0 and doc["data"]["result"] == "h"


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "bracket", "--algebra", "sl2", "e", "w + 1")
    assert code == 2
    assert "offset" in err
    code, _, err = run(capsys, "root", "--k", "2", "x +")
    assert code == 2


def test_wrong_arity_exits_2(capsys):
    code, _, err = run(capsys, "bracket", "--algebra", "sl2", "e")
    assert code == 2 and "usage error" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "sl2",
                       "--identity", "filippov", "--trials", "8")
    assert code == 0 and "PASS" in out
    code, doc = run_json(capsys, "verify", "--algebra", "malcev-splittable",
                         "--identity", "filippov", "--trials", "20")
    assert code == 1
    assert doc["ok"] is False
    assert doc["data"]["failure_count"] > 0
    code, out, _ = run(capsys, "verify", "--algebra", "malcev-splittable",
                       "--identity", "filippov", "--trials", "20")
    assert code == 1 and "FAIL" in out  # same verdict in text mode


def test_verify_malcev_passes_where_filippov_fails(capsys):
    code, _, _ = run(capsys, "verify", "--algebra", "malcev-splittable",
                     "--identity", "malcev", "--trials", "8")
    assert code == 0


def test_quotient_commands(capsys):
    code, doc = run_json(capsys, "quotient", "reduce", "--algebra", "sl2",
                         "--lambda", "2", "h^2 + 4*e*f")
    assert code == 0 and doc["data"]["result"] == "4"
    code, doc = run_json(capsys, "quotient", "grade", "--algebra", "sl2",
                         "--lambda", "2", "e*f + h")
    assert [c["residue"] for c in doc["data"]["classes"]] == [0, 1]
    code, doc = run_json(capsys, "quotient", "lift", "--algebra", "sl2",
                         "--lambda", "1", "e^2*h + 3*e")
    assert code == 0 and doc["data"]["degree"] == 3
    code, _, err = run(capsys, "quotient", "reduce", "--algebra", "sl2",
                       "--lambda", "0", "h")
    assert code == 2


def test_root_commands(capsys):
    code, doc = run_json(capsys, "root", "--k", "2", "x^2 + 2*x*y + y^2")
    assert code == 0 and doc["data"]["root"] == "x + y"
    code, doc = run_json(capsys, "root", "--k", "2", "x^2 + y^2")
    assert code == 0 and doc["data"]["found"] is False
    code, doc = run_json(capsys, "closed", "x^2 + y^2")
    assert doc["data"]["closed"] is True
    code, doc = run_json(capsys, "minroot", "x^4 + 2*x^2*y^2 + y^4")
    assert doc["data"]["k"] == 2 and doc["data"]["root"] == "x^2 + y^2"


def test_center_commands(capsys):
    code, doc = run_json(capsys, "center", "--algebra", "sl2", "--degree", "2")
    assert code == 0 and doc["data"]["dimension"] == 2
    code, doc = run_json(capsys, "center", "--algebra", "sl2", "--degree", "3",
                         "--quotient", "--lambda", "1")
    assert doc["data"]["dimension"] == 1
    code, doc = run_json(capsys, "center", "--algebra", "sl2",
                         "--element", "e*f + 1/4*h^2")
    assert doc["data"]["central"] is True
    code, _, err = run(capsys, "center", "--algebra", "sl2", "--quotient")
    assert code == 2  # --quotient without --lambda


def test_saturate_exit_codes(capsys):
    code, doc = run_json(capsys, "saturate", "--algebra", "sl2",
                         "--lambda", "1", "--seed", "e",
                         "--expect", "whole-ring")
    assert code == 0 and doc["data"]["verdict"] == "whole-ring"
    # verdict mismatch against --expect is a failure
    code, doc = run_json(capsys, "saturate",
                         "--casimir", "x^2 + 2*x*y + 2*x*z + y^2 + 2*y*z + z^2",
                         "--lambda", "1", "--seed", "x + y + z - 1",
                         "--expect", "whole-ring")
    assert code == 1 and doc["data"]["matched"] is False
    # exhausting the reduction budget is its own exit code
    code, doc = run_json(capsys, "saturate", "--algebra", "sl2",
                         "--lambda", "1", "--seed", "e", "--budget", "2")
    assert code == 3 and doc["data"]["verdict"] == "budget-exhausted"


def test_saturate_multiple_seeds(capsys):
    code, doc = run_json(capsys, "saturate", "--algebra", "quadric",
                         "--lambda", "1", "--seed", "x1", "--seed", "x2")
    assert code == 0 and len(doc["data"]["seeds"]) == 2


def test_casimir_suite(capsys):
    code, doc = run_json(capsys, "casimir-suite")
    assert code == 0 and doc["data"]["failed"] == 0


def test_no_color_when_not_a_tty(capsys):
    _, out, _ = run(capsys, "verify", "--algebra", "sl2",
                    "--identity", "skew", "--trials", "5")
    assert "\x1b[" not in out


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bracket"])  # argparse rejects the missing expressions
    assert info.value.code == 2
