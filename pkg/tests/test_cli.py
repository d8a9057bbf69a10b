"""Command-line behavior: exit codes, output formats, determinism."""

import json
import os

import pytest

from knopf import jsonio
from knopf.cli import main


def _data(name: str) -> str:
    return os.path.join(os.path.dirname(__file__), "data", name)


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "unimodular" in capsys.readouterr().out


def test_verify_hopf_ok(capsys):
    assert main(["verify", _data("uL-p2.json")]) == 0
    assert "all axioms hold" in capsys.readouterr().out


def test_verify_scheme_and_comodule(capsys):
    assert main(["verify", _data("mu3a5.json")]) == 0
    assert main(["verify", _data("w-plus-wdual.json")]) == 0
    assert main(["verify", _data("minus-id.json")]) == 0
    capsys.readouterr()


def test_verify_corrupt_hopf_exits_one(tmp_path, capsys):
    obj = json.load(open(_data("uL-p2.json")))
    i, j, k, _ = obj["mult"][3]
    obj["mult"][3] = [i, j, k, 0]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(obj))
    assert main(["verify", str(p)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "mismatch" in out


def test_malformed_json_exits_two(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2,')
    assert main(["verify", str(p)]) == 2
    assert "line" in capsys.readouterr().err


def test_missing_file_exits_two(capsys):
    assert main(["unimodular", "/no/such/file.json"]) == 2
    capsys.readouterr()


def test_unimodular_verdict_is_content(capsys):
    assert main(["unimodular", _data("uL-p2.json")]) == 0
    out = capsys.readouterr().out
    assert "unimodular: false" in out

    assert main(["unimodular", _data("uL-p2.json"), "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["unimodular"] is False
    assert payload["left"] == [[0, 1, 0, 1]]
    assert payload["right"] == [[0, 0, 0, 1]]


def test_symmetric_subcommand(capsys):
    assert main(["symmetric", _data("uL-p2.json")]) == 0
    out = capsys.readouterr().out
    assert "symmetric: false" in out and "frobenius: true" in out


def test_knop_subcommand(capsys):
    assert main(["knop", _data("mu3a5.json"), "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["knop_character"] == "t"
    assert payload["modular_route"] == "t^2"
    assert payload["trivial"] is False
    assert payload["routes_agree"] is True


def test_invariants_subcommand(capsys):
    assert main(["invariants", "--module", _data("minus-id.json"),
                 "--max-degree", "6", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dims"] == [1, 0, 3, 0, 5, 0, 7]


def test_molien_subcommand(capsys):
    assert main(["molien", _data("molien-minus-id.json"),
                 "--max-degree", "6", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["a_invariant"] == -2
    assert payload["coefficients"] == ["1", "0", "3", "0", "5", "0", "7"]
    assert payload["numerator"] == ["1", "0", "1"]


def test_molien_positive_characteristic_exits_two(capsys):
    assert main(["molien", _data("molien-minus-id.json"),
                 "--field", "Fp:3"]) == 2
    capsys.readouterr()


def test_classify_constant_group(capsys):
    assert main(["classify", "--module", _data("minus-id.json"),
                 "--max-degree", "8", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["conditions"]["c6"] == "holds"
    assert payload["a_invariant"]["omega_route"] == -2
    assert payload["a_invariant"]["molien_route"] == -2


def test_classify_scheme_module_pair(capsys):
    assert main(["classify", "--scheme", _data("mu3a5.json"),
                 "--module", _data("w-plus-wdual.json"),
                 "--assert-small", "--max-degree", "6",
                 "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["conditions"]["c1"] == "holds"
    assert payload["conditions"]["c4"] == "fails"
    assert payload["watanabe_criterion"] is False
    assert payload["smallness"] == "asserted"


def test_classify_without_assert_small_exits_two(capsys):
    assert main(["classify", "--scheme", _data("mu3a5.json"),
                 "--module", _data("w-plus-wdual.json")]) == 2
    assert "assert-small" in capsys.readouterr().err


def test_negative_max_degree_exits_two(capsys):
    assert main(["invariants", "--module", _data("minus-id.json"),
                 "--max-degree", "-2"]) == 2
    capsys.readouterr()


def test_gjs_subcommand(capsys):
    assert main(["gjs", "--module", _data("minus-id.json"),
                 "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["holds"] is True and payload["strict"] is False


def test_trace_subcommand(capsys):
    assert main(["trace", "--module", _data("minus-id.json"),
                 "--max-degree", "4", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert payload["unimodular"] is True


def test_catalog_list_and_run(capsys):
    assert main(["catalog", "list"]) == 0
    assert "watanabe-minus-id" in capsys.readouterr().out
    assert main(["catalog", "run", "watanabe-minus-id"]) == 0
    assert "pass" in capsys.readouterr().out


def test_catalog_run_with_param(capsys):
    assert main(["catalog", "run", "uL", "--param", "p=3"]) == 0
    capsys.readouterr()
    assert main(["catalog", "run", "uL", "--param", "oops"]) == 2
    capsys.readouterr()
    assert main(["catalog", "run", "no-such-entry"]) == 2
    capsys.readouterr()


def test_catalog_param_without_name_exits_two(capsys):
    assert main(["catalog", "run", "--param", "p=3"]) == 2
    capsys.readouterr()


def test_json_output_byte_deterministic(capsys):
    args = ["classify", "--module", _data("minus-id.json"),
            "--max-degree", "6", "--output", "json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    # canonical form: keys sorted, trailing newline
    assert first == jsonio.canonical_json(json.loads(first))


def test_text_and_json_verdicts_agree(capsys):
    assert main(["knop", _data("mu3a5.json")]) == 0
    text = capsys.readouterr().out
    assert main(["knop", _data("mu3a5.json"), "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert ("trivial: false" in text) == (payload["trivial"] is False)
    assert "t^2" in text and payload["modular_route"] == "t^2"


def test_field_override_flag(tmp_path, capsys):
    # group algebra of C4 over Q reinterpreted over F2: no longer semisimple
    # but still a Hopf algebra; verify passes either way
    from knopf.catalog import cyclic_table
    from knopf.hopf import group_algebra

    obj = jsonio.hopf_to_json(group_algebra(jsonio.parse_field("Q"),
                                            cyclic_table(4)))
    p = tmp_path / "c4.json"
    p.write_text(json.dumps(obj))
    assert main(["verify", str(p), "--field", "Fp:2"]) == 0
    capsys.readouterr()
