import io
import json

import pytest

from hopfbiprod import ParseError, SemanticError
from hopfbiprod.cli import RunReport, emit_report, main, parse_config, run

INT_REP = {"category": {"kind": "mat", "semiring": "INT"}, "monad": {"kind": "representable", "H": 1},
           "plan": {"max_dim": 2, "morphisms_per_hom": 2}, "seed": 42}
NAT_REP = {"category": {"kind": "mat", "semiring": "NAT"}, "monad": {"kind": "representable", "H": 1},
           "plan": {"max_dim": 2, "morphisms_per_hom": 2}, "strategy": {"kind": "search", "bound": 3}}
CORRUPT = dict(INT_REP, test_hooks={"mu_terms": [[1, 1], [1, 1], [2, 3]]})


def _write(tmp_path, doc, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return str(p)


def test_parse_valid_configs():
    cfg = parse_config(json.dumps(INT_REP))
    assert cfg.plan.seed == 42 and cfg.plan.max_dim == 2
    assert cfg.monad == {"kind": "representable", "H": {"dim": 1}}
    cfg = parse_config('{"category": {"kind": "fgab"}, "monad": {"kind": "cyclic_tensor", "n": 2},'
                       ' "plan": {"orders": [0, 2, 3, 4]}}')
    assert cfg.plan.orders == (0, 2, 3, 4)
    cfg = parse_config(json.dumps({
        "category": {"kind": "product", "left": {"kind": "mat"}, "right": {"kind": "mat"}},
        "monad": {"kind": "product", "left": {"kind": "representable", "H": 1}, "right": {"kind": "zero"}},
    }))
    assert cfg.monad["right"] == {"kind": "zero"}


def test_parse_rejects_invalid_pairing():
    with pytest.raises(SemanticError, match="monad.kind"):
        parse_config('{"category": {"kind": "mat", "semiring": "NAT"}, "monad": {"kind": "cyclic_tensor", "n": 2}}')
    with pytest.raises(SemanticError, match="monad.H"):
        parse_config('{"category": {"kind": "fgab"}, "monad": {"kind": "representable", "H": {"orders": [1]}}}')


def test_parse_errors_name_line_or_field():
    with pytest.raises(ParseError, match="line 3"):
        parse_config('{\n "category": {"kind": "mat"},\n "monad": {kind: 1}\n}')
    with pytest.raises(ParseError, match="'monad'"):
        parse_config('{"category": {"kind": "mat"}}')
    with pytest.raises(ParseError, match="plan.orders"):
        parse_config('{"category": {"kind": "fgab"}, "monad": {"kind": "identity"}, "plan": {"orders": [1]}}')
    with pytest.raises(ParseError, match="category.modulus"):
        parse_config('{"category": {"kind": "mat", "semiring": "MOD"}, "monad": {"kind": "identity"}}')
    with pytest.raises(ParseError, match="colour"):
        parse_config('{"category": {"kind": "mat"}, "monad": {"kind": "identity"}, "colour": 1}')


def test_run_statuses():
    assert run(parse_config(json.dumps(INT_REP))).status == 0
    nat = run(parse_config(json.dumps(NAT_REP)))
    assert nat.status == 2 and nat.hopf["search"]["bound"] == 3
    bad = run(parse_config(json.dumps(CORRUPT)))
    assert bad.status == 3 and bad.hopf is None
    cx = bad.laws["laws"]["associativity"]["counterexample"]
    assert cx["lhs"]["matrix"] and cx["lhs"]["dom"] == {"dim": 3}


def test_run_report_round_trip():
    report = run(parse_config(json.dumps(INT_REP)), timing=True)
    d = json.loads(emit_report(report, "json"))
    assert d["schema_version"] == 1 and d["verdict"] == "verified_hopf"
    assert RunReport.from_dict(d).to_dict() == d
    with pytest.raises(ParseError):
        RunReport.from_dict(dict(d, schema_version=99))


def test_text_report_lists_checks():
    text = emit_report(run(parse_config(json.dumps(NAT_REP))), "text")
    assert "search bound: 3" in text and "verdict: inconclusive (exit 2)" in text


def test_main_exit_codes(tmp_path, capsys):
    assert main(["run", _write(tmp_path, INT_REP), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "verified_hopf"
    assert main(["run", _write(tmp_path, NAT_REP)]) == 2
    assert "bound 3" in capsys.readouterr().out
    assert main(["run", _write(tmp_path, CORRUPT)]) == 3
    assert main(["run", _write(tmp_path, "{not json")]) == 4
    assert main(["run", str(tmp_path / "missing.json")]) == 4
    assert main(["frobnicate"]) == 4
    assert main(["run", _write(tmp_path, INT_REP), "--jobs", "0"]) == 4


def test_main_flags_override_config(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["run", _write(tmp_path, NAT_REP), "--format", "json", "--seed", "5",
                 "--search-bound", "1", "--output", str(out)]) == 2
    d = json.loads(out.read_text())
    assert d["config"]["plan"]["seed"] == 5 and d["hopf"]["search"]["bound"] == 1
    assert "timing" not in d


def test_stdin_config(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(INT_REP)))
    assert main(["run", "-", "--format", "json"]) == 0


def test_structured_output_is_byte_identical(tmp_path, capsys):
    path = _write(tmp_path, INT_REP)
    main(["run", path, "--format", "json", "--jobs", "1"])
    a = capsys.readouterr().out
    main(["run", path, "--format", "json", "--jobs", "8"])
    assert capsys.readouterr().out == a
