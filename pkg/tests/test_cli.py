import json

import pytest

from seaweed import cli
from seaweed.core import parse_spec


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_index_worked_examples(capsys):
    code, out, _ = run(capsys, "index", "C:200:15,185|17,61,117")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "index", "D:335:218,15,102|33,301")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "index", "A:9:2,4,3|5,2,2")
    assert code == 0 and out.strip() == "3"


def test_index_methods(capsys):
    for method in ("auto", "meander", "reduce"):
        code, out, _ = run(capsys, "index", "C:5:2,3|3,1", "--method", method)
        assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "index", "C:7:4|4", "--method", "formula")
    assert code == 0 and out.strip() == "7"


def test_index_formula_shape_mismatch(capsys):
    code, _, err = run(capsys, "index", "C:9:1,2,3|1,1", "--method", "formula")
    assert code == 3 and "no closed formula" in err


def test_index_parse_error(capsys):
    code, _, err = run(capsys, "index", "C:9:whoops")
    assert code == 2 and "error" in err


def test_index_trace_json_lines(capsys):
    code, out, _ = run(capsys, "index", "C:200:15,185|17,61,117", "--trace")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0"
    records = [json.loads(line) for line in lines[1:]]
    assert records[-1]["rule"] == "terminal"
    shrinks = [r for r in records if r.get("rule") == "shrink"]
    assert shrinks[0]["after"]["t"] == 385


def test_index_json_byte_stable(capsys):
    code, out1, _ = run(capsys, "index", "D:335:218,15,102|33,301", "--json", "--trace")
    code2, out2, _ = run(capsys, "index", "D:335:218,15,102|33,301", "--json", "--trace")
    assert code == code2 == 0 and out1 == out2
    payload = json.loads(out1)
    assert payload["index"] == 3 and payload["schema"] == 1


def test_index_auto_cross_checks_meander(capsys, monkeypatch):
    # force a disagreement to exercise the mismatch exit path
    monkeypatch.setattr(cli.meander, "index_from_meander", lambda spec: 99)
    code, _, err = run(capsys, "index", "C:5:2,3|3,1")
    assert code == 4 and "meander" in err


def test_render_ascii_and_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "A:9:2,4,3|5,2,2", "--format", "ascii")
    assert code == 0 and out.count("o") == 9
    target = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "render", "D:10:1,6,3|3,2,4", "--format", "svg",
                     "-o", str(target))
    assert code == 0
    body = target.read_text()
    assert body.startswith("<svg") and body.count("#cc0000") == 2


def test_render_bound_exit(capsys):
    code, _, err = run(capsys, "render", "C:20001:-|-", "--format", "svg")
    assert code == 3 and "bound" in err


def test_verify_small_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--type", "C", "--max-n", "3",
                       "--oracle", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["checked"] == 84 and report["mismatch_count"] == 0


def test_verify_reports_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli, "formula_index",
                        lambda spec: 123 if str(spec) == "C:2:2|1" else None)
    code, out, _ = run(capsys, "verify", "--type", "C", "--max-n", "2")
    assert code == 4 and "C:2:2|1" in out


def test_census_cli(capsys):
    code, out, _ = run(capsys, "census", "--max-n", "2", "--odd")
    assert code == 0
    report = json.loads(out)
    assert report["rows"][0]["count_D"] == 2
    assert report["odd"] == [{"count_D": 0, "rank_D": 3}]
    code, _, err = run(capsys, "census", "--max-n", "40")
    assert code == 3 and "evaluations" in err


def test_family_chain(capsys):
    code, out, _ = run(capsys, "family", "chain", "--alphas", "2")
    assert code == 0 and out.strip() == "C:4:4|3 index=0"


def test_family_padding(capsys):
    code, out, _ = run(capsys, "family", "padding", "--spec", "C:9:9|1,1,1,1",
                       "--t", "1")
    assert code == 0 and out.strip() == "C:29:29|10,1,1,1,1,10 index=0"


def test_family_doubling(capsys):
    code, out, _ = run(capsys, "family", "doubling", "--from", "A:2:1,1|2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        spec_text, verdict = line.split(" ")
        assert verdict == "index=0"
        assert parse_spec(spec_text).n == 4  # so(8) scale


def test_family_doubling_rejects_non_unit_index(capsys):
    code, _, err = run(capsys, "family", "doubling", "--from", "A:2:2|2")
    assert code == 2 and "index 1" in err


def test_family_missing_params(capsys):
    code, _, err = run(capsys, "family", "chain")
    assert code == 2
