import json

from twistalg.cli import main


def test_expand_examples(capsys):
    assert main(["expand", "--algebra", "sl2h", "a1*b1 - mubar*b1*a1"]) == 0
    assert main(["expand", "--algebra", "c4", "z3*z1"]) == 0
    assert main(["expand", "--algebra", "c4", "1"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0", "mubar * z1*z3", "1"]


def test_expand_modulo_relations(capsys):
    assert main(["expand", "--algebra", "s7", "z1'*z1 + z2'*z2 + z3'*z3 + z4'*z4"]) == 0
    assert main(["expand", "--algebra", "sl2h-det1", "a1*d1 - d1*a1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1"


def test_expand_numeric(capsys):
    assert main(["expand", "--algebra", "c4", "--theta", "0.5", "z3*z1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "mubar * z1*z3"
    assert "z1*z3" in out[1] and "i" in out[1]


def test_expand_parse_error(capsys):
    assert main(["expand", "--algebra", "c4", "z1 + * z2"]) == 2
    assert "position 5" in capsys.readouterr().err


def test_table(tmp_path):
    out = tmp_path / "sl.tsv"
    assert main(["table", "--algebra", "sl2h", "--out", str(out)]) == 0
    first = out.read_bytes()
    assert b"c1\td1\tmubar\n" in first
    assert main(["table", "--algebra", "sl2h", "--out", str(out)]) == 0
    assert out.read_bytes() == first
    assert main(["table", "--algebra", "c4", "--out", str(out)]) == 0
    assert b"z1\tz1*\t1\n" in out.read_bytes()


def test_unknown_suite_is_a_usage_error():
    assert main(["verify", "--suite", "nonexistent"]) == 2


def test_bad_flags_are_usage_errors():
    assert main(["verify", "--format", "xml"]) == 2
    assert main(["verify", "--parallelism", "0"]) == 2


def test_verify_json_report(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "appendix-a", "--format", "json", "--out", str(out)]) == 0
    r = json.loads(out.read_text())
    assert r["schema_version"] == 1
    assert r["suite"] == "appendix-a"
    assert r["summary"] == {"pass": 2, "fail": 0, "skipped": 0}
    assert all(set(c) == {"id", "statement", "paper_ref", "status", "witness", "metrics"} for c in r["checks"])


def test_failures_give_exit_one_with_witness(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "sp-ideal", "--format", "json", "--out", str(out)]) == 1
    bad = [c for c in json.loads(out.read_text())["checks"] if c["status"] == "fail"]
    assert [c["id"] for c in bad] == ["sp.pi_I.hom"]
    assert bad[0]["witness"]


def test_completion_limit_gives_exit_three():
    assert main(["verify", "--suite", "instanton", "--completion-limit", "0"]) == 3


def test_parallel_run_matches_serial(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--suite", "determinant", "--format", "json", "--no-timing"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b), "--parallelism", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
