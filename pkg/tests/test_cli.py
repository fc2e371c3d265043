"""Command-line behavior: exit codes, determinism of emitted bytes, and the
diagnostic stream."""

import json

from catbundle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_writes_document(tmp_path, capsys):
    out = tmp_path / "inst.json"
    code, _, _ = run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["meta"] == {"name": "s3-line5", "seed": 3, "noise": True}


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "s3-line5", "--seed", "3")
    assert code == 0
    assert json.loads(out)["meta"]["seed"] == 3


def test_generate_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "generate", "s3-line5", "--seed", "9", "--out", str(a))
    run(capsys, "generate", "s3-line5", "--seed", "9", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_unknown_preset_is_usage_error(capsys):
    code, _, err = run(capsys, "generate", "nope")
    assert code == 2
    assert "invalid choice" in err


def test_validate_good_document(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    rep = tmp_path / "rep.json"
    code, _, _ = run(capsys, "validate", str(doc), "--out", str(rep))
    assert code == 0
    assert json.loads(rep.read_text())["status"] == "pass"


def test_validate_law_breaking_document_exits_1(tmp_path, capsys):
    doc_path = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc_path))
    doc = json.loads(doc_path.read_text())
    key = next(k for k in sorted(doc["cocycle"]["h"])
               if k.split("|")[0] != k.split("|")[1])
    doc["cocycle"]["h"][key] = "(123)" if doc["cocycle"]["h"][key] != "(123)" \
        else "(12)"
    doc_path.write_text(json.dumps(doc))
    rep = tmp_path / "rep.json"
    code, _, _ = run(capsys, "validate", str(doc_path), "--out", str(rep))
    assert code == 1
    report = json.loads(rep.read_text())
    assert report["status"] == "fail"
    bad = [c for c in report["checks"] if c["status"] == "fail"]
    assert bad and all(c["witness"] for c in bad)


def test_validate_truncated_document_exits_2(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    doc.write_text(doc.read_text()[:200])
    code, _, err = run(capsys, "validate", str(doc))
    assert code == 2
    assert "line" in err


def test_validate_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 2
    assert err.strip()


def test_check_single_suite(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    rep = tmp_path / "rep.json"
    code, _, _ = run(capsys, "check", str(doc), "--suite", "peiffer",
                     "--out", str(rep))
    assert code == 0
    report = json.loads(rep.read_text())
    assert report["suite"] == "peiffer"
    assert all(c["status"] == "pass" for c in report["checks"])


def test_check_reports_are_byte_identical(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for target in (a, b):
        code, _, _ = run(capsys, "check", str(doc), "--suite", "quotient",
                         "--out", str(target))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_check_diagnostic_lists_checks_on_stderr(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    code, _, err = run(capsys, "check", str(doc), "--suite", "gerbal",
                       "--diagnostic")
    assert code == 0
    assert "gerbal.relation: pass" in err


def test_check_oracle_suite_needs_directed_base(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    code, _, err = run(capsys, "check", str(doc), "--suite", "oracle")
    assert code == 2
    assert "directed" in err


def test_check_bundle_suite_needs_identity_edges(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "oracle-dirline3", "--seed", "3", "--out", str(doc))
    code, _, err = run(capsys, "check", str(doc), "--suite", "bundle")
    assert code == 2


def test_check_oracle_suite_on_dirline3(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "oracle-dirline3", "--seed", "3", "--out", str(doc))
    rep = tmp_path / "rep.json"
    code, _, _ = run(capsys, "check", str(doc), "--suite", "oracle",
                     "--out", str(rep))
    assert code == 0
    report = json.loads(rep.read_text())
    ids = {c["check"] for c in report["checks"]}
    assert "oracle.agreement" in ids


def test_max_path_len_flag_changes_surface(tmp_path, capsys):
    doc = tmp_path / "inst.json"
    run(capsys, "generate", "s3-line5", "--seed", "3", "--out", str(doc))
    code, _, _ = run(capsys, "check", str(doc), "--suite", "functorial",
                     "--max-path-len", "1")
    assert code == 0
