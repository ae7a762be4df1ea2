import json
from pathlib import Path

import pytest

from alexmod.cli import main
from alexmod.document import dump_document, load_document, rep_from_document, rep_to_document
from alexmod.worked_examples import h_family_rep, quadric_rep

from conftest import rand_rep

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"
H = str(DATA / "h_family.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_fiber_module_text(capsys):
    code, out = run(capsys, "fiber-module", "--input", H, "--label=-27/16")
    assert code == 0
    assert "Λ/(t - 1) ⊕ Λ/(t - 1) ⊕ Λ/(t - 1)^2" in out
    code, out = run(capsys, "fiber-module", "--input", H, "--infinity")
    assert code == 0 and "Λ/(t + 1)^2" in out


def test_global_and_local(capsys):
    code, out = run(capsys, "global", "--input", H)
    assert code == 0 and "Λ_2/(t1-1,t2-1)" in out
    code, out = run(capsys, "local", "--input", H, "--value", "0")
    assert code == 0 and "Λ/(t - 1)" in out


def test_json_and_text_agree(capsys):
    _, text = run(capsys, "global", "--input", H)
    _, js = run(capsys, "global", "--input", H, "--format", "json")
    report = json.loads(js)
    assert report["results"]["global_module"]["text"] in text
    assert report["input_digest"] in text


def test_verify_command(capsys):
    code, out = run(capsys, "verify-paper")
    assert code == 0
    assert "WARN" in out and "Λ_ℤ/(t + 1)" in out
    code, out = run(capsys, "verify-paper", "--param", "b=0")
    assert code == 3
    code, out = run(capsys, "verify-paper", "--list")
    assert code == 0 and "conjugacy" in out


def test_utilities(capsys):
    code, out = run(capsys, "poly-transform", "--poly", "t^2+t+1", "--ell", "3")
    assert code == 0 and "(t - 1)^2" in out
    code, out = run(capsys, "bounds", "--mux", "10", "--mu0x", "10", "--mu", "16")
    assert code == 0 and "4" in out and "10" in out
    code, out = run(capsys, "constraint-check", "--p", "2", "--d", "3", "--shape", "1")
    assert code == 0 and "inconsistent" in out
    code, out = run(capsys, "snf", "--matrix", "[[1,0],[0,3]]")
    assert code == 0 and "ℤ/3" in out
    code, out = run(capsys, "cover", "--e", "1", "--hk", "[[-1]]")
    assert code == 0 and "ℤ/2" in out


def test_exit_codes(capsys, tmp_path):
    code, _ = run(capsys, "poly-transform", "--poly", "t^2 +", "--ell", "2")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": ')
    code, _ = run(capsys, "global", "--input", str(bad))
    assert code == 2
    code, _ = run(capsys, "local", "--input", H, "--value", "nope")
    assert code == 1
    code, _ = run(capsys, "bounds", "--mux", "9", "--mu0x", "1", "--mu", "8")
    assert code == 1
    code, _ = run(capsys, "global", "--input", str(tmp_path / "missing.json"))
    assert code == 1


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, _ = run(capsys, "global", "--input", H, "--format", "json", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["results"]["global_module"]["dimension"] == 1


def test_document_roundtrip(rng, tmp_path):
    reps = [h_family_rep(), quadric_rep(2)] + [rand_rep(rng, integral=bool(k % 2)) for k in range(20)]
    for k, rep in enumerate(reps):
        assert rep_from_document(rep_to_document(rep)) == rep
        path = tmp_path / f"r{k}.json"
        dump_document(rep, str(path))
        back, digest = load_document(str(path))
        assert back == rep and len(digest) == 64


def test_document_errors():
    from alexmod.arith import ParseError
    from alexmod.document import DocumentError

    doc = rep_to_document(h_family_rep())
    doc["distinguished"] = "5"
    with pytest.raises(DocumentError):
        rep_from_document(doc)
    doc = rep_to_document(h_family_rep())
    doc["generators"][0]["matrix"][0][0] = "1 +"
    with pytest.raises(ParseError, match="entry \\[0\\]\\[0\\]"):
        rep_from_document(doc)


def test_verify_command_is_deterministic(capsys):
    _, first = run(capsys, "verify-paper", "--format", "json")
    _, second = run(capsys, "verify-paper", "--format", "json")
    assert first == second
