"""cli-service: command line and HTTP front ends."""

import json

import pytest
from fastapi.testclient import TestClient

from coxknot.cli import main
from coxknot.report import gallery_report, geometry_document
from coxknot.service import app

client = TestClient(app)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_verify_trefoil(capsys):
    code, out, _ = run_cli(capsys, "verify", "--word", "CBDCDCDCBADCBA",
                           "--repeat", "3")
    assert code == 0
    assert "is_closed: True" in out
    assert "order: 3" in out
    assert "knot: 3_1" in out


def test_cli_order_and_reduce(capsys):
    code, out, _ = run_cli(capsys, "order", "--word", "CABDACB")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run_cli(capsys, "reduce", "--word", "AA")
    assert code == 0 and out.strip() == ""


def test_cli_identify(capsys):
    code, out, _ = run_cli(capsys, "identify", "--word", "CBDCDCDCBADCBA",
                           "--repeat", "3")
    assert code == 0 and out.strip().startswith("3_1")
    code, _, err = run_cli(capsys, "identify", "--word", "AC")
    assert code == 1 and "error:" in err


def test_cli_invalid_word(capsys):
    code, _, err = run_cli(capsys, "verify", "--word", "AXE")
    assert code == 1
    assert err.startswith("error:") and "\n" == err[err.index("\n"):]


def test_cli_search(capsys):
    code, out, _ = run_cli(capsys, "search", "--mode", "order3",
                           "--max-piece-len", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[0] == "AC"
    assert all(len(line.split()) == 5 for line in lines)


def test_cli_translate(capsys, tmp_path):
    piece = tmp_path / "p.piece"
    piece.write_text("name: trefoil\nstatic: FFFUURBB\nsigma: (FDR)(BUL)\n")
    code, out, _ = run_cli(capsys, "translate", "--piece", str(piece))
    assert code == 0
    assert "order: 3" in out and "knot: 3_1" in out


def test_cli_export_roundtrip(capsys, tmp_path):
    out_file = tmp_path / "doc.json"
    code, _, _ = run_cli(capsys, "export", "--word", "ADAD", "--repeat", "1",
                         "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert len(doc["chambers"]) == 5
    again = geometry_document(doc["word"], doc["repeat"])
    assert again["diagnostics"] == doc["diagnostics"]
    assert again == doc


# ----------------------------------------------------------------- HTTP API

def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_analyze_matches_cli_report():
    body = client.post("/gallery/analyze",
                       json={"word": "ADAD", "repeat": 1}).json()
    assert body == gallery_report("ADAD", 1)
    assert body["is_closed"] is True


def test_analyze_errors():
    r = client.post("/gallery/analyze", json={"word": "AXB"})
    assert r.status_code == 400 and "error" in r.json()
    r = client.post("/gallery/analyze", json={"word": "ABAB", "repeat": 0})
    assert r.status_code == 422 and "error" in r.json()


def test_geometry_counts():
    body = client.post("/gallery/geometry",
                       json={"word": "A", "repeat": 1}).json()
    assert len(body["chambers"]) == 2
    assert body["chambers"][0]["vertices"]["A"] == [0, 0, 0]
    assert all(isinstance(x, int) for ch in body["chambers"]
               for v in ch["vertices"].values() for x in v)


def test_translate_endpoint():
    body = client.post("/translate", json={
        "static_word": "FRUUUUUBBBBBDDDDFFFLLLUU",
        "sigma": "(FUR)(BDL)"}).json()
    assert body["report"]["order"] == 3
    assert body["report"]["knot"] == "9_47"
    assert body["gluing"]["kind"] == "bar"
    r = client.post("/translate", json={"static_word": "FFF",
                                        "sigma": "(FUR)(BDL)"})
    assert r.status_code == 422
    r = client.post("/translate", json={"static_word": "FXF",
                                        "sigma": "(FUR)(BDL)"})
    assert r.status_code == 400


def test_search_endpoint_and_cap():
    body = client.post("/search", json={"mode": "order3",
                                        "max_piece_length": 4,
                                        "limit": 3}).json()
    assert len(body["records"]) == 3 and body["truncated"]
    assert client.post("/search", json={
        "mode": "order3", "max_piece_length": 13}).status_code == 413
    assert client.post("/search", json={
        "mode": "bogus", "max_piece_length": 4}).status_code == 400


def test_statelessness():
    a = client.post("/gallery/analyze", json={"word": "ACACAC"}).json()
    b = client.post("/gallery/analyze", json={"word": "ACACAC"}).json()
    assert a == b


def test_corpus_served():
    text = client.get("/corpus/words").text
    assert "CBDCDCDCBADCBA 3 3_1" in text
