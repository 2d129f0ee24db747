"""CLI: bundled files parse and validate, reports reproduce byte-for-byte."""

import json
import os

import pytest

from maxsub.cli import run
from maxsub.formats import load_algebra, load_text, parse_algebra
from maxsub.algebra import validate_algebra

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")
REPORTS = os.path.join(DATA, "reports")


@pytest.fixture(autouse=True)
def _run_from_repo_root(monkeypatch):
    monkeypatch.chdir(ROOT)


ALGEBRA_FILES = ["m2_q.alg", "m3_q.alg", "m4_q.alg", "m2_f2.alg", "m2_f3.alg",
                 "kxkxm2_f2.alg", "kxk_q.alg", "f4_f2.alg", "zigzag_a5.alg"]


@pytest.mark.parametrize("name", ALGEBRA_FILES)
def test_bundled_algebras_validate(name):
    alg = parse_algebra(load_text(os.path.join(DATA, name)))
    assert validate_algebra(alg).ok


@pytest.mark.parametrize("name", ["a2.quiver", "a3.quiver", "a4.quiver",
                                  "kronecker.quiver", "d4.quiver", "d5.quiver",
                                  "chain3.poset", "diamond.poset",
                                  "zigzag_a5.poset"])
def test_bundled_presentations_build(name):
    alg = load_algebra(os.path.join(DATA, name))
    assert validate_algebra(alg).ok


def _recorded_table():
    import importlib.util
    spec = importlib.util.spec_from_file_location(
        "record_reports", os.path.join(ROOT, "scripts", "record_reports.py"))
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod.RECORDED


@pytest.mark.parametrize("name", sorted(os.listdir(REPORTS)))
def test_recorded_reports_reproduce_byte_for_byte(name):
    argv = _recorded_table()[name]
    code, text = run(argv)
    assert code == 0
    with open(os.path.join(REPORTS, name), "r", encoding="utf-8") as fh:
        assert text == fh.read()


def test_json_payload_roundtrips():
    code, text = run(["--json", "maximal", "brute", "data/m2_f2.alg"])
    assert code == 0
    payload = json.loads(text)
    assert payload["result"]["class_count"] == 2
    assert json.loads(json.dumps(payload)) == payload


def test_exit_code_parse_error():
    code, text = run(["structure", "data/does_not_exist.alg"])
    assert code == 2
    assert "parse error" in text


def test_exit_code_operation_error():
    code, text = run(["maxdim", "data/f4_f2.alg"])
    assert code == 1
    assert "error" in text


def test_exit_code_bad_span():
    code, text = run(["maximal", "certify", "data/m2_q.alg",
                      "data/scalars_m2q.span"])
    assert code == 0   # scalars form a subalgebra; certificate says not maximal
    assert "not_maximal" in text


def test_malformed_algebra_rejected(tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("field Q\ndim 2\nbasis a b\nunit 1 0\nmul 1 5 -> 1:1\n")
    code, text = run(["structure", str(bad)])
    assert code == 2
    assert "line" in text


def test_seed_echoed_and_deterministic():
    code1, text1 = run(["--seed", "7", "structure", "data/m2_q.alg"])
    code2, text2 = run(["--seed", "7", "structure", "data/m2_q.alg"])
    assert code1 == code2 == 0
    assert text1 == text2
    assert "seed: 7" in text1


def test_maxdim_m3_value():
    code, text = run(["maxdim", "data/m3_q.alg"])
    assert code == 0
    assert "max_proper_subalgebra_dim: 7" in text


def test_structure_a3_quiver_fields():
    code, text = run(["structure", "data/a3.quiver"])
    assert code == 0
    assert "radical_dim: 3" in text
    assert text.count("  1\n") >= 3   # three blocks of size 1


def test_quiver_maximal_with_hyperplane():
    code, text = run(["quiver", "maximal", "data/kronecker.quiver",
                      "split", "a", "b", "--hyperplane", "1,1"])
    assert code == 0
    assert "certified: maximal" in text


def test_instantiate_roundtrip_from_enumerate():
    code, text = run(["maximal", "enumerate", "data/kronecker.quiver",
                      "--field", "F2"])
    assert code == 0
    records = [line.strip() for line in text.splitlines()
               if line.strip().startswith("family ")]
    assert len(records) == 4
    for rec in records:
        code2, text2 = run(["maximal", "instantiate", "data/kronecker.quiver",
                            "--field", "F2", "--family", rec])
        assert code2 == 0
        assert "codim: 1" in text2
