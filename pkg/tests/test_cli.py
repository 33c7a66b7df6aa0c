import json

import pytest

from lzse.cli import main


@pytest.fixture
def sample(tmp_path):
    p = tmp_path / "in.txt"
    p.write_bytes(b"ababbababab")
    return p


def test_compress_decompress_roundtrip(sample, tmp_path, capsys):
    arc = tmp_path / "out.lzse"
    out = tmp_path / "restored.txt"
    assert main(["compress", str(sample), "-o", str(arc)]) == 0
    assert main(["decompress", str(arc), "-o", str(out)]) == 0
    assert out.read_bytes() == sample.read_bytes()


def test_access_and_extract(sample, tmp_path, capsys):
    arc = tmp_path / "out.lzse"
    main(["compress", str(sample), "-o", str(arc)])
    capsys.readouterr()
    assert main(["access", str(arc), "-p", "10"]) == 0
    assert capsys.readouterr().out.strip() == "a"
    assert main(["extract", str(arc), "-l", "5", "-r", "7"]) == 0
    assert capsys.readouterr().out.strip() == "bab"


def test_verify(sample, tmp_path, capsys):
    arc = tmp_path / "out.lzse"
    main(["compress", str(sample), "-o", str(arc)])
    assert main(["verify", str(arc), "--original", str(sample)]) == 0
    other = tmp_path / "other.txt"
    other.write_bytes(b"abababababa")
    assert main(["verify", str(arc), "--original", str(other)]) == 2


def test_repair_se_method(sample, tmp_path):
    arc = tmp_path / "r.lzse"
    out = tmp_path / "r.txt"
    assert main(["compress", str(sample), "--method", "repair-se", "-o", str(arc)]) == 0
    assert main(["decompress", str(arc), "-o", str(out)]) == 0
    assert out.read_bytes() == sample.read_bytes()


def test_stats_json(sample, capsys):
    rc = main(["stats", str(sample), "--methods",
               "lz77,lzss,lzse,repair,repair-se", "--json"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 11
    assert set(report["methods"]) == {"lz77", "lzss", "lzse", "repair", "repair-se"}
    assert report["methods"]["lzse"]["factors"] == 5
    assert report["repair_se_factors_le_repair_size"] is True


def test_stats_respects_thread_env(sample, capsys, monkeypatch):
    monkeypatch.setenv("LZSE_THREADS", "2")
    assert main(["stats", str(sample), "--methods", "lzse,lzss", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["methods"]["lzse"]["factors"] == 5


def test_stats_unknown_method(sample, capsys):
    assert main(["stats", str(sample), "--methods", "zpaq"]) == 1


def test_gen_and_token_roundtrip(tmp_path, capsys):
    tok = tmp_path / "orsp.tok"
    assert main(["gen", "orsp", "-m", "3", "--seed", "7", "-o", str(tok)]) == 0
    arc = tmp_path / "orsp.lzse"
    out = tmp_path / "orsp.out"
    assert main(["compress", str(tok), "-o", str(arc)]) == 0
    assert main(["decompress", str(arc), "-o", str(out)]) == 0
    assert out.read_bytes() == tok.read_bytes()


def test_gen_families(tmp_path):
    for args in (["gen", "unary", "-n", "32", "-o", str(tmp_path / "u")],
                 ["gen", "random", "-n", "64", "--sigma", "4", "--seed", "1",
                  "-o", str(tmp_path / "r")],
                 ["gen", "periodic", "--pattern", "ab", "--reps", "5",
                  "-o", str(tmp_path / "p")],
                 ["gen", "lower-bound", "-m", "3", "-o", str(tmp_path / "lb")]):
        assert main(args) == 0
    assert (tmp_path / "p").read_bytes() == b"ababababab"


def test_usage_and_data_errors(tmp_path, capsys):
    assert main(["bogus"]) == 1
    assert main(["compress", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.lzse"
    bad.write_bytes(b"GARBAGE")
    assert main(["decompress", str(bad)]) == 2
