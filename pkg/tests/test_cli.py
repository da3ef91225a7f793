from __future__ import annotations

import json

import pytest

from braidkit.cli import run
from braidkit.presentations.graphs import annulus_standard_graph, triangle_graph


def out(capsys, argv: list[str]) -> tuple[int, str]:
    code = run(argv)
    return code, capsys.readouterr().out.strip()


# -- the documented examples -----------------------------------------------------------


def test_eq_example(capsys):
    assert out(capsys, ["eq", "n=3", "s1 s2 s1", "s2 s1 s2"]) == (0, "equal")


def test_not_equal_exits_one(capsys):
    assert out(capsys, ["eq", "n=3", "s1", "s2"]) == (1, "not equal")


def test_brunnian_examples(capsys):
    assert out(capsys, ["brunnian", "n=2", "s1 s1"]) == (0, "brunnian: true")
    assert out(capsys, ["brunnian", "--strand", "1", "n=2", "s1"]) == (1, "1-brunnian: false")


def test_singular_nf_example(capsys):
    assert out(capsys, ["nf", "--kind=singular", "n=2", "a'(2,1)"]) == (0, "power=-1 base=")


# -- normal forms round trip ---------------------------------------------------------------


@pytest.mark.parametrize(
    "kind, n, word",
    [
        ("garside", 4, "s1 s2' s3 s2 s1"),
        ("bkl", 4, "a(4,2) a'(3,1) a(2,1)"),
        ("singular", 3, "x1 s2 b(3,1) a'(3,2)"),
        ("ib", 3, "s1 e2 s2' e1"),
    ],
)
def test_printed_normal_forms_reparse(capsys, kind, n, word):
    code, nf = out(capsys, ["nf", f"--kind={kind}", f"n={n}", word])
    assert code == 0
    assert out(capsys, ["eq", f"--kind={kind}", f"n={n}", nf, word]) == (0, "equal")


def test_json_output(capsys):
    code, text = out(capsys, ["--json", "eq", "n=3", "s1 s2 s1", "s2 s1 s2"])
    assert code == 0 and json.loads(text) == {"kind": "garside", "equal": True}
    code, text = out(capsys, ["nf", "--json", "n=3", "s1 s2 s1"])
    assert json.loads(text)["results"][0]["nf"] == "power=1 factors="


# -- other commands ----------------------------------------------------------------------------


def test_conj(capsys):
    code, text = out(capsys, ["conj", "n=3", "a(2,1)", "a(3,2)"])
    assert code == 0 and text.splitlines()[0] == "conjugate: true"
    code, text = out(capsys, ["conj", "--show-sets", "n=3", "a(2,1)", "b(2,1)"])
    assert code == 1 and text.splitlines()[0] == "conjugate: false"
    assert "C+(u) size=3" in text


def test_delete(capsys):
    assert out(capsys, ["delete", "--strand", "3", "n=3", "s1 s2"]) == (0, "n=2 s1")
    assert out(capsys, ["delete", "--strand", "1", "--strand", "1", "n=3", "s1"]) == (0, "n=1 1")


def test_convert(capsys):
    assert out(capsys, ["convert", "n=3", "s2"]) == (0, "n=3 a(3,2)")
    code, text = out(capsys, ["convert", "--direction", "band-to-artin", "n=3", "a(3,1)"])
    assert code == 0
    assert out(capsys, ["eq", "n=3", text.split(" ", 1)[1], "s2 s1 s2'"]) == (0, "equal")
    assert out(capsys, ["convert", "--direction", "classical-to-band", "n=2", "x1"]) == (0, "n=2 b(2,1)")
    assert out(capsys, ["convert", "--direction", "band-to-classical", "n=3", "b(3,1)"]) == (0, "n=3 s2 x1 s2'")


def test_pres_gen_and_verify(capsys):
    code, text = out(capsys, ["pres", "gen", "artin", "n=3"])
    assert code == 0 and text.splitlines()[-1] == "s1 s2 s1 = s2 s1 s2"
    code, text = out(capsys, ["pres", "verify", "sb", "n=4"])
    assert code == 0 and "19 hold, 0 fail" in text
    code, text = out(capsys, ["pres", "verify", "sphere", "n=4"])
    assert code == 0 and "I_4" in text


def test_pres_graph_file(capsys, tmp_path):
    path = tmp_path / "tri.yaml"
    path.write_text(triangle_graph().dump(), encoding="utf-8")
    code, text = out(capsys, ["pres", "gen", "--graph", str(path)])
    assert code == 0 and "s1 s2 = s2 s3" in text
    code, text = out(capsys, ["pres", "verify", "--graph", str(path), "--variant", "singular-plane"])
    assert code == 0 and " 0 fail" in text
    ann = tmp_path / "ann.yaml"
    ann.write_text(annulus_standard_graph(3).dump(), encoding="utf-8")
    code, text = out(capsys, ["pres", "verify", "--graph", str(ann), "--variant", "annulus"])
    assert code == 0 and " 0 fail" in text


def test_bench_small(capsys):
    code, text = out(capsys, ["bench", "--lengths", "20", "40", "--strands", "4", "--pairs", "3"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split() == ["n", "m", "garside_s", "bkl_s", "agree"]
    assert len(lines) == 3 and all(line.endswith("3/3") for line in lines[1:])


# -- errors -----------------------------------------------------------------------------------


def test_parse_error_reports_token_and_position(capsys):
    assert run(["nf", "n=3", "s1 q2"]) == 2
    err = capsys.readouterr().err
    assert "q2" in err and "1" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["eq", "n=3", "s1"],
        ["nf"],
        ["pres", "gen"],
        ["pres", "gen", "artin", "n"],
        ["pres", "gen", "nosuch", "n=3"],
        ["pres", "verify", "--graph", "/nonexistent.yaml"],
        ["frobnicate"],
        ["eq", "--kind", "bkl", "a(3,1)", "a(4,1)"],
    ],
)
def test_input_errors_exit_two(argv, capsys):
    assert run(argv) == 2
