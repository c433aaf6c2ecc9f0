import json
import os

import pytest

from corpus import triangle
from indpoly.cli import main
from indpoly.decomp import (GraphicLeaf, build_ef, make_sum, node_matroid,
                            parse_tree_file, write_tree)
from indpoly.verify import certify_equality


@pytest.fixture(scope="module")
def tree_path(tmp_path_factory):
    node = make_sum(2, GraphicLeaf(triangle()), GraphicLeaf(triangle()))
    return write_tree(node, str(tmp_path_factory.mktemp("cli")))


@pytest.fixture(scope="module")
def matrix_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("mat") / "m.m"
    path.write_text("2 2\n10\n11\n")
    return str(path)


def test_build(tree_path, capsys, tmp_path):
    out = str(tmp_path / "out.lp")
    assert main(["build", tree_path, "-o", out]) == 0
    summary = capsys.readouterr().out
    assert "inequalities=54" in summary and "elements=4" in summary
    text = open(out).read()
    assert text.startswith("\\ built from") and text.rstrip().endswith("End")
    assert " free" in text


def test_build_json(tree_path, capsys, tmp_path):
    assert main(["build", tree_path, "--format", "json",
                 "-o", str(tmp_path / "o.lp")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["inequalities"] == 54 and doc["elements"] == 4


def test_certify_exit_codes(tree_path, capsys):
    assert main(["certify", tree_path, "--trials", "10"]) == 0
    assert main(["certify", tree_path, "--inject-fault"]) == 1
    assert main(["certify", tree_path, "--cap", "2"]) == 2
    capsys.readouterr()


def test_certify_json_schema(tree_path, capsys):
    assert main(["certify", tree_path, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == 1 and doc["overall"] is True
    assert set(doc) >= {"elements", "vertex_checks", "rank_checks",
                        "nonneg_checks", "counts"}


def test_cli_agrees_with_library(tree_path, capsys):
    node = parse_tree_file(tree_path)
    report = certify_equality(build_ef(node), node_matroid(node))
    assert (main(["certify", tree_path]) == 0) == report.overall
    capsys.readouterr()


def test_matroid_queries(matrix_path, capsys):
    assert main(["matroid", matrix_path, "rank"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["matroid", matrix_path, "rank", "e1"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["matroid", matrix_path, "indep"]) == 0
    assert capsys.readouterr().out.strip() == "independent"
    assert main(["matroid", matrix_path, "indep", "e2", "e4"]) == 0
    assert capsys.readouterr().out.strip() == "dependent"
    assert main(["matroid", matrix_path, "enum"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "10" and len(lines) == 11
    assert main(["matroid", matrix_path, "rank", "zzz"]) == 1


def test_find_1sums(matrix_path, capsys, tmp_path):
    assert main(["find-1sums", matrix_path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1"
    split = tmp_path / "s.m"
    split.write_text("2 2\n10\n01\n")
    assert main(["find-1sums", str(split)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "2"


def test_gbound(capsys):
    assert main(["gbound", "7"]) == 0
    assert capsys.readouterr().out.strip() == "15"
    assert main(["gbound", "8"]) == 0
    assert capsys.readouterr().out.strip() == "30"


def test_rectcover(matrix_path, capsys):
    assert main(["rectcover", matrix_path]) == 0
    out = capsys.readouterr().out
    assert "coverage=100%" in out and "exchange_claim=True" in out


def test_error_paths(tmp_path, capsys):
    assert main(["certify", str(tmp_path / "absent.tree")]) == 1
    bad = tmp_path / "bad.tree"
    bad.write_text("junk\n")
    assert main(["build", str(bad)]) == 1
    assert main(["gbound", "0"]) == 1
    capsys.readouterr()
