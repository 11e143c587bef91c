"""Smoke tests for the python module and the CLI surface."""

import json
import math
import os
import subprocess
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

import _tdpoly as t


TDPOLY = os.environ.get("TDPOLY_BIN")


def run_cli(*args, check=True):
    assert TDPOLY, "TDPOLY_BIN not set"
    proc = subprocess.run([TDPOLY, *args], capture_output=True, text=True)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_package_import_fallback():
    import tdpoly

    assert tdpoly.complete(3).order() == 3


def test_counts_and_polynomials():
    assert t.count_total_dominating_sets(t.complete(3)) == [0, 0, 3, 1]
    assert t.count_total_dominating_sets(t.cycle(4)) == [0, 0, 4, 4, 1]
    p = t.total_domination_polynomial(t.friendship(2))
    assert p.coefficients() == [0, 0, 4, 6, 5, 1]
    assert p == t.dt_friendship(2)
    assert t.total_domination_polynomial_ie(t.book(3)) == t.dt_book(3)
    assert t.total_domination_number(t.friendship(4)) == 2
    assert t.total_domination_number(t.empty_graph(3)) is None


def test_graph_surface():
    g = t.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g == t.cycle(4)
    assert g.neighbors(0) == [1, 3]
    assert t.open_neighborhood(g, [0, 1]) == [0, 1, 2, 3]
    assert t.is_total_dominating(g, [0, 1])
    assert not t.is_total_dominating(g, [0, 2])
    with pytest.raises(ValueError):
        t.from_edge_list(2, [(0, 0)])


def test_big_coefficients_cross_the_boundary():
    p = t.dt_complete(80)
    assert p.coefficient(40) == math.comb(80, 40)
    assert p.eval(1) == 2**80 - 80 - 1


def test_roots_and_sturm():
    rs = t.find_roots(t.dt_complete_bipartite(2, 2))
    assert rs["zero_multiplicity"] == 2
    assert rs["roots"][0]["multiplicity"] == 2
    assert abs(rs["roots"][0]["re"] + 2.0) < 1e-10

    assert t.integer_roots(t.dt_complete(3), 3.0) == [-3, 0]
    assert t.count_real_roots(t.dt_complete(3), None, Fraction(-1, 2)) == 1
    assert t.count_real_roots(t.dt_complete(3), "1/2", None) == 0
    assert t.count_nonzero_real_roots(t.dt_book(2)) == 2
    assert t.disc_bound_radius(t.complete(2)) == pytest.approx(3.0)


def test_checks_and_campaign():
    assert t.check_kmn_circle(3, 4)["status"] == "pass"
    assert t.check_kn_even_no_real(8)["status"] == "pass"
    assert t.check_bn_no_nonzero_real(2)["status"] == "fail"  # known source defect
    config = {
        "seed": 42,
        "checks": ["monotone_counts", "kn_even_no_real"],
        "corpus": {"n_min": 4, "n_max": 5, "per_cell": 3},
        "ranges": {"kn_even_max": 8, "family_order_max": 6},
    }
    result = t.run_campaign(config)
    assert result["theorem_failures"] == 0
    assert all(r["status"] in ("pass", "skipped") for r in result["reports"])
    again = t.run_campaign(config)
    assert result == again
    with pytest.raises(ValueError):
        t.run_campaign({"checks": ["bogus"]})


def test_cli_poly_and_determinism():
    a = run_cli("poly", "complete:3")
    b = run_cli("poly", "complete:3")
    assert a.stdout == b.stdout  # byte-deterministic
    data = json.loads(a.stdout)
    assert data["coefficients"] == ["0", "0", "3", "1"]
    assert data["gamma_t"] == 2
    assert data["unimodal"] is True

    table = run_cli("poly", "friendship:2", "--format", "table").stdout
    assert "gamma_t: 2" in table


def test_cli_roots_and_disc():
    out = json.loads(run_cli("roots", "kmn:2,2").stdout)
    assert out["roots"]["zero_multiplicity"] == 2
    checked = json.loads(run_cli("roots", "book:5", "--check-disc").stdout)
    assert checked["disc_check"]["pass"] is True


def test_cli_sweep_and_svg(tmp_path):
    csv_path = tmp_path / "kmn.csv"
    svg_path = tmp_path / "kmn.svg"
    run_cli("sweep", "kmn", "2..12", "--out", str(csv_path), "--svg", str(svg_path))
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "param,re,im,multiplicity,residual"
    assert any(line.startswith("2x3,") for line in lines)
    ET.parse(svg_path)  # well-formed XML


def test_cli_check_exit_codes(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("{}")
    proc = run_cli("check", str(empty), "--out", str(tmp_path / "r.jsonl"))
    assert (tmp_path / "r.jsonl").read_text() == ""

    bad = tmp_path / "bad.json"
    bad.write_text('{"checks": ["nope"]}')
    proc = run_cli("check", str(bad), check=False)
    assert proc.returncode == 2

    small = tmp_path / "small.json"
    small.write_text(
        json.dumps(
            {
                "checks": ["kmn_circle"],
                "ranges": {"kmn_sum_max": 8},
            }
        )
    )
    proc = run_cli("check", str(small), "--out", str(tmp_path / "s.jsonl"))
    reports = [json.loads(line) for line in (tmp_path / "s.jsonl").read_text().splitlines()]
    assert reports and all(r["status"] == "pass" for r in reports)

    # the book defect makes a theorem-level failure: nonzero exit
    book = tmp_path / "book.json"
    book.write_text(json.dumps({"checks": ["bn_no_nonzero_real"], "ranges": {"bn_max": 3}}))
    proc = run_cli("check", str(book), check=False)
    assert proc.returncode == 1


def test_cli_resource_error():
    proc = run_cli("poly", "path:40", check=False)
    assert proc.returncode == 3  # enumeration cap

    proc = run_cli("poly", "path:18", "--cap", "17", check=False)
    assert proc.returncode == 3
