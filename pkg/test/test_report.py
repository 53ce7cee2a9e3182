import sys
sys.path.append("src")

import json

import pytest

from errors import ConfigError
from report import (Edn, FORMATS, from_edn, from_transit, render_enumeration, render_reports,
                    report_rows)
from verifiers import VerificationReport

REPORTS = [
    VerificationReport("khlf", "2,2", 2, "exact-beta", True, "(x)/(y)", "(x)/(y)",
                       detail={"sit_count": 3}),
    VerificationReport("hlf", "2,1", None, "exact-count", False, "2", "3", runtime=0.5),
]


def test_rows_are_sorted_and_drop_runtime():
    rows = report_rows(REPORTS)
    assert [r["identity"] for r in rows] == ["hlf", "khlf"]
    assert "runtime" not in rows[0]
    assert report_rows(REPORTS, timing=True)[0]["runtime"] == 0.5


def test_json():
    rows = json.loads(render_reports(REPORTS, "json"))
    assert rows[0] == {"identity": "hlf", "shape": "2,1", "d": None, "mode": "exact-count",
                       "pass": False, "lhs": "2", "rhs": "3"}
    assert rows[1]["detail"] == {"sit_count": 3}


def test_csv_and_table():
    csv_text = render_reports(REPORTS, "csv")
    assert csv_text.splitlines() == ["identity,shape,d,mode,pass",
                                     "hlf,\"2,1\",,exact-count,False",
                                     "khlf,\"2,2\",2,exact-beta,True"]
    table = render_reports(REPORTS, "table").splitlines()
    assert table[0].split() == ["identity", "shape", "d", "mode", "pass"]
    assert table[1].split()[-1] == "FAIL"
    assert table[2].split()[-1] == "pass"


def test_edn_reads_back():
    rows = from_edn(render_reports(REPORTS, "edn"))
    assert rows == json.loads(render_reports(REPORTS, "json"))


def test_transit_reads_back():
    rows = from_transit(render_reports(REPORTS, "transit"))
    assert rows == json.loads(render_reports(REPORTS, "json"))


def test_edn_write_handlers():
    edn = Edn()
    edn.add_write_handler(VerificationReport, lambda r: r.identity_id)
    assert edn.write([REPORTS[0], {"a b": 1}]) == '["khlf" {"a b" 1}]'
    with pytest.raises(ValueError):
        edn.add_write_handler(VerificationReport, "not callable")


def test_enumeration_in_every_format():
    result = {"family": "syt", "shape": "2,1", "d": None, "count": 2,
              "tableaux": [{"cells": [{"r": 1, "c": 1, "entry": 1}]}]}
    for fmt in FORMATS:
        text = render_enumeration(result, fmt)
        assert "2,1" in text
    assert from_edn(render_enumeration(result, "edn")) == result
    with pytest.raises(ConfigError):
        render_enumeration(result, "yaml")


if __name__ == "__main__":
    test_rows_are_sorted_and_drop_runtime()
    test_json()
    test_csv_and_table()
    test_edn_reads_back()
    test_transit_reads_back()
    test_edn_write_handlers()
    test_enumeration_in_every_format()
    print("report: ok")
