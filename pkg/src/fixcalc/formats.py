"""
JSON and CSV shapes for reports.

Every JSON document carries ``"schema": 1``.  Subsets are written with the
``{a,b,c}`` text grammar so they round-trip through
:func:`fixcalc.lattice.parse_subset`.  Output is byte-stable: keys keep
insertion order and floats use ``repr``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict

SCHEMA_VERSION = 1


def dumps(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **doc}, indent=2, ensure_ascii=False) + "\n"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def fixpoint_doc(report) -> dict:
    p = report.partition
    return {
        "generator": report.generator_name,
        "universe": report.lfp.universe.size,
        "lfp": str(report.lfp),
        "gfp": str(report.gfp),
        "lfp_trace": [str(s) for s in report.lfp_trace],
        "gfp_trace": [str(s) for s in report.gfp_trace],
        "partition": {
            "mu": str(p.mu),
            "nu_minus_mu": str(p.nu_minus_mu),
            "outside": str(p.outside),
        },
    }


def fixpoint_csv(report) -> str:
    """``key,subset`` rows: extremal points, partition, then both traces."""
    p = report.partition
    rows = [
        ("lfp", report.lfp), ("gfp", report.gfp),
        ("partition.mu", p.mu), ("partition.nu_minus_mu", p.nu_minus_mu),
        ("partition.outside", p.outside),
    ]
    rows += [(f"lfp_trace.{i}", s) for i, s in enumerate(report.lfp_trace)]
    rows += [(f"gfp_trace.{i}", s) for i, s in enumerate(report.gfp_trace)]
    return csv_text(("key", "subset"), ((k, str(s)) for k, s in rows))


def classification_doc(name, universe, rows, counts) -> dict:
    return {
        "generator": name,
        "universe": universe.size,
        "classes": [{"subset": str(s), "class": str(c)} for s, c in rows],
        "counts": {str(c): n for c, n in counts.items()},
    }


def classification_csv(rows) -> str:
    return csv_text(("subset", "class"), ((str(s), str(c)) for s, c in rows))


def duality_doc(report) -> dict:
    return {
        "generator": report.generator_name,
        "universe": report.gfp_direct.universe.size,
        "gfp_direct": str(report.gfp_direct),
        "rejected": str(report.rejected),
        "gfp_via_duality": str(report.gfp_via_duality),
        "agrees": report.agrees,
    }


def census_doc(census) -> dict:
    return {
        "limit": census.limit,
        "counts": {str(c): n for c, n in census.counts.items()},
        "perfect": list(census.perfect),
    }


def number_rows_csv(rows) -> str:
    return csv_text(("n", "sd", "class"), ((n, s, str(c)) for n, s, c in rows))


def result_doc(result) -> dict:
    d = asdict(result)
    if d["bracket"] is not None:
        d["bracket"] = list(d["bracket"])
    return d


def root_scan_doc(spec, scan, kind) -> dict:
    return {
        "function": spec.name,
        "kind": kind,
        "points": [result_doc(p) for p in scan.points],
        "intervals": [list(iv) for iv in scan.intervals],
    }


def plot_csv(rows) -> str:
    return csv_text(("x", "phi(x)", "x", "class"),
                    ((repr(x), repr(y), repr(i), str(c)) for x, y, i, c in rows))
