"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

from functools import lru_cache

import pytest

from milnorarr.arrangement import BUILDERS, build_boolean, compute_lattice

CRITERIA = {
    1: "multiplicity tables for G(m,m,d_X) and G(m,1,d_X)",
    2: "G31 builder validation and order-6 vanishing",
    3: "G(m,1,d_X): every lambda != 1 certified by the edge-order test",
    4: "G(m,m,d_X): vanishing for d_X=5, rho=1 at order 3 for d_X=4",
    5: "unipotent dimension d-1",
    6: "e_i gcd identity and global sections vs local system rank",
    7: "ADE determinant coincidence and negative control",
    8: "monomial-pair invariant ranks, closed form vs count",
    9: "Thom-Sebastiani unipotent ranks and product with a linear form",
    10: "Bezout projectors",
    11: "property suites",
}


@lru_cache(maxsize=None)
def lattice_for(builder: str, m: int = 0, dim: int = 0):
    if builder == "g31":
        return compute_lattice(BUILDERS["g31"]())
    if builder == "boolean":
        return compute_lattice(build_boolean(dim))
    return compute_lattice(BUILDERS[builder](m, dim))


@pytest.fixture(scope="session")
def lattice():
    return lattice_for


_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    marks = getattr(report, "criteria", None)
    if not marks:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            state = "xfail"
        else:
            state = report.outcome
        for n in marks:
            _outcomes.setdefault(n, []).append((report.nodeid, state))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _outcomes.get(n)
        if not runs:
            continue
        bad = [nid for nid, s in runs if s != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {n:2d}: {verdict}  {CRITERIA[n]}"
        if bad:
            line += f"  ({len(bad)} of {len(runs)} checks failing; see the decisions ledger)"
        tr.write_line(line)
