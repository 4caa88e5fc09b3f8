"""Bundled arrangement data and simple constructed families."""

from __future__ import annotations

import importlib.resources

from linestab.combinatorics import (
    LineCombinatorics,
    parse_combinatorics,
    parse_equations,
)


def data_text(name: str) -> str:
    """Raw text of a bundled data file, e.g. data_text("maclane.json")."""
    return (importlib.resources.files("linestab") / "data" / name).read_text()


def maclane() -> LineCombinatorics:
    return parse_combinatorics(data_text("maclane.json"))


def quadruplet() -> LineCombinatorics:
    return parse_combinatorics(data_text("quadruplet.json"))


def rybnikov() -> LineCombinatorics:
    return parse_combinatorics(data_text("rybnikov.json"))


def maclane_equations():
    return parse_equations(data_text("maclane_equations.json"))


def quadruplet_equations():
    return parse_equations(data_text("quadruplet_equations.json"))


def generic(n_lines: int) -> LineCombinatorics:
    """n lines in general position: every intersection is a double point."""
    points = [
        [a, b] for a in range(n_lines) for b in range(a + 1, n_lines)
    ]
    return LineCombinatorics(
        n_lines=n_lines, points=tuple(tuple(p) for p in points)
    )
