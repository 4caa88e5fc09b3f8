"""Line combinatorics and their decorated incidence graphs.

A line combinatorics records which lines of an arrangement pass through
which intersection points.  Two graphs are built from it:

* the reduced graph: one vertex per line and per point of multiplicity > 2,
  with line-point edges for those incidences plus one line-line edge per
  double point, and Euler decorations attached to every vertex;
* the full graph: one vertex per line and per point (any multiplicity), with
  line-point edges only and no decorations.

This module also hosts the exact projective-geometry oracle
intersect_equations(), which recovers a combinatorics from line equations
with coefficients in a number field Q[w]/(minpoly).
"""

from __future__ import annotations

import enum
import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


class ValidationError(ValueError):
    """Input is well-formed but semantically invalid."""


class NotSupportedError(ValueError):
    """Valid input outside the supported family (e.g. disconnected graph)."""


# ----------------------------------------------------------------------------
# Combinatorics
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class LineCombinatorics:
    """Lines 0..n_lines-1 plus the family of multi-line intersection points.

    Every point is a sorted tuple of at least two distinct line indices, and
    every unordered pair of lines lies in exactly one point.
    """

    n_lines: int
    points: tuple[tuple[int, ...], ...]

    def multiplicity(self, point_id: int) -> int:
        return len(self.points[point_id])

    def points_of_line(self, line: int) -> list[int]:
        return [j for j, p in enumerate(self.points) if line in p]

    def double_points(self) -> list[int]:
        return [j for j, p in enumerate(self.points) if len(p) == 2]

    def heavy_points(self) -> list[int]:
        """Point ids of multiplicity greater than two."""
        return [j for j, p in enumerate(self.points) if len(p) > 2]


def _as_combinatorics(n_lines, points_data) -> LineCombinatorics:
    if not isinstance(n_lines, int) or isinstance(n_lines, bool) or n_lines < 0:
        raise ValidationError(f"n_lines must be a nonnegative integer, got {n_lines!r}")
    norm: list[tuple[int, ...]] = []
    for raw in points_data:
        pt = tuple(sorted(raw))
        if len(pt) < 2:
            raise ValidationError(f"point {list(raw)} has fewer than 2 lines")
        if len(set(pt)) != len(pt):
            raise ValidationError(f"point {list(raw)} repeats a line index")
        for line in pt:
            if not isinstance(line, int) or isinstance(line, bool):
                raise ValidationError(f"line index {line!r} is not an integer")
            if not 0 <= line < n_lines:
                raise ValidationError(
                    f"line index {line} out of range for {n_lines} lines"
                )
        norm.append(pt)
    seen: dict[tuple[int, int], int] = {}
    for j, pt in enumerate(norm):
        for a in range(len(pt)):
            for b in range(a + 1, len(pt)):
                pair = (pt[a], pt[b])
                if pair in seen:
                    raise ValidationError(
                        f"line pair {pair} lies in two points ({seen[pair]} and {j})"
                    )
                seen[pair] = j
    for a in range(n_lines):
        for b in range(a + 1, n_lines):
            if (a, b) not in seen:
                raise ValidationError(f"line pair ({a}, {b}) lies in no point")
    return LineCombinatorics(n_lines=n_lines, points=tuple(norm))


def parse_combinatorics(text: bytes | str) -> LineCombinatorics:
    """Parse and validate a combinatorics JSON document.

    Expected shape: {"n_lines": int, "points": [[int, ...], ...]}.
    Raises json.JSONDecodeError or ValueError for malformed documents and
    ValidationError for semantically invalid ones.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    doc = json.loads(text)
    if not isinstance(doc, dict) or "n_lines" not in doc or "points" not in doc:
        raise ValueError('expected a JSON object with "n_lines" and "points"')
    if not isinstance(doc["points"], list) or not all(
        isinstance(p, list) for p in doc["points"]
    ):
        raise ValueError('"points" must be a list of lists')
    return _as_combinatorics(doc["n_lines"], doc["points"])


# ----------------------------------------------------------------------------
# Decorated incidence graphs
# ----------------------------------------------------------------------------


class GraphKind(enum.Enum):
    REDUCED = "reduced"
    FULL = "full"


@dataclass(frozen=True)
class DecoratedGraph:
    """Incidence graph with canonical vertex numbering and orientations.

    Vertices are numbered lines first (0..n_lines-1) then the selected points
    in ascending point-id order.  Labels are "L<i>" / "P<j>" with j the point's
    index in the combinatorics.  Edges are stored as (v, w) with v < w, sorted;
    the canonical orientation runs from the lower to the higher vertex index.
    euler is None on full graphs.
    """

    kind: GraphKind
    combinatorics: LineCombinatorics = field(repr=False)
    point_ids: tuple[int, ...]
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    neighbours: tuple[tuple[int, ...], ...]
    euler: tuple[int, ...] | None

    def __post_init__(self):
        object.__setattr__(
            self, "_edge_pos", {e: i for i, e in enumerate(self.edges)}
        )
        object.__setattr__(
            self, "_label_pos", {lab: i for i, lab in enumerate(self.labels)}
        )

    @property
    def n_lines(self) -> int:
        return self.combinatorics.n_lines

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_line(self, v: int) -> bool:
        return v < self.n_lines

    def multiplicity(self, v: int) -> int:
        return len(self.neighbours[v])

    def delta(self, v: int, w: int) -> int:
        """Orientation sign of the edge between v and w: +1 iff v < w."""
        if (min(v, w), max(v, w)) not in self._edge_pos:
            raise ValueError(f"no edge between vertices {v} and {w}")
        return 1 if v < w else -1

    def edge_position(self, v: int, w: int) -> int:
        return self._edge_pos[(min(v, w), max(v, w))]

    def vertex_by_label(self, label: str) -> int:
        try:
            return self._label_pos[label]
        except KeyError:
            raise ValidationError(f"unknown vertex label {label!r}") from None


def build_graph(c: LineCombinatorics, kind: GraphKind) -> DecoratedGraph:
    """Construct the reduced or full incidence graph of a combinatorics.

    Raises NotSupportedError if the graph is disconnected or has a vertex
    with fewer than two neighbours; warns about reduced-graph vertices of
    degree two (boundary cases of the supported family).
    """
    if kind is GraphKind.REDUCED:
        point_ids = tuple(c.heavy_points())
    else:
        point_ids = tuple(range(len(c.points)))
    n = c.n_lines
    vertex_of_point = {j: n + k for k, j in enumerate(point_ids)}
    labels = tuple(f"L{i}" for i in range(n)) + tuple(f"P{j}" for j in point_ids)

    edge_set: set[tuple[int, int]] = set()
    for j in point_ids:
        pv = vertex_of_point[j]
        for line in c.points[j]:
            edge_set.add((min(line, pv), max(line, pv)))
    if kind is GraphKind.REDUCED:
        for j in c.double_points():
            a, b = c.points[j]
            edge_set.add((a, b))
    edges = tuple(sorted(edge_set))

    count = len(labels)
    nbr: list[list[int]] = [[] for _ in range(count)]
    for v, w in edges:
        nbr[v].append(w)
        nbr[w].append(v)
    neighbours = tuple(tuple(sorted(ns)) for ns in nbr)

    lonely = [labels[v] for v in range(count) if len(neighbours[v]) < 2]
    if lonely:
        raise NotSupportedError(f"graph has dead-end vertices: {', '.join(lonely)}")
    seen = {0} if count else set()
    queue = [0] if count else []
    while queue:
        v = queue.pop()
        for w in neighbours[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != count:
        raise NotSupportedError("graph is disconnected")

    euler: tuple[int, ...] | None = None
    if kind is GraphKind.REDUCED:
        heavy = set(point_ids)
        eps = []
        for i in range(n):
            b = sum(1 for j in heavy if i in c.points[j])
            eps.append(1 - b)
        eps.extend([-1] * len(point_ids))
        euler = tuple(eps)
        thin = [labels[v] for v in range(count) if len(neighbours[v]) == 2]
        if thin:
            warnings.warn(
                f"reduced graph has degree-2 vertices ({', '.join(thin)}); "
                "results are exact but the arrangement is a boundary case",
                stacklevel=2,
            )

    return DecoratedGraph(
        kind=kind,
        combinatorics=c,
        point_ids=point_ids,
        labels=labels,
        edges=edges,
        neighbours=neighbours,
        euler=euler,
    )


def euler_number(g: DecoratedGraph, v: int) -> int:
    """Decoration of a reduced-graph vertex: 1-b(L) for lines, -1 for points."""
    if g.euler is None:
        raise ValueError("euler numbers are only defined on the reduced graph")
    return g.euler[v]


# ----------------------------------------------------------------------------
# Exact line intersection over a number field
# ----------------------------------------------------------------------------


class NumberField:
    """Q[w] / (minpoly), with elements as tuples of Fractions.

    minpoly lists integer coefficients in ascending powers of w; it need not
    be monic.  Use [0, 1] (the polynomial w) for plain rational arithmetic.
    """

    def __init__(self, minpoly: Sequence[int]):
        coeffs = [Fraction(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValidationError("minimal polynomial must have degree >= 1")
        lead = coeffs[-1]
        self.minpoly = tuple(c / lead for c in coeffs)
        self.degree = len(self.minpoly) - 1

    def element(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        poly = [Fraction(c) for c in coeffs]
        return self._reduce(poly)

    def zero(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) * self.degree

    def one(self) -> tuple[Fraction, ...]:
        return self.element([1])

    def _reduce(self, poly: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        poly = poly[:]
        for k in range(len(poly) - 1, d - 1, -1):
            c = poly[k]
            if c:
                for i in range(d + 1):
                    poly[k - d + i] -= c * self.minpoly[i]
        poly = poly[:d]
        poly.extend([Fraction(0)] * (d - len(poly)))
        return tuple(poly)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree - 1 if self.degree > 1 else 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def is_zero(self, a) -> bool:
        return not any(a)

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm in Q[X]."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        # r0 = minpoly, r1 = a; track only the coefficient of a.
        r0 = list(self.minpoly)
        r1 = list(a)
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is now gcd(minpoly, a): a nonzero constant when minpoly is
        # irreducible, which is the only supported use.
        if _poly_degree(r0) > 0:
            raise ValidationError(
                "minimal polynomial is reducible: zero divisor encountered"
            )
        lead = r0[0]
        return self._reduce([c / lead for c in s0])


def _poly_degree(p) -> int:
    for k in range(len(p) - 1, -1, -1):
        if p[k]:
            return k
    return -1


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    db = _poly_degree(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[db]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(_poly_degree(a), db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for i in range(db + 1):
                a[k - db + i] -= c * b[i]
    return q, a


def _normalise_projective(field: NumberField, vec):
    """Scale so the first nonzero coordinate is 1 (canonical representative)."""
    for coord in vec:
        if not field.is_zero(coord):
            scale = field.inv(coord)
            return tuple(field.mul(scale, c) for c in vec)
    return None


def intersect_equations(
    lines: Sequence[Sequence[Sequence[int]]], minpoly: Sequence[int]
) -> LineCombinatorics:
    """Combinatorics of an arrangement given exact projective line equations.

    Each line is three coefficient vectors (for x, y, z), each a list of
    integer coefficients in ascending powers of w, where w is a root of
    minpoly.  Intersections are exact cross products over Q[w]/(minpoly);
    the returned points are sorted lexicographically.
    """
    field = NumberField(minpoly)
    parsed = []
    for idx, line in enumerate(lines):
        if len(line) != 3:
            raise ValidationError(f"line {idx} needs exactly 3 coefficient vectors")
        vec = tuple(field.element(c) for c in line)
        norm = _normalise_projective(field, vec)
        if norm is None:
            raise ValidationError(f"line {idx} has all-zero coefficients")
        parsed.append(norm)
    seen: dict = {}
    for idx, vec in enumerate(parsed):
        if vec in seen:
            raise ValidationError(f"lines {seen[vec]} and {idx} are equal")
        seen[vec] = idx

    points: dict = {}
    n = len(parsed)
    for i in range(n):
        a = parsed[i]
        for j in range(i + 1, n):
            b = parsed[j]
            cross = (
                field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
                field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
                field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0])),
            )
            key = _normalise_projective(field, cross)
            if key is None:
                raise ValidationError(f"lines {i} and {j} are projectively equal")
            points.setdefault(key, set()).update((i, j))
    point_list = sorted(tuple(sorted(p)) for p in points.values())
    return _as_combinatorics(n, point_list)


def parse_equations(text: bytes | str):
    """Parse {"minpoly": [...], "lines": [[[...],[...],[...]], ...]} JSON."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    doc = json.loads(text)
    if not isinstance(doc, dict) or "minpoly" not in doc or "lines" not in doc:
        raise ValueError('expected a JSON object with "minpoly" and "lines"')
    return doc["lines"], doc["minpoly"]
