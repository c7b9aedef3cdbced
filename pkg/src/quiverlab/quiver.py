"""Quiver data model, Tits form, and the finite/affine/indefinite trichotomy."""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .ratmat import RatMatrix


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; loops and parallel arrows are allowed."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow id")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known:
                raise ValueError(f"arrow {a.id!r} references unknown vertex {a.source!r}")
            if a.target not in known:
                raise ValueError(f"arrow {a.id!r} references unknown vertex {a.target!r}")

    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def is_connected(self) -> bool:
        neighbours: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            neighbours[a.source].add(a.target)
            neighbours[a.target].add(a.source)
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            for w in neighbours[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def reversed(self) -> "Quiver":
        flipped = tuple(Arrow(a.id, a.target, a.source, a.degree) for a in self.arrows)
        return Quiver(self.vertices, flipped)


@dataclass(frozen=True)
class QuiverType:
    """Trichotomy verdict; radical_vector is present exactly for affine type."""

    kind: str
    radical_vector: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("finite", "affine", "indefinite"):
            raise ValueError(f"unknown quiver type {self.kind!r}")
        if (self.radical_vector is not None) != (self.kind == "affine"):
            raise ValueError("radical vector is present exactly for affine type")


def _ident(value: object) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    raise ValueError(f"identifier must be a string or integer, got {value!r}")


def parse_quiver(document: str) -> Quiver:
    """Parse the JSON quiver format; arrow degrees default to 0."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed quiver document: {exc}") from exc
    return quiver_from_data(data)


def quiver_from_data(data: object) -> Quiver:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("quiver document must be a JSON object with a 'vertices' list")
    raw_vertices = data["vertices"]
    raw_arrows = data.get("arrows", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_arrows, list):
        raise ValueError("'vertices' and 'arrows' must be lists")
    vertices = tuple(_ident(v) for v in raw_vertices)
    arrows = []
    for entry in raw_arrows:
        if not isinstance(entry, dict):
            raise ValueError(f"arrow entry must be an object, got {entry!r}")
        missing = {"id", "from", "to"} - entry.keys()
        if missing:
            raise ValueError(f"arrow entry is missing {sorted(missing)}")
        degree = entry.get("degree", 0)
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise ValueError(f"arrow degree must be an integer, got {degree!r}")
        arrows.append(Arrow(_ident(entry["id"]), _ident(entry["from"]),
                            _ident(entry["to"]), degree))
    return Quiver(vertices, tuple(arrows))


def tits_matrix(q: Quiver) -> RatMatrix:
    """Doubled symmetric Tits matrix 2T, kept integral.

    Diagonal 2 - 2*#loops(v); off-diagonal -(#arrows between the pair,
    either direction). The quadratic form is q(x) = (1/2) x^T (2T) x.
    """
    index = q.vertex_index()
    n = len(q.vertices)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = Fraction(2)
    for a in q.arrows:
        i, j = index[a.source], index[a.target]
        if i == j:
            entries[i][i] -= 2
        else:
            entries[i][j] -= 1
            entries[j][i] -= 1
    return RatMatrix(entries)


def _is_psd(sym: RatMatrix) -> bool:
    """Exact positive-semidefiniteness by Schur-complement elimination."""
    work = [list(row) for row in sym.entries()]
    active = list(range(sym.rows))
    while active:
        if any(work[i][i] < 0 for i in active):
            return False
        pivot = next((i for i in active if work[i][i] > 0), None)
        if pivot is None:
            # zero diagonal throughout: PSD iff the whole block vanishes
            return all(work[i][j] == 0 for i in active for j in active)
        d = work[pivot][pivot]
        active.remove(pivot)
        for i in active:
            if work[i][pivot]:
                f = work[i][pivot] / d
                for j in active:
                    if work[pivot][j]:
                        work[i][j] -= f * work[pivot][j]
    return True


def _primitive_radical(kernel: list[list[Fraction]]) -> tuple[int, ...]:
    if len(kernel) != 1:
        raise RuntimeError("affine Tits kernel is not one-dimensional")
    vec = kernel[0]
    scale = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    if any(x < 0 for x in ints) or all(x == 0 for x in ints):
        raise RuntimeError("affine radical vector is not positive")
    return tuple(ints)


def classify_quiver(q: Quiver) -> QuiverType:
    """Finite iff 2T is positive definite, affine iff semidefinite with kernel.

    All definiteness tests are exact over the rationals; orientation and
    arrow degrees play no role.
    """
    if not q.is_connected:
        raise ValueError("classification requires a connected quiver")
    m = tits_matrix(q)
    if all(m.leading_minor(k).det() > 0 for k in range(1, m.rows + 1)):
        return QuiverType("finite")
    if _is_psd(m):
        radical = _primitive_radical([list(v) for v in m.kernel_basis()])
        return QuiverType("affine", radical)
    return QuiverType("indefinite")


def has_oriented_cycle(q: Quiver) -> bool:
    index = q.vertex_index()
    n = len(q.vertices)
    pending = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    for a in q.arrows:
        pending[index[a.source]] += 1
        preds[index[a.target]].append(index[a.source])
    # Kahn's algorithm; leftovers mean an oriented cycle
    queue = deque(i for i in range(n) if pending[i] == 0)
    removed = 0
    while queue:
        removed += 1
        for p in preds[queue.popleft()]:
            pending[p] -= 1
            if pending[p] == 0:
                queue.append(p)
    return removed != n


def cartan_path_algebra(q: Quiver) -> RatMatrix:
    """Cartan matrix of the path algebra: C[j][i] = #paths from i to j.

    Column i is the dimension vector of the projective at vertex i.
    """
    if has_oriented_cycle(q):
        raise ValueError("quiver has an oriented cycle; its path algebra is infinite-dimensional")
    index = q.vertex_index()
    n = len(q.vertices)
    steps = [[Fraction(0)] * n for _ in range(n)]
    for a in q.arrows:
        steps[index[a.target]][index[a.source]] += 1
    # paths = I + N + N^2 + ... = (I - N)^{-1} for nilpotent N
    return (RatMatrix.identity(n) - RatMatrix(steps)).inverse()


def coxeter_matrix(c: RatMatrix) -> RatMatrix:
    """Coxeter transformation -C^T C^{-1} on column dimension vectors."""
    if not c.is_square:
        raise ValueError("Cartan matrix must be square")
    return -(c.T * c.inverse())
