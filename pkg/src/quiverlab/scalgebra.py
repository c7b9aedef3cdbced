"""Finite-dimensional algebras presented by a labeled basis and a
multiplication table over the rationals.

Elements are sparse dicts {basis index: coefficient}. The product x*y is
read right to left: y acts first, so nonzero products require the source
vertex of x to equal the target vertex of y.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ratmat import RatMatrix, as_fraction

Element = dict[int, Fraction]


@dataclass(frozen=True)
class BasisElement:
    label: str
    source: str
    target: str
    degree: int = 0


class SCAlgebra:
    """Associative unital algebra with a complete set of primitive
    orthogonal idempotents, one per vertex.

    mult maps (i, j) to the expansion of basis[i]*basis[j]; absent pairs
    multiply to zero. Instances are treated as immutable after construction;
    builders run verify() before handing one out.
    """

    __slots__ = ("vertices", "basis", "idempotents", "mult", "_by_label")

    def __init__(
        self,
        vertices: tuple[str, ...],
        basis: tuple[BasisElement, ...],
        idempotents: tuple[int, ...],
        mult: Mapping[tuple[int, int], Mapping[int, object]],
    ) -> None:
        self.vertices = tuple(vertices)
        self.basis = tuple(basis)
        self.idempotents = tuple(idempotents)
        dim = len(self.basis)
        if len(self.idempotents) != len(self.vertices):
            raise ValueError("need exactly one idempotent per vertex")
        if any(not (0 <= e < dim) for e in self.idempotents):
            raise ValueError("idempotent index out of range")
        table: dict[tuple[int, int], Element] = {}
        for (i, j), row in mult.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product key {(i, j)} out of range")
            clean: Element = {}
            for k, c in row.items():
                if not (0 <= k < dim):
                    raise ValueError(f"product of ({i},{j}) hits bad index {k}")
                f = as_fraction(c)
                if f:
                    clean[k] = f
            if clean:
                table[(i, j)] = clean
        self.mult = table
        self._by_label = {b.label: k for k, b in enumerate(self.basis)}
        if len(self._by_label) != dim:
            raise ValueError("duplicate basis label")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, label: str) -> int:
        return self._by_label[label]

    def element(self, label: str) -> Element:
        return {self._by_label[label]: Fraction(1)}

    def unit(self) -> Element:
        return {e: Fraction(1) for e in self.idempotents}

    def product(self, i: int, j: int) -> Element:
        return dict(self.mult.get((i, j), ()))

    def multiply(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Element:
        out: Element = {}
        for j, cy in y.items():
            for i, cx in x.items():
                row = self.mult.get((i, j))
                if not row:
                    continue
                f = cx * cy
                for k, c in row.items():
                    v = out.get(k, 0) + f * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def idempotent_index(self, vertex: str) -> int:
        return self.idempotents[self.vertices.index(vertex)]

    def verify(self) -> None:
        """Check every algebra law on the nose; raises ValueError on failure.

        Covered: idempotent laws, unit, source/target compatibility of the
        table, degree additivity, and associativity on all basis triples.
        """
        basis = self.basis
        dim = len(basis)
        for v, e in zip(self.vertices, self.idempotents):
            b = basis[e]
            if b.source != v or b.target != v or b.degree != 0:
                raise ValueError(f"idempotent for {v!r} has wrong endpoints or degree")
        one = Fraction(1)
        for a, ea in zip(self.vertices, self.idempotents):
            for b, eb in zip(self.vertices, self.idempotents):
                expected = {ea: one} if a == b else {}
                if self.product(ea, eb) != expected:
                    raise ValueError(f"idempotents {a!r}, {b!r} violate orthogonality")
        for k, b in enumerate(basis):
            if self.product(self.idempotent_index(b.target), k) != {k: one}:
                raise ValueError(f"left unit law fails on {b.label!r}")
            if self.product(k, self.idempotent_index(b.source)) != {k: one}:
                raise ValueError(f"right unit law fails on {b.label!r}")
        for (i, j), row in self.mult.items():
            bi, bj = basis[i], basis[j]
            if bi.source != bj.target:
                raise ValueError(
                    f"nonzero product {bi.label!r}*{bj.label!r} of non-composable pair")
            for k in row:
                bk = basis[k]
                if bk.source != bj.source or bk.target != bi.target:
                    raise ValueError(
                        f"product {bi.label!r}*{bj.label!r} leaves its Hom space")
                if bk.degree != bi.degree + bj.degree:
                    raise ValueError(
                        f"product {bi.label!r}*{bj.label!r} breaks degree additivity")
        for i in range(dim):
            for j in range(dim):
                ij = self.mult.get((i, j))
                for k in range(dim):
                    jk = self.mult.get((j, k))
                    if not ij and not jk:
                        continue
                    left = self.multiply(ij or {}, {k: one})
                    right = self.multiply({i: one}, jk or {})
                    if left != right:
                        raise ValueError(
                            f"associativity fails on "
                            f"({basis[i].label!r}, {basis[j].label!r}, {basis[k].label!r})")


def cartan_matrix(a: SCAlgebra) -> RatMatrix:
    """C[j][i] = number of basis elements from vertex i to vertex j."""
    index = {v: k for k, v in enumerate(a.vertices)}
    n = len(a.vertices)
    counts = [[0] * n for _ in range(n)]
    for b in a.basis:
        counts[index[b.target]][index[b.source]] += 1
    return RatMatrix([[Fraction(x) for x in row] for row in counts])
