"""Minimal projective resolutions and Betti-growth complexity estimates.

Modules over a structure-constant algebra are dense rational matrix
representations.  Resolutions iterate projective covers and exact syzygy
computations; for basic algebras whose radical is spanned by the
non-idempotent basis elements the syzygies are tracked sparsely, which keeps
the large trivial-extension runs tractable.
"""

from __future__ import annotations

import heapq
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .fitting import fit_line
from .ratmat import RatMatrix, VecSpan, as_fraction
from .scalgebra import SCAlgebra

TRUNCATION_REASONS = ("steps-exhausted", "dimension-cap", "resolution-terminated")

LOGLOG_RESIDUAL_THRESHOLD = 0.15
EXPONENTIAL_SLOPE_THRESHOLD = 0.05
MIN_TRACE_LENGTH = 12

THREADS_ENV_VAR = "QUIVERLAB_THREADS"


@dataclass(frozen=True)
class RepModule:
    """Left module given by one action matrix per algebra basis element."""

    algebra: SCAlgebra
    dim: int
    actions: tuple[RatMatrix, ...]

    def validate(self) -> None:
        """Check the action respects the multiplication table; raise otherwise."""
        a = self.algebra
        if self.dim < 0:
            raise ValueError("module dimension must be nonnegative")
        if self.dim == 0:
            if self.actions:
                raise ValueError("zero module carries no action matrices")
            return
        if len(self.actions) != a.dim:
            raise ValueError("need one action matrix per basis element")
        for m in self.actions:
            if m.rows != self.dim or m.cols != self.dim:
                raise ValueError("action matrix shape does not match module dimension")
        unit = RatMatrix.zeros(self.dim, self.dim)
        for e in a.idempotents:
            unit = unit + self.actions[e]
        if not unit.is_identity():
            raise ValueError("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.actions[i] * self.actions[j]
                rhs = RatMatrix.zeros(self.dim, self.dim)
                for k, c in a.product(i, j).items():
                    rhs = rhs + self.actions[k].scale(c)
                if lhs != rhs:
                    raise ValueError(
                        f"action violates the multiplication table at pair ({i}, {j})"
                    )

    def dim_vector(self) -> tuple[int, ...]:
        """Dimension of each vertex component, in vertex order."""
        if self.dim == 0:
            return tuple(0 for _ in self.algebra.vertices)
        return tuple(int(self.actions[e].trace()) for e in self.algebra.idempotents)


def zero_module(a: SCAlgebra) -> RepModule:
    return RepModule(a, 0, ())


@dataclass(frozen=True)
class ResolutionTrace:
    """Projective dimensions along a resolution plus the reason it stopped."""

    betti: tuple[int, ...]
    truncated_by: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "betti", tuple(int(d) for d in self.betti))
        if not self.betti:
            raise ValueError("resolution trace needs at least one entry")
        if any(d < 0 for d in self.betti):
            raise ValueError("projective dimensions are nonnegative")
        if self.truncated_by not in TRUNCATION_REASONS:
            raise ValueError(f"unknown truncation reason: {self.truncated_by!r}")
        if self.truncated_by == "resolution-terminated" and self.betti[-1] != 0:
            raise ValueError("a terminated trace ends with a zero projective")

    def to_json_dict(self) -> dict:
        return {"betti": list(self.betti), "truncated_by": self.truncated_by}


@dataclass(frozen=True)
class ComplexityEstimate:
    """Verdict on polynomial Betti growth: finite degree, infinite, or unclear."""

    kind: str
    degree: int | None = None
    reason: str | None = None

    @staticmethod
    def finite(degree: int) -> "ComplexityEstimate":
        return ComplexityEstimate("finite", degree=degree)

    @staticmethod
    def infinite() -> "ComplexityEstimate":
        return ComplexityEstimate("infinite")

    @staticmethod
    def inconclusive(reason: str) -> "ComplexityEstimate":
        return ComplexityEstimate("inconclusive", reason=reason)

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def jacobson_radical(a: SCAlgebra) -> list[tuple[Fraction, ...]]:
    """Basis of the radical via the characteristic-zero trace-form criterion.

    x is radical exactly when trace of left multiplication by b*x vanishes
    for every basis element b.  The candidate is verified to be a nilpotent
    two-sided ideal before it is returned.
    """
    d = a.dim
    mult_trace = [Fraction(0)] * d
    for m in range(d):
        total = Fraction(0)
        for k in range(d):
            row = a.mult.get((m, k))
            if row:
                total += row.get(k, Fraction(0))
        mult_trace[m] = total
    gram = []
    for i in range(d):
        row = [Fraction(0)] * d
        for j in range(d):
            prod = a.mult.get((i, j))
            if prod:
                row[j] = sum((c * mult_trace[m] for m, c in prod.items()), Fraction(0))
        gram.append(row)
    basis = [tuple(v) for v in RatMatrix(gram).kernel_basis()]
    _verify_nilpotent_ideal(a, basis)
    return basis


def _verify_nilpotent_ideal(a: SCAlgebra, basis: list[tuple[Fraction, ...]]) -> None:
    d = a.dim
    span = VecSpan(d)
    for vec in basis:
        span.add(vec)
    sparse = [{k: v for k, v in enumerate(vec) if v} for vec in basis]
    for x in sparse:
        for i in range(d):
            unit = {i: Fraction(1)}
            for prod in (a.multiply(unit, x), a.multiply(x, unit)):
                if not span.contains(_densify(prod, d)):
                    raise RuntimeError("radical candidate is not a two-sided ideal")
    power = sparse
    for _ in range(d + 1):
        if not power:
            return
        nxt = VecSpan(d)
        for x in power:
            for y in sparse:
                nxt.add(_densify(a.multiply(x, y), d))
        power = [{k: v for k, v in enumerate(vec) if v} for vec in nxt.basis()]
    raise RuntimeError("radical candidate is not nilpotent")


def _densify(element: dict, length: int) -> list[Fraction]:
    out = [Fraction(0)] * length
    for k, c in element.items():
        out[k] = c
    return out


def simple_modules(a: SCAlgebra) -> list[RepModule]:
    """One-dimensional simple module at each vertex, in vertex order.

    Requires the semisimple quotient to be a product of copies of the field;
    the idempotents together with the radical must then form a basis.
    """
    rad = jacobson_radical(a)
    if len(rad) + len(a.idempotents) != a.dim:
        raise ValueError("algebra is not basic")
    columns = [_unit_vector(e, a.dim) for e in a.idempotents]
    columns.extend(rad)
    try:
        change = RatMatrix.from_columns(columns).inverse()
    except ValueError as exc:
        raise ValueError("algebra is not basic") from exc
    simples = []
    for pos in range(len(a.vertices)):
        actions = tuple(RatMatrix([[change[pos, m]]]) for m in range(a.dim))
        simples.append(RepModule(a, 1, actions))
    return simples


def _unit_vector(index: int, length: int) -> list[Fraction]:
    vec = [Fraction(0)] * length
    vec[index] = Fraction(1)
    return vec


def _source_coords(a: SCAlgebra) -> list[list[int]]:
    pos = {v: p for p, v in enumerate(a.vertices)}
    out: list[list[int]] = [[] for _ in a.vertices]
    for m, b in enumerate(a.basis):
        out[pos[b.source]].append(m)
    return out


def _projective_sum(a: SCAlgebra, verts: list) -> RepModule:
    """Direct sum of the projectives generated at the given vertices."""
    by_vertex = _source_coords(a)
    pos = {v: p for p, v in enumerate(a.vertices)}
    blocks = [by_vertex[pos[v]] for v in verts]
    local = [{m: i for i, m in enumerate(block)} for block in blocks]
    offsets = []
    total = 0
    for block in blocks:
        offsets.append(total)
        total += len(block)
    actions = []
    for b in range(a.dim):
        rows = [[Fraction(0)] * total for _ in range(total)]
        for copy, block in enumerate(blocks):
            base = offsets[copy]
            table = local[copy]
            for col, m in enumerate(block):
                prod = a.mult.get((b, m))
                if prod:
                    for k, c in prod.items():
                        rows[base + table[k]][base + col] = c
        actions.append(RatMatrix(rows))
    return RepModule(a, total, tuple(actions))


def _top_lift(a: SCAlgebra, module: RepModule, rad) -> list[tuple]:
    """Vertex-tagged vectors lifting a basis of module / rad*module."""
    covered = VecSpan(module.dim)
    for r in rad:
        action = None
        for m, c in enumerate(r):
            if c:
                term = module.actions[m].scale(c)
                action = term if action is None else action + term
        if action is not None:
            for col in action.columns():
                covered.add(col)
    gens = []
    for p, v in enumerate(a.vertices):
        act = module.actions[a.idempotents[p]]
        for k in range(module.dim):
            col = act.column(k)
            if covered.add(col):
                gens.append((v, col))
    if covered.rank != module.dim:
        raise RuntimeError("projective cover lifting failed")
    return gens


def _cover_data(a: SCAlgebra, module: RepModule, rad):
    gens = _top_lift(a, module, rad)
    verts = [v for v, _ in gens]
    by_vertex = _source_coords(a)
    pos = {v: p for p, v in enumerate(a.vertices)}
    cols = []
    for v, gen in gens:
        for m in by_vertex[pos[v]]:
            cols.append(module.actions[m].apply(gen))
    cover = RatMatrix.from_columns(cols) if cols else RatMatrix([])
    return _projective_sum(a, verts), cover, verts


def _radical_span_dense(a: SCAlgebra, rad, verts: list) -> VecSpan:
    """Span of rad*P inside the flat coordinates of a projective sum."""
    by_vertex = _source_coords(a)
    pos = {v: p for p, v in enumerate(a.vertices)}
    blocks = [by_vertex[pos[v]] for v in verts]
    total = sum(len(block) for block in blocks)
    span = VecSpan(total)
    offset = 0
    for block in blocks:
        for r in rad:
            vec = [Fraction(0)] * total
            hit = False
            for i, m in enumerate(block):
                if r[m]:
                    vec[offset + i] = r[m]
                    hit = True
            if hit:
                span.add(vec)
        offset += len(block)
    return span


def projective_cover(a: SCAlgebra, module: RepModule, rad=None):
    """Projective cover (P, surjection matrix) of a module.

    Columns of the surjection are indexed by the basis of P, rows by the
    basis of the module.  The kernel is checked to lie inside rad*P, which
    is what makes the cover minimal.
    """
    if module.algebra is not a:
        raise ValueError("module is defined over a different algebra")
    if module.dim == 0:
        return zero_module(a), RatMatrix([])
    if rad is None:
        rad = jacobson_radical(a)
    proj, matrix, verts = _cover_data(a, module, rad)
    kernel = matrix.kernel_basis()
    if len(kernel) != proj.dim - module.dim:
        raise RuntimeError("projective cover is not surjective")
    rad_span = _radical_span_dense(a, rad, verts)
    for vec in kernel:
        if not rad_span.contains(vec):
            raise RuntimeError("cover kernel escapes the radical")
    return proj, matrix


def _kernel_submodule(a: SCAlgebra, ambient: RepModule, kernel) -> RepModule:
    """The syzygy as an abstract module on the kernel basis."""
    basis_matrix = RatMatrix.from_columns(kernel)
    actions = []
    for b in range(a.dim):
        cols = []
        for vec in kernel:
            image = ambient.actions[b].apply(vec)
            sol = basis_matrix.solve(image)
            if sol is None:
                raise RuntimeError("syzygy is not closed under the algebra action")
            cols.append(sol)
        actions.append(RatMatrix.from_columns(cols))
    return RepModule(a, len(kernel), tuple(actions))


class _TrackedEchelon:
    """Sparse echelon basis that can report how an inserted vector reduced.

    Pivot rows are stored in insertion order and never re-reduced; a row may
    therefore still contain pivots younger than itself, so reduction always
    eliminates the oldest pivot present, which only introduces younger ones.
    """

    __slots__ = ("pivots", "_clock")

    def __init__(self):
        self.pivots: dict[int, tuple] = {}
        self._clock = 0

    def insert(self, vec: dict, expr: dict):
        """Reduce vec; return the expression if it vanished, else keep it."""
        pivots = self.pivots
        heap = [(pivots[c][0], c) for c in vec if c in pivots]
        heapq.heapify(heap)
        while heap:
            _, c = heapq.heappop(heap)
            val = vec.get(c)
            if not val:
                continue
            _, pvec, pexpr = pivots[c]
            for k, pv in pvec.items():
                present = k in vec
                s = vec.get(k, 0) - val * pv
                if s:
                    vec[k] = s
                    if not present and k in pivots:
                        heapq.heappush(heap, (pivots[k][0], k))
                else:
                    vec.pop(k, None)
            for k, pv in pexpr.items():
                s = expr.get(k, 0) - val * pv
                if s:
                    expr[k] = s
                else:
                    expr.pop(k, None)
        if not vec:
            return expr
        pivot = None
        for c, v in vec.items():
            if v == 1 or v == -1:
                pivot = c
                break
        if pivot is None:
            pivot = next(iter(vec))
        lead = vec[pivot]
        if lead == -1:
            vec = {k: -v for k, v in vec.items()}
            expr = {k: -v for k, v in expr.items()}
        elif lead != 1:
            inv = Fraction(1) / lead
            vec = {k: _plain(v * inv) for k, v in vec.items()}
            expr = {k: _plain(v * inv) for k, v in expr.items()}
        self.pivots[pivot] = (self._clock, vec, expr)
        self._clock += 1
        return None

    def add(self, vec: dict) -> bool:
        """Insert without tracking; True when vec enlarged the span."""
        return self.insert(vec, {}) is None


def _plain(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class _FlatResolver:
    """Sparse syzygy engine over flat coordinates copy*dim + basis_index.

    Valid only when rad(A) is spanned by the non-idempotent basis elements,
    so that minimality and tops reduce to coordinate support checks.
    """

    def __init__(self, a: SCAlgebra):
        self.alg = a
        d = a.dim
        self.dim = d
        pos = {v: p for p, v in enumerate(a.vertices)}
        self.target_pos = [pos[b.target] for b in a.basis]
        self.src_coords = _source_coords(a)
        self.proj_dim = [len(block) for block in self.src_coords]
        self.idem = set(a.idempotents)
        self.non_idem = [m for m in range(d) if m not in self.idem]
        act: list[dict] = [{} for _ in range(d)]
        for (i, j), row in a.mult.items():
            act[i][j] = tuple((k, _plain(c)) for k, c in row.items())
        self.act = act

    def apply(self, b: int, vec: dict) -> dict:
        """Left action of basis element b on a flat sparse vector."""
        table = self.act[b]
        d = self.dim
        out: dict = {}
        for coord, val in vec.items():
            m = coord % d
            row = table.get(m)
            if not row:
                continue
            base = coord - m
            for k, coeff in row:
                key = base + k
                s = out.get(key, 0) + coeff * val
                if s:
                    out[key] = s
                else:
                    del out[key]
        return out

    def in_radical(self, vec: dict) -> bool:
        d = self.dim
        idem = self.idem
        return all(coord % d not in idem for coord in vec)

    def kernel_of_cover(self, gens: list[tuple[int, dict]]) -> list[dict]:
        """Kernel basis of the cover of the module generated by gens.

        gens are (vertex position, flat vector) pairs; the cover sends the
        local basis element m of copy i to b_m * gens[i].  Images split by
        target vertex, so each vertex keeps its own echelon.
        """
        echelons = [_TrackedEchelon() for _ in self.proj_dim]
        target_pos = self.target_pos
        kernel: list[dict] = []
        d = self.dim
        for copy, (v, gen) in enumerate(gens):
            base = copy * d
            for m in self.src_coords[v]:
                image = self.apply(m, gen)
                relation = echelons[target_pos[m]].insert(image, {base + m: 1})
                if relation is not None:
                    kernel.append(relation)
        return kernel

    def top_generators(self, kernel: list[dict]) -> list[tuple[int, dict]]:
        """Vertex-tagged minimal generators of the span of kernel vectors."""
        d = self.dim
        target_pos = self.target_pos
        spans = [_TrackedEchelon() for _ in self.proj_dim]
        for vec in kernel:
            for b in self.non_idem:
                image = self.apply(b, vec)
                if image:
                    spans[target_pos[b]].add(image)
        gens: list[tuple[int, dict]] = []
        for vec in kernel:
            parts: dict[int, dict] = {}
            for coord, val in vec.items():
                parts.setdefault(target_pos[coord % d], {})[coord] = val
            for v in sorted(parts):
                part = parts[v]
                if spans[v].add(dict(part)):
                    gens.append((v, part))
        return gens


def _radical_is_arrow_span(a: SCAlgebra, rad) -> bool:
    if len(rad) != a.dim - len(a.idempotents):
        return False
    idem = set(a.idempotents)
    return all(not vec[m] for vec in rad for m in idem)


def minimal_resolution(
    a: SCAlgebra, module: RepModule, steps: int = 40, dim_cap: int = 100000
) -> ResolutionTrace:
    """Betti numbers of a minimal projective resolution of the module.

    Stops after `steps` covers, when a syzygy dimension would exceed
    `dim_cap`, or when a syzygy vanishes; the trace records which.
    """
    if module.algebra is not a:
        raise ValueError("module is defined over a different algebra")
    if steps < 1:
        raise ValueError("steps must be positive")
    if dim_cap < 1:
        raise ValueError("dimension cap must be positive")
    if module.dim == 0:
        return ResolutionTrace((0,), "resolution-terminated")
    rad = jacobson_radical(a)
    if _radical_is_arrow_span(a, rad):
        return _sparse_resolution(a, module, steps, dim_cap, rad)
    return _dense_resolution(a, module, steps, dim_cap, rad)


def _flatten_kernel(a: SCAlgebra, verts: list, kernel) -> list[dict]:
    """Dense kernel vectors of a cover, rewritten in flat sparse coordinates."""
    by_vertex = _source_coords(a)
    pos = {v: p for p, v in enumerate(a.vertices)}
    coord_map: list[int] = []
    for copy, v in enumerate(verts):
        base = copy * a.dim
        coord_map.extend(base + m for m in by_vertex[pos[v]])
    out = []
    for vec in kernel:
        out.append({coord_map[i]: _plain(c) for i, c in enumerate(vec) if c})
    return out


def _sparse_resolution(a, module, steps, dim_cap, rad) -> ResolutionTrace:
    engine = _FlatResolver(a)
    first, cover, verts = _cover_data(a, module, rad)
    betti = [first.dim]
    syzygy = first.dim - module.dim
    if syzygy == 0:
        return ResolutionTrace((*betti, 0), "resolution-terminated")
    if len(betti) >= steps:
        return ResolutionTrace(tuple(betti), "steps-exhausted")
    if syzygy > dim_cap:
        return ResolutionTrace(tuple(betti), "dimension-cap")
    dense_kernel = cover.kernel_basis()
    if len(dense_kernel) != syzygy:
        raise RuntimeError("syzygy dimension mismatch")
    kernel = _flatten_kernel(a, verts, dense_kernel)
    for vec in kernel:
        if not engine.in_radical(vec):
            raise RuntimeError("resolution step is not minimal")
    covered = syzygy
    while True:
        gens = engine.top_generators(kernel)
        dim = sum(engine.proj_dim[v] for v, _ in gens)
        betti.append(dim)
        syzygy = dim - covered
        if syzygy == 0:
            return ResolutionTrace((*betti, 0), "resolution-terminated")
        if len(betti) >= steps:
            return ResolutionTrace(tuple(betti), "steps-exhausted")
        if syzygy > dim_cap:
            return ResolutionTrace(tuple(betti), "dimension-cap")
        kernel = engine.kernel_of_cover(gens)
        if len(kernel) != syzygy:
            raise RuntimeError("syzygy dimension mismatch")
        for vec in kernel:
            if not engine.in_radical(vec):
                raise RuntimeError("resolution step is not minimal")
        covered = syzygy


def _dense_resolution(a, module, steps, dim_cap, rad) -> ResolutionTrace:
    betti: list[int] = []
    current = module
    covered = module.dim
    while True:
        ambient, cover, verts = _cover_data(a, current, rad)
        betti.append(ambient.dim)
        kernel = cover.kernel_basis()
        if len(kernel) != ambient.dim - covered:
            raise RuntimeError("syzygy dimension mismatch")
        rad_span = _radical_span_dense(a, rad, verts)
        for vec in kernel:
            if not rad_span.contains(vec):
                raise RuntimeError("resolution step is not minimal")
        syzygy = len(kernel)
        if syzygy == 0:
            return ResolutionTrace((*betti, 0), "resolution-terminated")
        if len(betti) >= steps:
            return ResolutionTrace(tuple(betti), "steps-exhausted")
        if syzygy > dim_cap:
            return ResolutionTrace(tuple(betti), "dimension-cap")
        current = _kernel_submodule(a, ambient, kernel)
        covered = syzygy


def complexity_estimate(
    trace: ResolutionTrace, window: Fraction = Fraction(1, 2)
) -> ComplexityEstimate:
    """Growth class of a Betti trace: degree k means dim P_n = O(n^(k-1)).

    A terminated resolution has degree 0 and a bounded tail degree 1;
    otherwise the trailing window is fitted on log-log axes for a polynomial
    degree and on semilog axes for exponential growth.  A capped trace is
    screened for exponential growth first, since truncation is itself
    evidence the dimensions were exploding.
    """
    if trace.truncated_by == "resolution-terminated":
        return ComplexityEstimate.finite(0)
    betti = trace.betti
    if len(betti) < MIN_TRACE_LENGTH:
        raise ValueError(
            f"trace too short: need {MIN_TRACE_LENGTH} entries or termination"
        )
    w = as_fraction(window)
    if not 0 < w <= 1:
        raise ValueError("window must lie in (0, 1]")
    count = max(2, int(len(betti) * w))
    start = max(1, len(betti) - count)
    tail = betti[start:]
    if max(tail) <= max(betti[:start]):
        return ComplexityEstimate.finite(1)
    if min(tail) <= 0:
        return ComplexityEstimate.inconclusive("zero dimensions inside a growing tail")
    positions = list(range(start, len(betti)))
    logs = [math.log(d) for d in tail]
    exp_slope, _, _ = fit_line([float(n) for n in positions], logs)
    poly_slope, _, poly_residual = fit_line([math.log(n) for n in positions], logs)
    exploding = exp_slope > EXPONENTIAL_SLOPE_THRESHOLD
    if trace.truncated_by == "dimension-cap" and exploding:
        return ComplexityEstimate.infinite()
    if poly_residual < LOGLOG_RESIDUAL_THRESHOLD:
        return ComplexityEstimate.finite(round(poly_slope) + 1)
    if exploding:
        return ComplexityEstimate.infinite()
    return ComplexityEstimate.inconclusive(
        "growth fits neither a polynomial nor an exponential shape"
    )


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def resolve_simple_modules(
    a: SCAlgebra, steps: int = 40, dim_cap: int = 100000
) -> list[ResolutionTrace]:
    """Resolution trace of every simple module, in vertex order.

    Distinct simples resolve independently, so QUIVERLAB_THREADS > 1 runs
    them in a thread pool; the returned order stays deterministic.
    """
    simples = simple_modules(a)

    def resolve(module: RepModule) -> ResolutionTrace:
        return minimal_resolution(a, module, steps, dim_cap)

    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(resolve, simples))
    return [resolve(module) for module in simples]


def combine_estimates(estimates) -> ComplexityEstimate:
    """Worst case of several estimates: infinite beats inconclusive beats finite."""
    estimates = list(estimates)
    for verdict in estimates:
        if verdict.kind == "infinite":
            return verdict
    for verdict in estimates:
        if verdict.kind == "inconclusive":
            return verdict
    degree = max((verdict.degree for verdict in estimates), default=0)
    return ComplexityEstimate.finite(degree)


def global_complexity_estimate(
    a: SCAlgebra, steps: int = 40, dim_cap: int = 100000
) -> ComplexityEstimate:
    """Worst complexity over the simple modules.

    Finite verdicts combine by taking the largest degree; an inconclusive
    simple makes the whole answer inconclusive and an infinite one wins
    outright.
    """
    traces = resolve_simple_modules(a, steps, dim_cap)
    return combine_estimates(complexity_estimate(trace) for trace in traces)
