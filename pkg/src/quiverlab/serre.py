"""Serre-cyclotomicity classifiers and entropy computations.

Three independent routes to a verdict: the weight-based delta rule for
canonical algebras, the quiver-type rule for graded path algebras, and an
exact necessary condition on the Coxeter matrix.  Entropy helpers turn a
verdict into its predicted entropy line and measure the growth of dimension
vectors under Coxeter iteration directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .builders import CanonicalSpec
from .cyclo import cyclotomic_profile, spectral_radius
from .fitting import fit_line
from .quiver import (
    Quiver,
    cartan_path_algebra,
    classify_quiver,
    coxeter_matrix,
    has_oriented_cycle,
)
from .ratmat import RatMatrix, as_fraction, l1_norm, vector

VERDICT_KINDS = (
    "serre-cyclotomic",
    "fractionally-calabi-yau",
    "not-serre-cyclotomic",
    "unknown",
)


@dataclass(frozen=True)
class SerreVerdict:
    """Cyclotomicity verdict with the exponents (l, m, n) when known.

    A fractionally Calabi-Yau verdict is the l = 1 case and stores that l;
    the exponents may be absent when a rule certifies existence without
    computing them.
    """

    kind: str
    l: int | None = None
    m: int | None = None
    n: int | None = None
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in VERDICT_KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if self.l is not None and self.l < 1:
            raise ValueError("the nilpotency exponent l is at least 1")
        if self.n is not None and self.n == 0:
            raise ValueError("the power exponent n is nonzero")
        if self.kind == "fractionally-calabi-yau" and self.l not in (None, 1):
            raise ValueError("fractionally Calabi-Yau means l = 1")

    @staticmethod
    def serre_cyclotomic(l: int, m: int | None, n: int | None, reason: str | None = None) -> "SerreVerdict":
        return SerreVerdict("serre-cyclotomic", l=l, m=m, n=n, reason=reason)

    @staticmethod
    def fractionally_calabi_yau(m: int | None, n: int | None, reason: str | None = None) -> "SerreVerdict":
        return SerreVerdict("fractionally-calabi-yau", l=1, m=m, n=n, reason=reason)

    @staticmethod
    def not_serre_cyclotomic(reason: str) -> "SerreVerdict":
        return SerreVerdict("not-serre-cyclotomic", reason=reason)

    @staticmethod
    def unknown(reason: str) -> "SerreVerdict":
        return SerreVerdict("unknown", reason=reason)

    @property
    def has_exponents(self) -> bool:
        return self.m is not None and self.n is not None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "l": self.l,
            "m": self.m,
            "n": self.n,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class EntropyLine:
    """Slope of the entropy line t -> (m/n)t plus the polynomial bound l-1."""

    slope: Fraction
    poly_entropy_bound: int


@dataclass(frozen=True)
class CoxeterReport:
    """Outcome of the exact necessary condition on a Coxeter matrix.

    passed is True when the minimal witness fits the bounds, False when the
    matrix is not cyclotomic, and None when the witness lies outside the
    bounds so nothing was verified.
    """

    cyclotomic: bool
    passed: bool | None
    n: int | None
    l: int | None
    note: str

    def to_json_dict(self) -> dict:
        return {
            "cyclotomic": self.cyclotomic,
            "passed": self.passed,
            "n": self.n,
            "l": self.l,
            "note": self.note,
        }


def canonical_verdict(spec: CanonicalSpec) -> tuple[int, int, SerreVerdict]:
    """Delta rule for a canonical algebra: (delta, p, verdict).

    p is the lcm of the weights and delta = (t-2)p - sum(p/p_i); negative
    delta gives (2, p, p), zero gives the fractionally Calabi-Yau (p, p)
    pair, positive gives (2, -p, -p).
    """
    weights = spec.weights
    p = math.lcm(*weights)
    t = len(weights)
    delta = (t - 2) * p - sum(p // w for w in weights)
    label = ",".join(str(w) for w in weights)
    if delta < 0:
        verdict = SerreVerdict.serre_cyclotomic(
            2, p, p, reason=f"weights ({label}): delta = {delta} < 0"
        )
    elif delta == 0:
        verdict = SerreVerdict.fractionally_calabi_yau(
            p, p, reason=f"weights ({label}): delta = 0"
        )
    else:
        verdict = SerreVerdict.serre_cyclotomic(
            2, -p, -p, reason=f"weights ({label}): delta = {delta} > 0"
        )
    return delta, p, verdict


def _affine_tree_weights(vertex_count: int, radical: tuple[int, ...]) -> tuple[int, ...] | None:
    """Canonical weights of an affine tree, recognized from its radical vector."""
    top = max(radical)
    if top == 2 and vertex_count >= 5:
        return (2, 2, vertex_count - 3)
    if top == 3 and vertex_count == 7:
        return (2, 3, 3)
    if top == 4 and vertex_count == 8:
        return (2, 3, 4)
    if top == 6 and vertex_count == 9:
        return (2, 3, 5)
    return None


def _cycle_walk(q: Quiver) -> list[tuple]:
    """Closed walk around a quiver whose underlying graph is a single cycle.

    Returns (arrow, direction) steps with direction +1 when the arrow is
    traversed from source to target.
    """
    incident: dict = {v: [] for v in q.vertices}
    for arrow in q.arrows:
        incident[arrow.source].append((arrow, 1))
        incident[arrow.target].append((arrow, -1))
    walk = []
    used: set[str] = set()
    current = q.vertices[0]
    while True:
        step = next(
            ((a, d) for a, d in incident[current] if a.id not in used), None
        )
        if step is None:
            break
        arrow, direction = step
        used.add(arrow.id)
        walk.append((arrow, direction))
        current = arrow.target if direction == 1 else arrow.source
    if len(walk) != len(q.arrows) or current != q.vertices[0]:
        raise RuntimeError("underlying graph is not a single cycle")
    return walk


def graded_path_verdict(q: Quiver) -> SerreVerdict:
    """Verdict for a graded path algebra read off the quiver type.

    Finite type is fractionally Calabi-Yau outright, affine trees reduce to
    canonical weights, affine cycles need their grading to wind to zero, and
    indefinite type is excluded by spectral growth.
    """
    quiver_type = classify_quiver(q)
    if quiver_type.kind == "finite":
        profile = cyclotomic_profile(coxeter_matrix(cartan_path_algebra(q)))
        return SerreVerdict.fractionally_calabi_yau(
            None,
            None,
            reason=(
                "finite type is fractionally Calabi-Yau; exponents not computed "
                f"(Coxeter matrix is periodic with period {profile.period})"
            ),
        )
    if quiver_type.kind == "indefinite":
        return SerreVerdict.not_serre_cyclotomic(
            "indefinite type: log rho(Phi) > 0 forces positive entropy"
        )
    edges = len(q.arrows)
    if edges == len(q.vertices) - 1:
        weights = _affine_tree_weights(len(q.vertices), quiver_type.radical_vector)
        if weights is None:
            return SerreVerdict.serre_cyclotomic(
                2,
                None,
                None,
                reason="affine tree with unrecognized weights; exponents not computed",
            )
        p = math.lcm(*weights)
        label = ",".join(str(w) for w in weights)
        return SerreVerdict.serre_cyclotomic(
            2, p, p, reason=f"affine tree with canonical weights ({label})"
        )
    if has_oriented_cycle(q):
        return SerreVerdict.unknown(
            "oriented cycle: the path algebra is infinite-dimensional"
        )
    walk = _cycle_walk(q)
    winding = sum(direction * arrow.degree for arrow, direction in walk)
    forward = sum(1 for _, direction in walk if direction == 1)
    backward = len(walk) - forward
    if winding != 0:
        return SerreVerdict.unknown(
            f"cycle grading winds to {winding}, not 0; no rule applies"
        )
    p = math.lcm(forward, backward)
    return SerreVerdict.serre_cyclotomic(
        2,
        p,
        p,
        reason=(
            f"cycle with {forward} forward and {backward} backward arrows; "
            "grading winds to 0"
        ),
    )


NECESSITY_NOTE = "necessary condition only; passing does not certify cyclotomicity"


def coxeter_necessary_check(
    phi: RatMatrix, l_max: int = 6, n_max: int = 60
) -> CoxeterReport:
    """Exact check that some (phi^(2n) - 1)^l vanishes within the bounds.

    The minimal witness pair comes from the cyclotomic factor structure and
    is verified by exact matrix arithmetic before being reported.
    """
    if l_max < 1 or n_max < 1:
        raise ValueError("witness bounds must be positive")
    profile = cyclotomic_profile(phi)
    if not profile.is_cyclotomic:
        return CoxeterReport(
            cyclotomic=False,
            passed=False,
            n=None,
            l=None,
            note=(
                "characteristic polynomial has a non-cyclotomic factor; "
                "fails the necessary condition"
            ),
        )
    n_wit, l_wit = profile.witness
    if n_wit > n_max or l_wit > l_max:
        return CoxeterReport(
            cyclotomic=True,
            passed=None,
            n=n_wit,
            l=l_wit,
            note=(
                f"minimal witness (n={n_wit}, l={l_wit}) exceeds the bounds "
                f"(n_max={n_max}, l_max={l_max}); nothing verified; " + NECESSITY_NOTE
            ),
        )
    return CoxeterReport(
        cyclotomic=True,
        passed=True,
        n=n_wit,
        l=l_wit,
        note=f"verified (phi^(2*{n_wit}) - 1)^{l_wit} = 0 exactly; " + NECESSITY_NOTE,
    )


def verify_k_shadow(psi: RatMatrix, l: int, m: int, n: int) -> bool:
    """Exact test of ((-1)^m psi^n - 1)^l = 0 for an invertible matrix."""
    if not psi.is_square:
        raise ValueError("matrix must be square")
    if psi.det() == 0:
        raise ValueError("matrix is singular")
    if l < 1:
        raise ValueError("the nilpotency exponent l is at least 1")
    if n == 0:
        raise ValueError("the power exponent n is nonzero")
    power = psi ** n
    if m % 2:
        power = -power
    return ((power - RatMatrix.identity(power.rows)) ** l).is_zero()


def serre_entropy(verdict: SerreVerdict, t) -> Fraction:
    """Entropy value (m/n) * t predicted by a verdict with exponents."""
    if not verdict.has_exponents:
        raise ValueError("verdict carries no exponents (m, n)")
    return Fraction(verdict.m, verdict.n) * as_fraction(t)


def entropy_line(verdict: SerreVerdict) -> EntropyLine:
    """Entropy slope m/n and the polynomial-entropy bound l - 1."""
    if not verdict.has_exponents:
        raise ValueError("verdict carries no exponents (m, n)")
    if verdict.l is None:
        raise ValueError("verdict carries no nilpotency exponent l")
    return EntropyLine(Fraction(verdict.m, verdict.n), verdict.l - 1)


def _log_fraction(value: Fraction) -> float:
    # math.log on the int parts keeps huge iterates out of float range
    return math.log(value.numerator) - math.log(value.denominator)


def hereditary_entropy(
    q: Quiver, iterations: int = 60, tol: float = 1e-4
) -> tuple[float, list[float]]:
    """Entropy of an acyclic connected quiver plus its empirical trace.

    The closed form is log of the Coxeter spectral radius.  The trace entry
    at k is (1/k) log of the l1 norm of phi^k applied to the dimension
    vector of the injective cogenerator (the column sums of the Cartan
    matrix); the iteration is exact and only the logarithms are floats.
    """
    if iterations < 1:
        raise ValueError("iterations must be positive")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if not q.is_connected:
        raise ValueError("entropy needs a connected quiver")
    cartan = cartan_path_algebra(q)
    phi = coxeter_matrix(cartan)
    h0 = math.log(spectral_radius(phi, tol))
    vec = vector(
        sum(cartan.column(j)) for j in range(cartan.cols)
    )
    trace = []
    for k in range(1, iterations + 1):
        vec = phi.apply(vec)
        trace.append(_log_fraction(l1_norm(vec)) / k)
    return h0, trace


@dataclass(frozen=True)
class GrowthEstimate:
    """Growth class of an iterated norm sequence."""

    kind: str
    degree: int | None = None

    @staticmethod
    def polynomial(degree: int) -> "GrowthEstimate":
        return GrowthEstimate("polynomial", degree=degree)

    @staticmethod
    def exponential() -> "GrowthEstimate":
        return GrowthEstimate("exponential")

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.degree is not None:
            out["degree"] = self.degree
        return out


GROWTH_RESIDUAL_THRESHOLD = 0.15
GROWTH_SLOPE_THRESHOLD = 0.05
MIN_GROWTH_STEPS = 12


def growth_degree(phi: RatMatrix, v, steps: int = 60) -> GrowthEstimate:
    """Polynomial degree or exponential flag for the growth of |phi^k v|.

    Exact iterates are fitted over the trailing half of the run: a bounded
    tail is degree 0, a clean log-log line gives its rounded slope, a
    semilog slope flags exponential growth, and a toss-up goes to the
    better-fitting shape.
    """
    if steps < MIN_GROWTH_STEPS:
        raise ValueError(f"need at least {MIN_GROWTH_STEPS} steps")
    vec = vector(v)
    norms = []
    for _ in range(steps):
        vec = phi.apply(vec)
        norms.append(l1_norm(vec))
    start = steps // 2
    tail = norms[start - 1 :]
    head = norms[: start - 1]
    if max(tail) <= max(head):
        return GrowthEstimate.polynomial(0)
    if not all(tail):
        return GrowthEstimate.polynomial(0)
    ks = list(range(start, steps + 1))
    logs = [_log_fraction(norm) for norm in tail]
    poly_slope, _, poly_residual = fit_line([math.log(k) for k in ks], logs)
    exp_slope, _, exp_residual = fit_line([float(k) for k in ks], logs)
    degree = max(0, round(poly_slope))
    if poly_residual < GROWTH_RESIDUAL_THRESHOLD:
        return GrowthEstimate.polynomial(degree)
    if exp_slope > GROWTH_SLOPE_THRESHOLD:
        return GrowthEstimate.exponential()
    if poly_residual <= exp_residual:
        return GrowthEstimate.polynomial(degree)
    return GrowthEstimate.exponential()
