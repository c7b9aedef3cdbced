"""Characteristic/minimal polynomials and cyclotomicity profiles.

A matrix is called cyclotomic here when its characteristic polynomial is a
product of cyclotomic polynomials; all eigenvalues are then roots of unity
and powers of the matrix are unipotent up to a bounded nilpotency degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intpoly import IntPolynomial, cyclotomic_factorization
from .ratmat import RatMatrix, as_fraction


def _hessenberg(m: RatMatrix) -> list[list[Fraction]]:
    """Similarity-reduce to upper Hessenberg form with exact row/column ops."""
    n = m.rows
    h = [list(row) for row in m.entries()]
    for col in range(n - 2):
        pivot = next((r for r in range(col + 1, n) if h[r][col]), None)
        if pivot is None:
            continue
        if pivot != col + 1:
            h[col + 1], h[pivot] = h[pivot], h[col + 1]
            for r in range(n):
                h[r][col + 1], h[r][pivot] = h[r][pivot], h[r][col + 1]
        inv = 1 / h[col + 1][col]
        for r in range(col + 2, n):
            f = h[r][col] * inv
            if f:
                row_r, row_p = h[r], h[col + 1]
                for c in range(n):
                    if row_p[c]:
                        row_r[c] -= f * row_p[c]
                # keep the similarity: undo on the right
                for rr in range(n):
                    if h[rr][r]:
                        h[rr][col + 1] += f * h[rr][r]
    return h


def char_poly(m: RatMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M).

    Computed from the Hessenberg form via the leading-minor recurrence
    p_k(x) = (x - h_kk) p_{k-1}(x) - sum_j h_{jk} (prod subdiagonals) p_{j-1}(x).
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.rows
    if n == 0:
        return IntPolynomial.one()
    h = _hessenberg(m)
    x = IntPolynomial.x()
    polys = [IntPolynomial.one()]
    for k in range(1, n + 1):
        p = (x - IntPolynomial((h[k - 1][k - 1],))) * polys[k - 1]
        prod = Fraction(1)
        for back in range(1, k):
            prod *= h[k - back][k - back - 1]
            if not prod:
                break
            coeff = h[k - 1 - back][k - 1]
            if coeff:
                p = p - (coeff * prod) * polys[k - 1 - back]
        polys.append(p)
    return polys[n]


def min_poly(m: RatMatrix) -> IntPolynomial:
    """Minimal polynomial via Krylov chains started at each basis vector."""
    if not m.is_square:
        raise ValueError("minimal polynomial requires a square matrix")
    n = m.rows
    if n == 0:
        return IntPolynomial.one()
    result = IntPolynomial.one()
    for start in range(n):
        # echelon over the Krylov chain; aux tracks the combination as a polynomial
        pivots: dict[int, tuple[list[Fraction], IntPolynomial]] = {}
        vec = [Fraction(0)] * n
        vec[start] = Fraction(1)
        aux = IntPolynomial.one()
        for power in range(n + 1):
            work = list(vec)
            combo = aux
            for j in sorted(pivots):
                if work[j]:
                    f = work[j]
                    pvec, paux = pivots[j]
                    for k in range(n):
                        if pvec[k]:
                            work[k] -= f * pvec[k]
                    combo = combo - f * paux
            lead = next((j for j, v in enumerate(work) if v), None)
            if lead is None:
                result = result.lcm(combo.monic())
                break
            inv = 1 / work[lead]
            pivots[lead] = ([v * inv for v in work], inv * combo)
            vec = _mat_apply(m, vec)
            aux = aux * IntPolynomial.x()
        if result.degree == n:
            break
    return result


def _mat_apply(m: RatMatrix, vec: list[Fraction]) -> list[Fraction]:
    rows = m.entries()
    return [sum((c * v for c, v in zip(row, vec) if c), Fraction(0)) for row in rows]


def companion_matrix(p: IntPolynomial) -> RatMatrix:
    """Companion matrix of a monic polynomial (characteristic polynomial p)."""
    if p.is_zero or not p.is_monic or p.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return RatMatrix(rows)


@dataclass(frozen=True)
class CycloProfile:
    """Cyclotomicity report for a square invertible matrix.

    orders lists (d, multiplicity in the minimal polynomial); witness is the
    minimal pair (n, l) with (M^(2n) - I)^l = 0, checked by exact arithmetic.
    """

    is_cyclotomic: bool
    orders: tuple[tuple[int, int], ...]
    periodic: bool
    period: int | None
    witness: tuple[int, int] | None


def cyclotomic_profile(m: RatMatrix) -> CycloProfile:
    if not m.is_square:
        raise ValueError("cyclotomic profile requires a square matrix")
    cp = char_poly(m)
    if not cp.constant:
        raise ValueError("cyclotomic profile requires an invertible matrix")
    not_cyclotomic = CycloProfile(False, (), False, None, None)
    if not cp.is_integral or cyclotomic_factorization(cp) is None:
        return not_cyclotomic
    orders = cyclotomic_factorization(min_poly(m))
    assert orders is not None
    periodic = all(mult == 1 for _, mult in orders)
    big_l = math.lcm(*(d for d, _ in orders))
    n_wit = big_l // math.gcd(big_l, 2)
    l_wit = max(mult for _, mult in orders)
    power = m ** (2 * n_wit)
    shifted = power - RatMatrix.identity(m.rows)
    if not (shifted ** l_wit).is_zero():
        raise RuntimeError("witness verification failed; inconsistent exact arithmetic")
    period = big_l if periodic else None
    if periodic and not (m ** big_l).is_identity():
        raise RuntimeError("period verification failed; inconsistent exact arithmetic")
    return CycloProfile(True, orders, periodic, period, (n_wit, l_wit))


def _cauchy_bound(p: IntPolynomial) -> Fraction:
    lead = p.leading
    top = max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + top


def _largest_real_root(p: IntPolynomial, tol: float) -> float:
    """Largest nonnegative real root found by sign bisection, else 0."""
    bound = _cauchy_bound(p)
    # grid scan for a sign change; even-multiplicity roots are left to the
    # power-iteration fallback
    lo = None
    grid = 128
    prev = bound
    for k in range(grid - 1, -1, -1):
        x = bound * k / grid
        if p.evaluate(x) <= 0:
            lo, hi = x, prev
            break
        prev = x
    if lo is None:
        return 0.0
    while float(hi - lo) > tol / 4:
        mid = (lo + hi) / 2
        if p.evaluate(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _power_radius(p: IntPolynomial) -> float:
    """Spectral radius of the companion matrix by normalized squaring."""
    n = p.degree
    comp = [[float(x) for x in row] for row in companion_matrix(p).entries()]
    log_scale = 0.0
    for _ in range(60):
        norm = max(abs(x) for row in comp for x in row)
        if norm == 0.0:
            return 0.0
        inv = 1.0 / norm
        comp = [[x * inv for x in row] for row in comp]
        log_scale = 2.0 * (log_scale + math.log(norm))
        comp = [
            [sum(comp[i][k] * comp[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    norm = max(abs(x) for row in comp for x in row)
    if norm == 0.0:
        return 0.0
    exponent = (log_scale + math.log(norm)) / (2.0 ** 60)
    return math.exp(exponent)


def spectral_radius(m: RatMatrix, tol: float = 1e-6) -> float:
    """Largest eigenvalue modulus, within tol.

    Exactly 1.0 whenever the characteristic polynomial is a product of
    cyclotomic polynomials; otherwise bisection on the real roots of the
    characteristic polynomial with a companion-matrix power fallback for
    dominant complex pairs.
    """
    if not m.is_square:
        raise ValueError("spectral radius requires a square matrix")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    p = char_poly(m)
    # strip zero eigenvalues; they never carry the radius unless all are zero
    coeffs = list(p.coeffs)
    shift = 0
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        shift += 1
    if not coeffs or len(coeffs) == 1:
        return 0.0
    p = IntPolynomial(coeffs)
    if p.is_integral and cyclotomic_factorization(p) is not None:
        return 1.0
    best = max(_largest_real_root(p, tol), _largest_real_root(p.reflect(), tol))
    return max(best, _power_radius(p))
