"""Littlewood-Schur functions by the combinatorial and determinantal routes.

The combinatorial route sums Littlewood-Richardson multiples of products of
Schur polynomials in the two alphabets.  The determinantal route evaluates a
block determinant with a Cauchy block of (x - y)^-1 entries and monomial
blocks whose shapes depend on the index of the partition; its sign depends
on the partition and both alphabet lengths jointly.
"""

from __future__ import annotations

import itertools

from . import report
from .partitions import Partition, partitions_in_box, rect
from .polyring import (
    MultiPoly,
    ONE,
    PolyMatrix,
    VarSeq,
    ZERO,
    delta_pair,
    divexact,
    det,
    e_prod,
    vandermonde,
)
from .schur import schur_ssyt

_lr_cache: dict = {}
_ls_det_cache: dict = {}
_ls_comb_cache: dict = {}


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: skew tableaux of shape lam/mu, content nu.

    Fillings must weakly increase along rows, strictly increase down columns,
    and read (right to left, top to bottom) to a lattice word.  Zero unless
    mu fits inside lam and sizes match.
    """
    if not lam.contains(mu) or mu.size + nu.size != lam.size:
        return 0
    key = (lam.parts, mu.parts, nu.parts)
    got = _lr_cache.get(key)
    if got is not None:
        return got
    outer = lam.parts
    inner = mu.padded(lam.length)
    nmax = nu.length
    # cells in reverse reading order: rows top to bottom, right to left
    cells = []
    for r in range(lam.length):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))
    filling = {}
    remaining = list(nu.parts)
    placed = [0] * nmax

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        total = 0
        for v in range(1, nmax + 1):
            if remaining[v - 1] == 0:
                continue
            # ballot condition on the reverse reading word
            if v > 1 and placed[v - 2] <= placed[v - 1]:
                continue
            # rows weakly increase: the right neighbour was filled first
            if c + 1 < outer[r] and v > filling[(r, c + 1)]:
                continue
            # columns strictly increase: cell above exists iff c >= inner[r-1]
            if r > 0 and c >= inner[r - 1] and v <= filling[(r - 1, c)]:
                continue
            filling[(r, c)] = v
            remaining[v - 1] -= 1
            placed[v - 1] += 1
            total += place(pos + 1)
            placed[v - 1] -= 1
            remaining[v - 1] += 1
            del filling[(r, c)]
        return total

    count = 1 if not cells else place(0)
    _lr_cache[key] = count
    return count


def ls_combinatorial(lam, X: VarSeq, Y: VarSeq):
    """Sum of c^lam_(mu,nu) s_mu(X) s_nu'(Y) over partition pairs inside lam.

    The infinite sentinel (lam is None) gives the zero polynomial.  Negation
    marks on either alphabet are honoured by the Schur factors.
    """
    if lam is None:
        return ZERO
    key = (lam.parts, X, Y)
    got = _ls_comb_cache.get(key)
    if got is not None:
        return got
    nx, ny = len(X), len(Y)
    total = ZERO
    for mu in partitions_in_box(lam.part(1), min(lam.length, nx) if nx else 0):
        if not lam.contains(mu):
            continue
        s_mu = schur_ssyt(mu, X)
        if s_mu.is_zero:
            continue
        rest = lam.size - mu.size
        for nu in partitions_in_box(lam.part(1), lam.length):
            if nu.size != rest or nu.part(1) > ny:
                continue
            c = lr_coefficient(lam, mu, nu)
            if not c:
                continue
            s_nu = schur_ssyt(nu.conjugate(), Y)
            if s_nu.is_zero:
                continue
            total = total + c * (s_mu * s_nu)
    _ls_comb_cache[key] = total
    return total


def ls_sign(lam: Partition, m: int, n: int) -> int:
    """Sign in front of the block determinant; depends on (lam, m, n) jointly."""
    k = lam.index(m, n)
    e = lam.take(max(n - k, 0)).size + m * k + k * (k - 1) // 2
    return -1 if e % 2 else 1


def ls_determinantal(lam, X: VarSeq, Y: VarSeq):
    """LS of the negated first alphabet, via the block determinant.

    The square matrix pairs a Cauchy block of (x - y)^-1 entries with
    monomial blocks whose widths are tied to the index k; the result is zero
    when k is negative.  The determinant is expanded along the y-monomial
    rows, and every denominator is cancelled analytically against the
    prefactor before any division happens: each surviving minor is divided
    by the x-Vandermonde (exactly, being antisymmetric in the x rows), and a
    single certified division by the y-Vandermonde finishes the job.
    """
    if lam is None:
        return ZERO
    names = X.names + Y.names
    if len(set(names)) != len(names):
        raise ValueError("alphabets share identifiers")
    if X.neg or Y.neg or X.inv or Y.inv:
        raise ValueError("determinantal route expects unmarked alphabets")
    key = (lam.parts, X, Y)
    got = _ls_det_cache.get(key)
    if got is not None:
        return got
    n, m = len(X), len(Y)
    k = lam.index(m, n)
    if k < 0:
        _ls_det_cache[key] = ZERO
        return ZERO
    lam_c = lam.conjugate()
    x_exp = [lam.part(j) + n - m - j for j in range(1, n - k + 1)]
    y_exp = [lam_c.part(i) + m - n - i for i in range(1, m - k + 1)]
    cx = max(0, -min(x_exp, default=0))
    cy = max(0, -min(y_exp, default=0))
    vand_x = vandermonde(X)
    y_rows = tuple(range(n + 1, n + m - k + 1))
    total = ZERO
    for J in itertools.combinations(range(m), m - k):
        kept = [j for j in range(m) if j not in J]
        alt_rows = [[MultiPoly.var(Y.names[j], e + cy) for j in J] for e in y_exp]
        alt = det(PolyMatrix(alt_rows)) if y_exp else ONE
        if isinstance(alt, MultiPoly) and alt.is_zero:
            continue
        cleared = []
        for x in X.names:
            base = MultiPoly.var(x, cx)
            kept_factors = [MultiPoly.var(x) - MultiPoly.var(Y.names[j]) for j in kept]
            full = base
            for f in kept_factors:
                full = full * f
            row = []
            for pos, j in enumerate(kept):
                entry = base
                for q, f in enumerate(kept_factors):
                    if q != pos:
                        entry = entry * f
                row.append(entry)
            for e in x_exp:
                row.append(full * MultiPoly.var(x, e + cx))
            cleared.append(row)
        p = det(PolyMatrix(cleared)) if cleared else ONE
        if isinstance(p, MultiPoly) and p.is_zero:
            continue
        q = divexact(p, vand_x)
        extra = ONE
        for x in X.names:
            for j in J:
                extra = extra * (MultiPoly.var(x) - MultiPoly.var(Y.names[j]))
        for j in kept:
            if cy:
                extra = extra * MultiPoly.var(Y.names[j], cy)
        sign = -1 if (sum(y_rows) + sum(j + 1 for j in J)) % 2 else 1
        total = total + sign * alt * q * extra
    if (n * m) % 2:
        total = -total
    denom = vandermonde(Y)
    for x in X.names:
        if cx:
            denom = denom * MultiPoly.var(x, cx)
    for y in Y.names:
        if cy:
            denom = denom * MultiPoly.var(y, cy)
    result = divexact(total, denom) * ls_sign(lam, m, n)
    _ls_det_cache[key] = result
    return result


def ls_determinantal_plain(lam, X: VarSeq, Y: VarSeq):
    """LS with the first alphabet un-negated, from the determinantal route."""
    result = ls_determinantal(lam, X, Y)
    return result.negate_vars(X.names)


def littlewood_square_check(
    n: int, m: int, l: int, X: VarSeq, Y: VarSeq
) -> report.VerificationReport:
    """LS of a full (m+l)-wide, n-tall rectangle collapses to e(-X)^l D(Y; X)."""
    instance = {"n": n, "m": m, "l": l, "vars": list(X.names) + list(Y.names)}
    ident = "littlewood-square"
    if l < 0:
        return report.inapplicable(ident, instance, "l must be non-negative")
    if len(X) != n or len(Y) != m:
        return report.inapplicable(ident, instance, "alphabet lengths do not match n, m")
    lam = rect(m + l, n)
    rhs = e_prod(X.negated()) ** l * delta_pair(Y, X)
    via_det = ls_determinantal(lam, X, Y)
    via_comb = ls_combinatorial(lam, X.negated(), Y)
    if via_det == rhs and via_comb == rhs:
        return report.passed(ident, instance)
    w = via_det - rhs if via_det != rhs else via_comb - rhs
    return report.failed(ident, instance, str(w))
