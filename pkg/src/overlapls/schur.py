"""Schur polynomials by two independent routes.

The bialternant route divides the alternant determinant by the Vandermonde
and certifies the division is exact; the tableau route sums content
monomials over semistandard fillings and never divides.  The two agree on
all inputs, which the test suite checks exhaustively at desk scale.
"""

from __future__ import annotations

from . import report
from .partitions import Partition, rect
from .polyring import (
    ONE,
    PolyFraction,
    PolyMatrix,
    VarSeq,
    ZERO,
    as_fraction,
    det,
    divexact,
    e_prod,
    eval_at,
    vandermonde,
)

_ssyt_cache: dict = {}
_bialt_cache: dict = {}


def schur_bialternant(lam: Partition, X: VarSeq):
    """Quotient of the alternant det(x^(lam_j + n - j)) by the Vandermonde.

    Zero when the partition is longer than the variable sequence.  The
    division must leave no remainder; a remainder would signal an
    implementation bug and raises immediately.
    """
    n = len(X)
    if lam.length > n:
        return ZERO
    if n == 0:
        return ONE
    key = (lam.parts, X)
    got = _bialt_cache.get(key)
    if got is not None:
        return got
    p = lam.padded(n)
    rows = []
    for i in range(n):
        rows.append([X.monomial(i, p[j] + n - 1 - j) for j in range(n)])
    numerator = det(PolyMatrix(rows))
    denominator = vandermonde(X)
    if isinstance(numerator, PolyFraction) or isinstance(denominator, PolyFraction):
        result = as_fraction(numerator) / as_fraction(denominator)
    else:
        result = divexact(numerator, denominator)
    _bialt_cache[key] = result
    return result


def schur_ssyt(lam: Partition, X: VarSeq):
    """Sum of content monomials over semistandard tableaux of shape lam.

    Rows weakly increase, columns strictly increase, entries range over one
    symbol per variable.  Needs no distinctness and no division.
    """
    n = len(X)
    if lam.length > n:
        return ZERO
    key = (lam.parts, X)
    got = _ssyt_cache.get(key)
    if got is not None:
        return got
    total = ZERO
    for content in _ssyt_contents(lam, n):
        mono = ONE
        for i, e in enumerate(content):
            if e:
                mono = mono * X.monomial(i, e)
        total = total + mono
    _ssyt_cache[key] = total
    return total


def _ssyt_contents(lam: Partition, n: int):
    """Yield the content vector of every semistandard filling of lam with 1..n."""
    shape = lam.parts
    rows = [[0] * r for r in shape]

    def fill(r, c):
        if r == len(shape):
            yield tuple(count)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c else 1
        if r and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            count[v - 1] += 1
            yield from fill(nr, nc)
            count[v - 1] -= 1

    count = [0] * n
    if not shape:
        yield tuple(count)
        return
    yield from fill(0, 0)


def schur(lam: Partition, X: VarSeq):
    """Schur polynomial via the cheaper route for the given size."""
    if len(X) <= 5:
        return schur_bialternant(lam, X)
    return schur_ssyt(lam, X)


def schur_value(lam: Partition, values):
    """Schur polynomial evaluated at pairwise distinct rational values.

    Uses the numeric alternant over the numeric Vandermonde, so arbitrary
    variable counts stay cheap.
    """
    from fractions import Fraction

    values = [Fraction(v) for v in values]
    n = len(values)
    if lam.length > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    if len(set(values)) != n:
        raise ValueError("alternant evaluation needs distinct values")
    p = lam.padded(n)
    rows = [[x ** (p[j] + n - 1 - j) for j in range(n)] for x in values]
    vdm = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            vdm *= values[i] - values[j]
    return _numeric_det(rows) / vdm


def _numeric_det(rows):
    """Fraction-exact determinant by Gaussian elimination."""
    from fractions import Fraction

    m = [list(r) for r in rows]
    n = len(m)
    result = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            result = -result
        pivot = m[k][k]
        result *= pivot
        for r in range(k + 1, n):
            factor = m[r][k] / pivot
            if factor:
                for c in range(k, n):
                    m[r][c] -= factor * m[k][c]
    return result


def factor_rule_check(lam: Partition, m: int, X: VarSeq) -> report.VerificationReport:
    """Pulling a full m-column rectangle out of the index multiplies by e(X)^m."""
    instance = {"lambda": lam.to_json(), "m": m, "vars": list(X.names)}
    ident = "factor-rule"
    if m < 0:
        return report.inapplicable(ident, instance, "m must be non-negative")
    n = len(X)
    if lam.length > n:
        return report.inapplicable(ident, instance, "partition longer than variable count")
    lhs = schur_bialternant(lam.add(rect(m, n)), X)
    rhs = e_prod(X) ** m * schur_bialternant(lam, X)
    if lhs == rhs:
        return report.passed(ident, instance)
    return report.failed(ident, instance, str(lhs - rhs))


def complement_reciprocity_check(
    lam: Partition, m: int, X: VarSeq, mode: str = "symbolic"
) -> report.VerificationReport:
    """Schur of the complement against the inverted-variable Schur.

    s of the (m, n)-complement of lam equals s_lam at inverted variables
    times e(X)^m.  Symbolic mode works in the fraction field generated by
    the inversion marks; grid mode evaluates at nonzero rational points, one
    grid value per degree step, which certifies equality at these degrees.
    """
    n = len(X)
    instance = {"lambda": lam.to_json(), "m": m, "vars": list(X.names), "mode": mode}
    ident = "complement-reciprocity"
    if not lam.fits_in(m, n):
        return report.inapplicable(ident, instance, f"lambda does not fit in {m}x{n}")
    lhs = schur_bialternant(lam.complement(m, n), X)
    if mode == "symbolic":
        rhs = as_fraction(schur_bialternant(lam, X.inverted())) * as_fraction(e_prod(X) ** m)
        ok = as_fraction(lhs) == rhs
        if ok:
            return report.passed(ident, instance)
        return report.failed(ident, instance, str(as_fraction(lhs) - rhs))
    if mode != "grid":
        raise ValueError(f"unknown mode {mode!r}")
    s_lam = schur_bialternant(lam, X)
    e_x = e_prod(X)
    from fractions import Fraction
    from itertools import product

    # Cleared, the identity has per-variable degree at most lam_1 + m, so
    # one more grid value per variable certifies it; 0 is excluded because
    # the right side inverts the variables, hence the shift by 1.
    per_var = lam.part(1) + m + 1
    points = [Fraction(v) for v in range(1, per_var + 1)]
    for values in product(points, repeat=n):
        point = dict(zip(X.names, values))
        inv_point = {k: 1 / v for k, v in point.items()}
        left = eval_at(lhs, point)
        right = eval_at(s_lam, inv_point) * eval_at(e_x, point) ** m
        if left != right:
            return report.failed(ident, instance, f"point {point}")
    return report.passed(ident, instance)
