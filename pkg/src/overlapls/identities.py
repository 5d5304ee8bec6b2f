"""Executable verifiers for the overlap identities and their specializations.

Each verifier re-checks its own preconditions and reports "inapplicable"
rather than pass/fail when they are violated; dropping a hypothesis silently
is exactly how the counterexample kept in this module arises.  Fiber sums
are always generated through the walk and subpartition enumerators, never by
scanning partitions, so a passing verifier simultaneously certifies the
bijections behind those enumerators.

Each split sum iterates over order-preserving subsequences of a fixed
variable order; every Vandermonde-type sign follows from that single rule.
"""

from __future__ import annotations

from fractions import Fraction

from . import report
from .littlewood_schur import ls_determinantal
from .overlap import (
    enumerate_overlap_pairs,
    enumerate_subpartition_pairs,
    overlap,
    subpartition_to_overlap,
    sub_partition,
    c_indices,
)
from .partitions import Partition, partitions_in_box, shift_first
from .polyring import (
    ONE,
    PolyFraction,
    VarSeq,
    ZERO,
    as_fraction,
    delta_pair,
    sum_fractions,
)
from .schur import schur, schur_value
from .walks import enumerate_walks

_SPOT_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
_SPOT_COUNT = 4


def spot_points(names, count: int = _SPOT_COUNT):
    """Deterministic rational points with pairwise distinct coordinates."""
    names = list(names)
    if len(names) > len(_SPOT_BASES):
        raise ValueError("too many variables for the spot grid")
    for j in range(count):
        yield {
            n: Fraction(_SPOT_BASES[i] + 60 * j, j + 1) for i, n in enumerate(names)
        }


def _conclude(ident, instance, mode, lhs, terms, names):
    """Compare a left side with a sum of fraction terms, symbolically or on points."""
    if mode == "symbolic":
        total = sum_fractions(terms)
        diff = as_fraction(lhs) - total
        if diff.is_zero:
            return report.passed(ident, instance)
        return report.failed(ident, instance, str(diff), mode)
    if mode != "grid":
        raise ValueError(f"unknown mode {mode!r}")
    for point in spot_points(names):
        lv = as_fraction(lhs).evaluate(point)
        rv = sum((as_fraction(t).evaluate(point) for t in terms), Fraction(0))
        if lv != rv:
            return report.failed(ident, instance, f"point {point}", mode)
    return report.passed(ident, instance, mode)


# -- first overlap identity ---------------------------------------------------


def verify_first_overlap(lam, m, n, l, mu, nu, X: VarSeq, Y: VarSeq, mode="symbolic"):
    """Split sum over subsequences of X against LS of the full alphabet.

    Requires the first n - k parts of lam to be the (l, n-k-l)-overlap of
    (mu, nu), with k the (m, n)-index of lam and 0 <= l <= min(n-k, n).
    """
    ident = "first-overlap"
    instance = {
        "lambda": lam.to_json(), "m": m, "n": n, "l": l,
        "mu": mu.to_json(), "nu": nu.to_json(),
    }
    if len(X) != n or len(Y) != m:
        return report.inapplicable(ident, instance, "alphabet lengths do not match n, m")
    k = lam.index(m, n)
    if not 0 <= l <= min(n - k, n):
        return report.inapplicable(ident, instance, f"l = {l} outside [0, min(n-k, n)] for k = {k}")
    if mu.length > l or nu.length > n - k - l:
        return report.inapplicable(ident, instance, "mu or nu too long for the overlap")
    ov = overlap(mu, nu, l, n - k - l)
    if ov.is_infinite or ov.value != lam.take(n - k):
        return report.inapplicable(ident, instance, "overlap of (mu, nu) does not give the head of lambda")
    try:
        head = shift_first(mu, k, l)
    except ValueError:
        return report.inapplicable(ident, instance, "mu + <k^l> is not a partition")
    tail_index = nu.union(lam.drop(n - k))
    lhs = ls_determinantal(lam, X, Y)
    terms = []
    for S, T in X.splits(l):
        t1 = ls_determinantal(head, S, Y)
        t2 = ls_determinantal(tail_index, T, Y)
        terms.append(PolyFraction(ov.sign * t1 * t2, delta_pair(T, S)))
    return _conclude(ident, instance, mode, lhs, terms, X.names + Y.names)


def sorted_split_sum(lam, l, X: VarSeq, Y: VarSeq) -> PolyFraction:
    """The identity-sorting specialization of the first overlap split sum.

    Sums LS of (first l parts of lam, widened by n - l) against LS of the
    remaining parts over all splits; valid only while l stays at most n - k.
    """
    n = len(X)
    head = shift_first(lam.take(l), n - l, l)
    tail = lam.drop(l)
    terms = []
    for S, T in X.splits(l):
        t1 = ls_determinantal(head, S, Y)
        t2 = ls_determinantal(tail, T, Y)
        terms.append(PolyFraction(t1 * t2, delta_pair(T, S)))
    return sum_fractions(terms)


def counterexample_regression(mode="symbolic"):
    """Regression pinning the failure of the sorted split cut out of range.

    With two x variables, three y variables and the three-row column, cutting
    at l = 1 exceeds n - k; the split sum then misses exactly the monomial
    y1*y2*y3, and nothing else.
    """
    ident = "counterexample"
    lam = Partition((1, 1, 1))
    X = VarSeq.make("x", 2)
    Y = VarSeq.make("y", 3)
    instance = {"lambda": lam.to_json(), "n": 2, "m": 3, "l": 1}
    lhs = ls_determinantal(lam, X, Y)
    naive = sorted_split_sum(lam, 1, X, Y)
    diff = as_fraction(lhs) - naive
    expected = VarSeq.make("y", 3)
    target = ONE
    for i in range(3):
        target = target * expected.term(i)
    if mode == "grid":
        ok = all(
            diff.evaluate(p) == target.evaluate(p)
            for p in spot_points(X.names + Y.names)
        )
    else:
        ok = diff == as_fraction(target)
    if ok:
        return report.VerificationReport(ident, instance, mode, report.PASS, str(target))
    return report.failed(ident, instance, f"difference {diff}, expected {target}", mode)


def verify_cor_max_index(mu, nu, l, X: VarSeq, Y: VarSeq, mode="symbolic"):
    """Maximal-index form of the first overlap identity.

    The left side is LS of the overlap of mu with the head of nu, glued to
    the tail of nu; an infinite overlap forces both sides to vanish.
    """
    ident = "max-index"
    n, m = len(X), len(Y)
    instance = {"mu": mu.to_json(), "nu": nu.to_json(), "l": l, "n": n, "m": m}
    if not mu.length <= l <= n:
        return report.inapplicable(ident, instance, "need l(mu) <= l <= n")
    k = nu.index(m, n - l)
    if l > n - k:
        return report.inapplicable(ident, instance, f"l = {l} exceeds n - k for k = {k}")
    try:
        head = shift_first(mu, k, l)
    except ValueError:
        return report.inapplicable(ident, instance, "mu + <k^l> is not a partition")
    if head.index(m, l) != 0:
        return report.inapplicable(ident, instance, "mu + <k^l> does not have maximal index 0")
    ov = overlap(mu, nu.take(n - l - k), l, n - l - k)
    if ov.is_finite:
        lhs_part = ov.value.union(nu.drop(n - l - k))
        lhs = ls_determinantal(lhs_part, X, Y)
    else:
        lhs = ZERO
    terms = []
    for S, T in X.splits(l):
        t1 = ls_determinantal(head, S, Y)
        t2 = ls_determinantal(nu, T, Y)
        terms.append(PolyFraction(ov.sign * t1 * t2, delta_pair(T, S)))
    return _conclude(ident, instance, mode, lhs, terms, X.names + Y.names)


# -- second overlap identity and walk split -----------------------------------


def _second_overlap_setup(lam, S: VarSeq, T: VarSeq, Y: VarSeq):
    n = len(S) + len(T)
    m = len(Y)
    l = len(S)
    k = lam.index(m, n)
    return n, m, l, k


def _second_overlap_terms(lam, S, T, Y, k):
    """Triple-sum terms keyed by (p, U, V, mu, nu) for the bijection check.

    The split count p starts at l - (n - k) when the cut runs past the index
    columns: smaller p would ask the fiber for a negative-length side.
    """
    n, m, l = len(S) + len(T), len(Y), len(S)
    tail = lam.drop(n - k)
    head = lam.take(n - k)
    dts = delta_pair(T, S)
    terms = {}
    for p in range(max(0, l - (n - k)), min(l, m) + 1):
        for U, V in Y.splits(p):
            pref_num = delta_pair(V, S) * delta_pair(T, U)
            pref_den = delta_pair(V, U) * dts
            for mu, nu, sign in enumerate_overlap_pairs(head, l - p, n - k - l + p):
                reduced = shift_first(mu, -(m - k), l - p)
                t1 = ls_determinantal(reduced, S, U)
                t2 = ls_determinantal(nu.union(tail), T, V)
                key = (p, U.names, V.names, mu.parts, nu.parts)
                terms[key] = PolyFraction(sign * pref_num * t1 * t2, pref_den)
    return terms


def verify_second_overlap(lam, S: VarSeq, T: VarSeq, Y: VarSeq, mode="symbolic"):
    """Fiber sum over overlap pairs and splits of Y against LS of the union.

    Valid for every cut of the first alphabet: cutting past the index columns
    only shifts where the split count starts.
    """
    ident = "second-overlap"
    n, m, l, k = _second_overlap_setup(lam, S, T, Y)
    instance = {"lambda": lam.to_json(), "l(S)": l, "l(T)": n - l, "m": m}
    lhs = ls_determinantal(lam, S.concat(T), Y)
    terms = _second_overlap_terms(lam, S, T, Y, k)
    return _conclude(ident, instance, mode, lhs, list(terms.values()), S.names + T.names + Y.names)


def _walk_split_terms(lam, S, T, Y, k):
    """Walk-sum terms in the same key space as the triple sum."""
    n, m, l = len(S) + len(T), len(Y), len(S)
    tail = lam.drop(n - k)
    head = lam.take(n - k)
    dts = delta_pair(T, S)
    terms = {}
    for pi in enumerate_walks(m + n - k - l, l):
        pi1, pi2 = pi.split(n - k)
        p = pi2.m
        v2 = [t - 1 for t in pi2.v_times()]
        h2 = [t - 1 for t in pi2.h_times()]
        U = Y.subseq(v2)
        V = Y.subseq(h2)
        mu = pi1.mu().add(Partition(head.select(pi1.v_times())))
        nu = pi1.nu_conj().add(Partition(head.select(pi1.h_times())))
        sign = -1 if pi1.nu().size % 2 else 1
        reduced = shift_first(mu, -(m - k), l - p)
        t1 = ls_determinantal(reduced, S, U)
        t2 = ls_determinantal(nu.union(tail), T, V)
        pref_num = delta_pair(V, S) * delta_pair(T, U)
        pref_den = delta_pair(V, U) * dts
        key = (p, U.names, V.names, mu.parts, nu.parts)
        terms[key] = PolyFraction(sign * pref_num * t1 * t2, pref_den)
    return terms


def verify_walk_split(lam, S: VarSeq, T: VarSeq, Y: VarSeq, mode="symbolic"):
    """Single walk sum with prefix/suffix splitting against LS of the union."""
    ident = "walk-split"
    n, m, l, k = _second_overlap_setup(lam, S, T, Y)
    instance = {"lambda": lam.to_json(), "l(S)": l, "l(T)": n - l, "m": m}
    if l > m + n - k:
        return report.inapplicable(ident, instance, f"no walks carry {l} vertical steps")
    lhs = ls_determinantal(lam, S.concat(T), Y)
    terms = _walk_split_terms(lam, S, T, Y, k)
    return _conclude(ident, instance, mode, lhs, list(terms.values()), S.names + T.names + Y.names)


def walk_split_bijection_check(lam, S: VarSeq, T: VarSeq, Y: VarSeq):
    """Term-for-term agreement of the walk sum with the triple sum.

    The prefix of each walk carries the fiber pair, the suffix carries the
    split of Y; the check asserts the two term families coincide key by key.
    """
    ident = "walk-split-bijection"
    n, m, l, k = _second_overlap_setup(lam, S, T, Y)
    instance = {"lambda": lam.to_json(), "l(S)": l, "l(T)": n - l, "m": m}
    if l > m + n - k:
        return report.inapplicable(ident, instance, f"no walks carry {l} vertical steps")
    a = _second_overlap_terms(lam, S, T, Y, k)
    b = _walk_split_terms(lam, S, T, Y, k)
    if set(a) != set(b):
        mismatch = (set(a) - set(b)) | (set(b) - set(a))
        return report.failed(ident, instance, f"key mismatch: {mismatch}")
    for key in a:
        if a[key] != b[key]:
            return report.failed(ident, instance, f"terms differ at {key}")
    return report.passed(ident, instance)


# -- Schur specializations -------------------------------------------------------


def verify_first_overlap_schur(mu, nu, m, n, X: VarSeq, mode="symbolic"):
    """Schur of an overlap as a split sum over the union alphabet."""
    ident = "first-overlap-schur"
    instance = {"mu": mu.to_json(), "nu": nu.to_json(), "m": m, "n": n}
    if len(X) != m + n:
        return report.inapplicable(ident, instance, "need l(X) = m + n")
    if mu.length > m or nu.length > n:
        return report.inapplicable(ident, instance, "mu or nu too long")
    ov = overlap(mu, nu, m, n)
    if mode == "grid":
        for point in spot_points(X.names):
            values = [point[x] for x in X.names]
            lv = Fraction(0) if ov.is_infinite else schur_value(ov.value, values)
            rv = Fraction(0)
            for S, T in X.splits(m):
                sv = schur_value(mu, [point[x] for x in S.names])
                tv = schur_value(nu, [point[x] for x in T.names])
                d = Fraction(1)
                for s in S.names:
                    for t in T.names:
                        d *= point[s] - point[t]
                rv += ov.sign * sv * tv / d
            if lv != rv:
                return report.failed(ident, instance, f"point {point}", mode)
        return report.passed(ident, instance, mode)
    lhs = ZERO if ov.is_infinite else schur(ov.value, X)
    terms = []
    for S, T in X.splits(m):
        terms.append(PolyFraction(ov.sign * schur(mu, S) * schur(nu, T), delta_pair(S, T)))
    return _conclude(ident, instance, mode, lhs, terms, X.names)


def verify_second_overlap_schur(lam, S: VarSeq, T: VarSeq, mode="symbolic"):
    """Schur of the union alphabet against the overlap fiber of lam."""
    ident = "second-overlap-schur"
    m, n = len(S), len(T)
    instance = {"lambda": lam.to_json(), "l(S)": m, "l(T)": n}
    if lam.length > m + n:
        return report.inapplicable(ident, instance, "lambda too long")
    lhs = schur(lam, S.concat(T)) * delta_pair(S, T)
    total = ZERO
    for mu, nu, sign in enumerate_overlap_pairs(lam, m, n):
        total = total + sign * schur(mu, S) * schur(nu, T)
    if mode == "grid":
        for point in spot_points(S.names + T.names):
            if lhs.evaluate(point) != total.evaluate(point):
                return report.failed(ident, instance, f"point {point}", mode)
        return report.passed(ident, instance, mode)
    if lhs == total:
        return report.passed(ident, instance)
    return report.failed(ident, instance, str(lhs - total))


def verify_labeled_walk_schur(lam, S: VarSeq, T: VarSeq, mode="symbolic"):
    """Schur of the union as a signed sum over walks labeled by lam."""
    ident = "labeled-walk-schur"
    m, n = len(S), len(T)
    instance = {"lambda": lam.to_json(), "l(S)": m, "l(T)": n}
    if lam.length > m + n:
        return report.inapplicable(ident, instance, "lambda too long")
    lhs = schur(lam, S.concat(T)) * delta_pair(S, T)
    total = ZERO
    for pi in enumerate_walks(n, m):
        mu = pi.mu().add(Partition(lam.select(pi.v_times())))
        nu = pi.nu_conj().add(Partition(lam.select(pi.h_times())))
        sign = -1 if pi.nu().size % 2 else 1
        total = total + sign * schur(mu, S) * schur(nu, T)
    if mode == "grid":
        for point in spot_points(S.names + T.names):
            if lhs.evaluate(point) != total.evaluate(point):
                return report.failed(ident, instance, f"point {point}", mode)
        return report.passed(ident, instance, mode)
    if lhs == total:
        return report.passed(ident, instance)
    return report.failed(ident, instance, str(lhs - total))


# -- subpartition identities -----------------------------------------------------


def verify_subpartition_schur(kappa, m, n, l, S: VarSeq, T: VarSeq, mode="symbolic"):
    """Schur of the conjugate of kappa as a sum over marked pairs (lam, K)."""
    ident = "subpartition-schur"
    instance = {"kappa": kappa.to_json(), "m": m, "n": n, "l": l}
    if len(S) != m or len(T) != n:
        return report.inapplicable(ident, instance, "alphabet lengths do not match m, n")
    if not kappa.fits_in(m + n, l):
        return report.inapplicable(ident, instance, f"kappa not inside {m + n}x{l}")
    lhs = schur(kappa.conjugate(), S.concat(T)) * delta_pair(S, T)
    total = ZERO
    for lam, K in enumerate_subpartition_pairs(kappa, m, n, l):
        muK, nuK, sign = subpartition_to_overlap(lam, K, m, n + l)
        total = total + sign * schur(muK, S) * schur(nuK, T)
    if mode == "grid":
        for point in spot_points(S.names + T.names):
            if lhs.evaluate(point) != total.evaluate(point):
                return report.failed(ident, instance, f"point {point}", mode)
        return report.passed(ident, instance, mode)
    if lhs == total:
        return report.passed(ident, instance)
    return report.failed(ident, instance, str(lhs - total))


def verify_subpartition_ls(kappa, m, n, n_tilde, l, q, S: VarSeq, T: VarSeq, Y: VarSeq, mode="symbolic"):
    """LS of the conjugate of kappa as a triple sum over marked pairs and Y splits."""
    ident = "subpartition-ls"
    instance = {
        "kappa": kappa.to_json(), "m": m, "n": n, "n~": n_tilde, "l": l, "q": q,
    }
    if n_tilde > q:
        return report.inapplicable(ident, instance, "need n~ <= q")
    if len(S) != m or len(T) != n + n_tilde or len(Y) != q:
        return report.inapplicable(ident, instance, "alphabet lengths do not match")
    if not kappa.fits_in(m + n, l):
        return report.inapplicable(ident, instance, f"kappa not inside {m + n}x{l}")
    if not kappa.contains_cell(m + n, q - n_tilde):
        return report.inapplicable(ident, instance, "kappa misses the corner cell")
    lhs = ls_determinantal(kappa.conjugate(), S.concat(T), Y)
    dts = delta_pair(T, S)
    terms = []
    for p in range(0, min(m, q) + 1):
        nn = n + p + l
        summands = []
        for lam, K in enumerate_subpartition_pairs(kappa, m - p, n + p, l):
            C = c_indices(K, nn)
            comp = lam.complement(m - p, nn)
            sign = -1 if sum(comp.select(C)) % 2 else 1
            reduced = shift_first(lam.conjugate(), -(q - n_tilde), m - p)
            summands.append((sign, reduced, sub_partition(comp, nn, C)))
        for U, V in Y.splits(p):
            pref_num = delta_pair(V, S) * delta_pair(T, U)
            pref_den = delta_pair(V, U) * dts
            for sign, reduced, below in summands:
                t1 = ls_determinantal(reduced, S, U)
                t2 = ls_determinantal(below, T, V)
                terms.append(PolyFraction(sign * pref_num * t1 * t2, pref_den))
    return _conclude(ident, instance, mode, lhs, terms, S.names + T.names + Y.names)


# -- classical specializations -------------------------------------------------


def _sweep_first_overlap(max_box, nvars, mode, seed):
    out = []
    for lam in partitions_in_box(max_box, max_box):
        for n in range(1, nvars + 1):
            for m in range(0, min(nvars, 2) + 1):
                X, Y = VarSeq.make("x", n), VarSeq.make("y", m)
                k = lam.index(m, n)
                if k < 0:
                    continue
                for l in range(0, min(n - k, n) + 1):
                    for mu, nu, _ in enumerate_overlap_pairs(lam.take(n - k), l, n - k - l):
                        out.append(verify_first_overlap(lam, m, n, l, mu, nu, X, Y, mode))
    return out


def _sweep_max_index(max_box, nvars, mode, seed):
    out = []
    n, m = max(nvars, 1), min(nvars, 2)
    X, Y = VarSeq.make("x", n), VarSeq.make("y", m)
    for mu in partitions_in_box(max_box, max_box):
        for nu in partitions_in_box(max_box, max_box):
            for l in range(mu.length, n + 1):
                r = verify_cor_max_index(mu, nu, l, X, Y, mode)
                if not r.inapplicable:
                    out.append(r)
    return out


def _sweep_second_overlap(max_box, nvars, mode, seed):
    out = []
    for lam in partitions_in_box(max_box, max_box):
        for n in range(0, nvars + 1):
            for l in range(0, n + 1):
                S = VarSeq.make("s", l)
                T = VarSeq.make("t", n - l)
                for m in range(0, min(nvars, 2) + 1):
                    Y = VarSeq.make("y", m)
                    r = verify_second_overlap(lam, S, T, Y, mode)
                    if not r.inapplicable:
                        out.append(r)
    return out


def _sweep_walk_split(max_box, nvars, mode, seed):
    out = []
    for lam in partitions_in_box(max_box, max_box):
        for n in range(0, nvars + 1):
            for l in range(0, n + 1):
                S = VarSeq.make("s", l)
                T = VarSeq.make("t", n - l)
                for m in range(0, min(nvars, 2) + 1):
                    Y = VarSeq.make("y", m)
                    r = verify_walk_split(lam, S, T, Y, mode)
                    if not r.inapplicable:
                        out.append(r)
                        out.append(walk_split_bijection_check(lam, S, T, Y))
    return out


def _sweep_first_overlap_schur(max_box, nvars, mode, seed):
    out = []
    m = n = max(1, min(nvars, 2))
    X = VarSeq.make("x", m + n)
    for mu in partitions_in_box(max_box, m):
        for nu in partitions_in_box(max_box, n):
            out.append(verify_first_overlap_schur(mu, nu, m, n, X, mode))
    return out


def _sweep_second_overlap_schur(max_box, nvars, mode, seed):
    out = []
    for lam in partitions_in_box(max_box, max_box):
        for m in range(0, nvars + 1):
            for n in range(0, nvars + 1):
                if lam.length > m + n:
                    continue
                S, T = VarSeq.make("s", m), VarSeq.make("t", n)
                out.append(verify_second_overlap_schur(lam, S, T, mode))
    return out


def _sweep_labeled_walk_schur(max_box, nvars, mode, seed):
    out = []
    for lam in partitions_in_box(max_box, max_box):
        for m in range(0, nvars + 1):
            for n in range(0, nvars + 1):
                if lam.length > m + n:
                    continue
                S, T = VarSeq.make("s", m), VarSeq.make("t", n)
                out.append(verify_labeled_walk_schur(lam, S, T, mode))
    return out


def _sweep_subpartition_schur(max_box, nvars, mode, seed):
    out = []
    for m in range(0, min(nvars, 2) + 1):
        for n in range(0, min(nvars, 2) + 1):
            S, T = VarSeq.make("s", m), VarSeq.make("t", n)
            for l in range(0, 3):
                for kappa in partitions_in_box(m + n, l):
                    out.append(verify_subpartition_schur(kappa, m, n, l, S, T, mode))
    return out


def _sweep_subpartition_ls(max_box, nvars, mode, seed):
    out = []
    for m in range(0, 3):
        for n in range(0, 2):
            for l in range(0, 2):
                for q in range(0, min(nvars, 2) + 1):
                    for nt in range(0, q + 1):
                        S = VarSeq.make("s", m)
                        T = VarSeq.make("t", n + nt)
                        Y = VarSeq.make("y", q)
                        for kappa in partitions_in_box(m + n, l):
                            r = verify_subpartition_ls(kappa, m, n, nt, l, q, S, T, Y, mode)
                            if not r.inapplicable:
                                out.append(r)
    return out


def _sweep_dual_cauchy(max_box, nvars, mode, seed):
    out = []
    for n in range(0, nvars + 1):
        for m in range(0, nvars + 1):
            out.append(verify_dual_cauchy(VarSeq.make("x", n), VarSeq.make("y", m), mode))
    return out


def _sweep_littlewood_square(max_box, nvars, mode, seed):
    from .littlewood_schur import littlewood_square_check

    out = []
    for n in range(0, min(nvars, 2) + 1):
        for m in range(0, min(nvars, 2) + 1):
            for l in range(0, 3):
                X, Y = VarSeq.make("x", n), VarSeq.make("y", m)
                out.append(littlewood_square_check(n, m, l, X, Y))
    return out


def _sweep_factor_rule(max_box, nvars, mode, seed):
    from .schur import factor_rule_check

    out = []
    for n in range(1, nvars + 1):
        X = VarSeq.make("x", n)
        for lam in partitions_in_box(max_box, n):
            for m in range(0, 3):
                out.append(factor_rule_check(lam, m, X))
    return out


def _sweep_complement_reciprocity(max_box, nvars, mode, seed):
    from .schur import complement_reciprocity_check

    out = []
    for n in range(1, nvars + 1):
        X = VarSeq.make("x", n)
        for m in range(0, max_box + 1):
            for lam in partitions_in_box(m, n):
                out.append(complement_reciprocity_check(lam, m, X, mode))
    return out


def _sweep_counterexample(max_box, nvars, mode, seed):
    return [counterexample_regression(mode)]


def _sweep_laplace(max_box, nvars, mode, seed):
    import random

    from .polyring import PolyMatrix, det, laplace_expand

    rng = random.Random(seed)
    out = []
    for trial in range(5):
        n = 4 + trial % 2
        A = PolyMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        d = det(A)
        ok = True
        for size in range(1, n):
            K = tuple(sorted(rng.sample(range(1, n + 1), size)))
            if laplace_expand(A, K) != d:
                ok = False
                break
        instance = {"trial": trial, "n": n, "seed": seed}
        if ok:
            out.append(report.passed("laplace", instance))
        else:
            out.append(report.failed("laplace", instance, f"row subset {K}"))
    return out


CATALOG = {
    "first-overlap": _sweep_first_overlap,
    "max-index": _sweep_max_index,
    "second-overlap": _sweep_second_overlap,
    "walk-split": _sweep_walk_split,
    "first-overlap-schur": _sweep_first_overlap_schur,
    "second-overlap-schur": _sweep_second_overlap_schur,
    "labeled-walk-schur": _sweep_labeled_walk_schur,
    "subpartition-schur": _sweep_subpartition_schur,
    "subpartition-ls": _sweep_subpartition_ls,
    "dual-cauchy": _sweep_dual_cauchy,
    "littlewood-square": _sweep_littlewood_square,
    "factor-rule": _sweep_factor_rule,
    "complement-reciprocity": _sweep_complement_reciprocity,
    "counterexample": _sweep_counterexample,
    "laplace": _sweep_laplace,
}


def run_catalog(names=None, max_box=2, nvars=2, mode="symbolic", seed=0):
    """Run named verifier sweeps (all of them when names is None), in catalog order."""
    if names is None:
        names = list(CATALOG)
    reports = []
    for name in names:
        if name not in CATALOG:
            raise KeyError(f"unknown verifier {name!r}")
        reports.extend(CATALOG[name](max_box, nvars, mode, seed))
    return reports


def verify_dual_cauchy(X: VarSeq, Y: VarSeq, mode="symbolic"):
    """Sum of paired Schur functions against the product of (1 + x y)."""
    ident = "dual-cauchy"
    n, m = len(X), len(Y)
    instance = {"l(X)": n, "l(Y)": m}
    total = ZERO
    for lam in partitions_in_box(m, n):
        sx = schur(lam, X)
        if sx.is_zero:
            continue
        sy = schur(lam.conjugate(), Y)
        if sy.is_zero:
            continue
        total = total + sx * sy
    product = ONE
    for i in range(n):
        for j in range(m):
            product = product * (ONE + X.term(i) * Y.term(j))
    if mode == "grid":
        for point in spot_points(X.names + Y.names):
            if total.evaluate(point) != product.evaluate(point):
                return report.failed(ident, instance, f"point {point}", mode)
        return report.passed(ident, instance, mode)
    if total == product:
        return report.passed(ident, instance)
    return report.failed(ident, instance, str(total - product))
