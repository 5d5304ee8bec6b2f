"""The overlap operation on partitions, its sign, and the fiber enumerations.

The (m, n)-overlap of mu and nu is the partition lam with lam + rho_{m+n}
a rearrangement of (mu + rho_m) concatenated with (nu + rho_n); it is the
infinite sentinel when that merged sequence has a repeated entry.  The sign
is the parity of the sorting permutation.
"""

from __future__ import annotations

import itertools

from .partitions import Partition, binomial, partitions_in_box, rho
from .polyring import sort_sign
from .walks import StaircaseWalk, enumerate_walks, is_quasi_partition


class OverlapResult:
    """Either a finite partition with a sign in {+1, -1}, or infinity (sign +1)."""

    __slots__ = ("value", "sign")

    def __init__(self, value, sign):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, *a):
        raise AttributeError("OverlapResult is immutable")

    @staticmethod
    def finite(value: Partition, sign: int) -> "OverlapResult":
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return OverlapResult(value, sign)

    @staticmethod
    def infinite() -> "OverlapResult":
        return OverlapResult(None, 1)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __eq__(self, other):
        if not isinstance(other, OverlapResult):
            return NotImplemented
        return self.value == other.value and self.sign == other.sign

    def __hash__(self):
        return hash((self.value, self.sign))

    def __repr__(self):
        if self.is_infinite:
            return "OverlapResult(infinite)"
        return f"OverlapResult({self.value}, sign={self.sign:+d})"

    def to_json(self) -> dict:
        if self.is_infinite:
            return {"infinite": True}
        return {"value": self.value.to_json(), "sign": self.sign}


def overlap(mu: Partition, nu: Partition, m: int, n: int) -> OverlapResult:
    """The (m, n)-overlap of mu and nu with its sign.

    The merged sequence (mu + rho_m) u (nu + rho_n) either has a repeat
    (infinite overlap, sign +1) or sorts to a strictly decreasing sequence
    whose staircase-reduction is automatically a partition.
    """
    if mu.length > m:
        raise ValueError(f"length of {mu} exceeds m = {m}")
    if nu.length > n:
        raise ValueError(f"length of {nu} exceeds n = {n}")
    merged = _shifted(mu, m) + _shifted(nu, n)
    sign = sort_sign(merged)
    if sign == 0:
        return OverlapResult.infinite()
    stair = rho(m + n).padded(m + n)
    value = tuple(v - r for v, r in zip(sorted(merged, reverse=True), stair))
    return OverlapResult.finite(Partition(value), sign)


def _shifted(lam: Partition, k: int) -> tuple:
    """lam + rho_k as a tuple of length k."""
    p = lam.padded(k)
    return tuple(p[i] + (k - 1 - i) for i in range(k))


def enumerate_overlap_pairs(lam: Partition, m: int, n: int):
    """All (mu, nu, sign) with overlap(mu, nu, m, n) finite and equal to lam.

    One triple per staircase walk across the n-wide, m-high rectangle: labels
    of vertical steps extend the rows above the walk into mu, labels of
    horizontal steps extend the columns below into nu; the sign counts the
    boxes below the walk.
    """
    if lam.length > m + n:
        raise ValueError(f"length of {lam} exceeds m + n = {m + n}")
    for pi in enumerate_walks(n, m):
        yield walk_overlap_pair(lam, pi)


def walk_overlap_pair(lam: Partition, pi: StaircaseWalk):
    """The fiber triple (mu, nu, sign) carried by one labeled walk."""
    mu = pi.mu().add(Partition(lam.select(pi.v_times())))
    nu = pi.nu_conj().add(Partition(lam.select(pi.h_times())))
    sign = -1 if pi.nu().size % 2 else 1
    return mu, nu, sign


def infinite_overlap_witness(mu: Partition, nu: Partition, m: int, n: int):
    """A labeled-walk witness for an infinite overlap, or None if finite.

    Returns (pi, alpha) with mu and nu recoverable from the walk's partitions
    plus the labels, alpha a quasi-partition for pi that is not a partition.
    Among the valid vertical-step splits the lexicographically smallest is
    chosen, so the output is deterministic.
    """
    if mu.length > m:
        raise ValueError(f"length of {mu} exceeds m = {m}")
    if nu.length > n:
        raise ValueError(f"length of {nu} exceeds n = {n}")
    mu_shift = _shifted(mu, m)
    nu_shift = _shifted(nu, n)
    if sort_sign(mu_shift + nu_shift) != 0:
        return None
    total = m + n
    merged = sorted(mu_shift + nu_shift, reverse=True)
    stair = rho(total).padded(total)
    alpha = tuple(v - r for v, r in zip(merged, stair))
    positions = {}
    for pos, v in enumerate(merged):
        positions.setdefault(v, []).append(pos + 1)
    v_set = []
    used = {v: 0 for v in positions}
    for v in mu_shift:
        v_set.append(positions[v][used[v]])
        used[v] += 1
    pi = StaircaseWalk.from_v_times(sorted(v_set), total)
    assert is_quasi_partition(alpha, pi)
    return pi, alpha


def reconstruct_from_witness(pi: StaircaseWalk, alpha):
    """Inverse of the witness map: the (mu, nu) pair a labeled walk encodes."""
    alpha = tuple(alpha)
    mu = _seq_add(pi.mu(), tuple(alpha[t - 1] for t in pi.v_times()))
    nu = _seq_add(pi.nu_conj(), tuple(alpha[t - 1] for t in pi.h_times()))
    return mu, nu


def _seq_add(lam: Partition, labels: tuple) -> Partition:
    p = lam.padded(len(labels))
    return Partition(tuple(a + b for a, b in zip(p, labels)))


def brute_force_fiber(lam: Partition, m: int, n: int):
    """Definitional fiber scan over the bounding box; the enumeration oracle.

    Any pair overlapping to lam fits in mu_1 <= lam_1 + n, nu_1 <= lam_1 + m,
    and pair sizes are forced to |mu| + |nu| = |lam| + m*n.
    """
    target_size = lam.size + m * n
    by_size = {}
    for nu in partitions_in_box(lam.part(1) + m, n):
        by_size.setdefault(nu.size, []).append(nu)
    out = []
    for mu in partitions_in_box(lam.part(1) + n, m):
        rest = target_size - mu.size
        for nu in by_size.get(rest, ()):
            r = overlap(mu, nu, m, n)
            if r.is_finite and r.value == lam:
                out.append((mu, nu, r.sign))
    return out


def sub_partition(lam: Partition, N: int, K) -> Partition:
    """Subpartition of lam along the index subsequence K inside [N].

    Part j is lam_{K_j} + N - K_j - (l(K) - j); the staircase shift makes the
    result a partition whenever K is strictly increasing within [N].
    """
    K = tuple(K)
    if lam.length > N:
        raise ValueError(f"length of {lam} exceeds N = {N}")
    if any(not (1 <= k <= N) for k in K) or list(K) != sorted(set(K)):
        raise ValueError(f"K = {K} is not a subsequence of [{N}]")
    l = len(K)
    return Partition(tuple(lam.part(K[j]) + N - K[j] - (l - 1 - j) for j in range(l)))


def c_indices(K, n: int) -> tuple:
    """Ascending reflection {n - j + 1 : j not in K} of the complement of K in [n]."""
    K = tuple(K)
    if any(not (1 <= k <= n) for k in K) or list(K) != sorted(set(K)):
        raise ValueError(f"K = {K} is not a subsequence of [{n}]")
    missing = set(range(1, n + 1)) - set(K)
    return tuple(sorted(n - j + 1 for j in missing))


def subpartition_to_overlap(lam: Partition, K, m: int, n: int):
    """Map a marked pair (lam, K) to the overlap pair it corresponds to.

    Returns (mu, nu, sign) = (lam', sub(lam~, C_n(K)), parity of the dropped
    complement labels); the pair overlaps, over (m, l(C_n(K))), to the
    conjugate of sub(lam, K).
    """
    if not lam.fits_in(m, n):
        raise ValueError(f"{lam} does not fit in a {m}x{n} rectangle")
    C = c_indices(K, n)
    comp = lam.complement(m, n)
    mu = lam.conjugate()
    nu = sub_partition(comp, n, C)
    sign = -1 if sum(comp.select(C)) % 2 else 1
    return mu, nu, sign


def enumerate_subpartition_pairs(kappa: Partition, m: int, n: int, l: int):
    """All (lam, K) with lam in the m x (n+l) box, l(K) = l, sub(lam, K) = kappa.

    Definitional scan over the bounded search space; the count is the same
    binomial as the overlap fiber, and mapping through subpartition_to_overlap
    is a bijection onto the fiber of kappa'.
    """
    if not kappa.fits_in(m + n, l):
        raise ValueError(f"{kappa} does not fit in a {m + n}x{l} rectangle")
    out = []
    for lam in partitions_in_box(m, n + l):
        for K in itertools.combinations(range(1, n + l + 1), l):
            if sub_partition(lam, n + l, K) == kappa:
                out.append((lam, K))
    return out


def count_fiber(m: int, n: int) -> int:
    return binomial(m + n, m)
