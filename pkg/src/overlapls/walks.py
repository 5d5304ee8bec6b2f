"""Staircase walks across a rectangle and their associated partitions.

A walk goes from the top-right corner to the bottom-left corner of a
rectangle of width n and height m using west (H) and south (V) steps only.
Step 1 is the first step taken; all step-time sequences are 1-based.
"""

from __future__ import annotations

from .partitions import Partition, binomial, rho


class StaircaseWalk:
    """Word over {H, V}; n = number of H steps (width), m = V steps (height)."""

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        steps = str(steps)
        if any(s not in "HV" for s in steps):
            raise ValueError(f"walk steps must be H or V, got {steps!r}")
        object.__setattr__(self, "steps", steps)

    def __setattr__(self, *a):
        raise AttributeError("StaircaseWalk is immutable")

    @property
    def n(self) -> int:
        return self.steps.count("H")

    @property
    def m(self) -> int:
        return self.steps.count("V")

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, StaircaseWalk) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"StaircaseWalk({self.steps!r})"

    @staticmethod
    def from_v_times(v_times, total: int) -> "StaircaseWalk":
        """Build the walk of the given length whose V steps occur at v_times."""
        vs = set(v_times)
        if any(not (1 <= t <= total) for t in vs) or len(vs) != len(tuple(v_times)):
            raise ValueError(f"invalid vertical step times {tuple(v_times)}")
        return StaircaseWalk("".join("V" if t in vs else "H" for t in range(1, total + 1)))

    def v_times(self) -> tuple:
        """Ascending 1-based positions of the vertical steps."""
        return tuple(i + 1 for i, s in enumerate(self.steps) if s == "V")

    def h_times(self) -> tuple:
        """Ascending 1-based positions of the horizontal steps."""
        return tuple(i + 1 for i, s in enumerate(self.steps) if s == "H")

    def mu(self) -> Partition:
        """Partition whose diagram lies above the walk.

        Row i counts the horizontal steps taken after the i-th vertical step.
        """
        rows = []
        remaining_h = self.n
        for s in self.steps:
            if s == "V":
                rows.append(remaining_h)
            else:
                remaining_h -= 1
        return Partition(rows)

    def nu_conj(self) -> Partition:
        """Conjugate of the partition below the walk.

        Column j counts the vertical steps taken after the j-th horizontal step.
        """
        cols = []
        remaining_v = self.m
        for s in self.steps:
            if s == "H":
                cols.append(remaining_v)
            else:
                remaining_v -= 1
        return Partition(cols)

    def nu(self) -> Partition:
        """Partition whose diagram (rotated by 180 degrees) lies below the walk."""
        return self.nu_conj().conjugate()

    def split(self, c: int):
        """Split into the first c steps and the rest, each an independent walk."""
        if not (0 <= c <= len(self.steps)):
            raise ValueError(f"cut {c} out of range for a walk of {len(self.steps)} steps")
        return StaircaseWalk(self.steps[:c]), StaircaseWalk(self.steps[c:])

    def complement_walk(self) -> "StaircaseWalk":
        """Walk the stairs in the opposite direction: reverses the step word.

        Swaps the two associated partitions: mu of the result is nu of self.
        """
        return StaircaseWalk(self.steps[::-1])

    def to_json(self) -> str:
        return self.steps


def enumerate_walks(n: int, m: int):
    """All walks with n horizontal and m vertical steps, lexicographic in the word."""
    if n < 0 or m < 0:
        raise ValueError("rectangle dimensions must be non-negative")

    def gen(h, v):
        if h == 0 and v == 0:
            yield ""
            return
        if h:
            for rest in gen(h - 1, v):
                yield "H" + rest
        if v:
            for rest in gen(h, v - 1):
                yield "V" + rest

    for word in gen(n, m):
        yield StaircaseWalk(word)


def count_walks(n: int, m: int) -> int:
    return binomial(n + m, m)


def v_times(pi: StaircaseWalk) -> tuple:
    return pi.v_times()


def h_times(pi: StaircaseWalk) -> tuple:
    return pi.h_times()


def mu_of(pi: StaircaseWalk) -> Partition:
    return pi.mu()


def nu_of(pi: StaircaseWalk) -> Partition:
    return pi.nu()


def split_walk(pi: StaircaseWalk, c: int):
    return pi.split(c)


def complement_walk(pi: StaircaseWalk) -> StaircaseWalk:
    return pi.complement_walk()


def is_quasi_partition(alpha, pi: StaircaseWalk) -> bool:
    """Check the four quasi-partition conditions of a label sequence on a walk.

    Conditions: the last label is non-negative; no interior double strict
    increase; labels weakly decrease across same-type consecutive steps; and
    labels increase by at most one across type changes.  Out-of-range
    neighbours make a condition vacuous.
    """
    alpha = tuple(int(a) for a in alpha)
    total = len(pi)
    if len(alpha) != total:
        raise ValueError(f"label sequence length {len(alpha)} != walk length {total}")
    if total == 0:
        return True
    if alpha[-1] < 0:
        return False
    for i in range(1, total - 1):
        if alpha[i - 1] < alpha[i] < alpha[i + 1]:
            return False
    for i in range(total - 1):
        if pi.steps[i] == pi.steps[i + 1]:
            if alpha[i + 1] > alpha[i]:
                return False
        else:
            if alpha[i + 1] > alpha[i] + 1:
                return False
    return True


def step_time_encoding(pi: StaircaseWalk):
    """Step-time encoding of the walk's partitions.

    mu(pi) + rho_m equals rho_{m+n} restricted to vertical step times, and
    nu(pi)' + rho_n equals the restriction to horizontal step times.
    """
    total = len(pi)
    big = rho(total)
    v = Partition(big.select(pi.v_times()))
    h = Partition(big.select(pi.h_times()))
    return v, h
