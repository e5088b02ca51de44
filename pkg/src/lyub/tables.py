"""Invariant tables: Lyubeznik, Bass, dual Bass, Betti.

All tables hold exact nonnegative integers and are plain immutable values;
rendering lives in the CLI module.
"""

from dataclasses import dataclass

from .combinatorics import mask_key
from .errors import ContractError


@dataclass(frozen=True)
class LyubeznikTable:
    """Upper triangular (d+1) x (d+1) table of lambda_{p,i}.

    Entries with p > i are zero by definition; lambda_{d,d} >= 1 always.
    """

    d: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        size = self.d + 1
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ContractError("Lyubeznik table has wrong shape")
        for p in range(size):
            for i in range(size):
                if p > i and self.entries[p][i]:
                    raise ContractError(f"lambda_{{{p},{i}}} nonzero below the diagonal")
        if self.entries[self.d][self.d] < 1:
            raise ContractError("lambda_{d,d} must be at least 1")

    def entry(self, p: int, i: int) -> int:
        if 0 <= p <= self.d and 0 <= i <= self.d:
            return self.entries[p][i]
        return 0

    @property
    def is_trivial(self) -> bool:
        """A single 1 at (d, d)."""
        for p in range(self.d + 1):
            for i in range(self.d + 1):
                expected = 1 if p == i == self.d else 0
                if self.entries[p][i] != expected:
                    return False
        return True

    @classmethod
    def from_entries(cls, d: int, values) -> "LyubeznikTable":
        """Build from a mapping (p, i) -> value."""
        grid = [[0] * (d + 1) for _ in range(d + 1)]
        for (p, i), v in values.items():
            if v:
                grid[p][i] = v
        return cls(d, tuple(tuple(row) for row in grid))


def _canonical_rows(rows: dict[int, list[int]]) -> tuple:
    """Trim trailing zeros, drop zero rows, sort masks canonically."""
    out = []
    for alpha in sorted(rows, key=mask_key):
        mu = list(rows[alpha])
        while mu and mu[-1] == 0:
            mu.pop()
        if mu:
            out.append((alpha, tuple(mu)))
    return tuple(out)


@dataclass(frozen=True)
class BassTable:
    """Bass numbers mu_p(p_alpha, H_I^r(R)); zero rows omitted."""

    r: int
    rows: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_rows(cls, r: int, rows: dict[int, list[int]]) -> "BassTable":
        return cls(r, _canonical_rows(rows))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rows)

    def mu(self, alpha: int, p: int) -> int:
        for a, vals in self.rows:
            if a == alpha:
                return vals[p] if p < len(vals) else 0
        return 0

    def masks(self) -> list[int]:
        return [a for a, _ in self.rows]

    def max_index(self) -> int:
        """Largest p with a nonzero value; -1 for an empty table."""
        best = -1
        for _, vals in self.rows:
            for p, v in enumerate(vals):
                if v and p > best:
                    best = p
        return best


@dataclass(frozen=True)
class DualBassTable:
    """Dual Bass numbers pi_p(p_alpha, H_I^r(R)); zero rows omitted."""

    r: int
    rows: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_rows(cls, r: int, rows: dict[int, list[int]]) -> "DualBassTable":
        return cls(r, _canonical_rows(rows))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rows)

    def pi(self, alpha: int, p: int) -> int:
        for a, vals in self.rows:
            if a == alpha:
                return vals[p] if p < len(vals) else 0
        return 0


@dataclass(frozen=True)
class BettiTable:
    """Z^n-graded Betti numbers beta_{j,alpha} of a monomial ideal."""

    entries: tuple[tuple[int, int, int], ...]  # (j, alpha, count), sorted

    @classmethod
    def from_counts(cls, counts: dict[tuple[int, int], int]) -> "BettiTable":
        items = [
            (j, alpha, c) for (j, alpha), c in counts.items() if c
        ]
        items.sort(key=lambda t: (t[0], mask_key(t[1])))
        return cls(tuple(items))

    def count(self, j: int, alpha: int) -> int:
        for jj, aa, c in self.entries:
            if jj == j and aa == alpha:
                return c
        return 0

    def total(self, j: int) -> int:
        return sum(c for jj, _, c in self.entries if jj == j)

    def level_total(self, j: int, size: int) -> int:
        """Sum of beta_{j,alpha} over |alpha| = size."""
        return sum(
            c for jj, aa, c in self.entries if jj == j and aa.bit_count() == size
        )

    def max_position(self) -> int:
        return max((j for j, _, _ in self.entries), default=-1)

    def dominates(self, other: "BettiTable") -> bool:
        """Entrywise >= comparison."""
        keys = {(j, a) for j, a, _ in self.entries} | {
            (j, a) for j, a, _ in other.entries
        }
        return all(self.count(j, a) >= other.count(j, a) for j, a in keys)
