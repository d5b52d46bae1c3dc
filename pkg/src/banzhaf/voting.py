"""Weighted yes-no voting systems and their structural analysis.

A system is a quota plus one non-negative integer weight per voter: a bill
passes when the yes-voters' weights sum to the quota or beyond.  The rule is
therefore a threshold switching function, pinned down by ``n + 1`` integers
instead of ``2**n`` table entries, and scale-invariant: multiplying quota and
weights by the same positive constant changes nothing.

Quotas above the total weight are deliberately legal - the analyzer reports
the resulting constant-0 system as a finding rather than refusing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .truthtable import N_MAX, TruthTable


@dataclass(frozen=True)
class VotingSystem:
    """Quota-and-weights model ``(quota; w1, .., wn)`` with optional names."""

    quota: int
    weights: tuple[int, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        if not isinstance(self.quota, int) or self.quota < 1:
            raise ValueError(f"quota must be a positive integer, got {self.quota!r}")
        if not self.weights:
            raise ValueError("a voting system needs at least one voter")
        for w in self.weights:
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"weights must be non-negative integers, got {w!r}")
        if self.names is not None:
            if len(self.names) != len(self.weights):
                raise ValueError(
                    f"{len(self.names)} names for {len(self.weights)} voters"
                )
            if len(set(self.names)) != len(self.names):
                raise ValueError("voter names must be distinct")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def voter_names(self) -> tuple[str, ...]:
        """Declared names, or ``X1..Xn`` when none were given."""
        if self.names is not None:
            return self.names
        return tuple(f"X{i}" for i in range(1, self.n + 1))

    def scaled(self, c: int) -> "VotingSystem":
        """The same rule with quota and every weight multiplied by ``c``."""
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"scale factor must be a positive integer, got {c!r}")
        return VotingSystem(self.quota * c, tuple(w * c for w in self.weights), self.names)

    # -- realization ---------------------------------------------------------

    def to_table(self) -> TruthTable:
        """Dense truth table: bit j is 1 iff row j's yes-weights reach the quota.

        Built by splitting on voters in order and memoizing on the residual
        quota, so the cost is bounded by ``n * total_weight`` big-int
        concatenations rather than a loop over all rows.
        """
        if self.n > N_MAX:
            raise ValueError(f"arity {self.n} exceeds dense-table limit {N_MAX}")
        weights = self.weights
        n = self.n
        remaining = [0] * (n + 2)
        for i in range(n, 0, -1):
            remaining[i] = remaining[i + 1] + weights[i - 1]
        memo: dict[tuple[int, int], int] = {}

        def build(i: int, need: int) -> int:
            if need <= 0:
                return (1 << (1 << (n - i + 1))) - 1
            if need > remaining[i]:
                return 0
            key = (i, need)
            got = memo.get(key)
            if got is None:
                half = 1 << (n - i)
                got = (build(i + 1, need - weights[i - 1]) << half) | build(i + 1, need)
                memo[key] = got
            return got

        return TruthTable(n, build(1, self.quota))

    # -- structural findings ---------------------------------------------------

    def dummies(self) -> frozenset[int]:
        """1-based indices of voters the outcome never depends on."""
        table = self.to_table()
        return frozenset(i for i in range(1, self.n + 1) if table.is_vacuous_in(i))

    def symmetry_classes(self) -> "SymmetryClasses":
        """Partition voters by interchangeability of their votes.

        Equal weights certify a pair as interchangeable outright; unequal
        weights fall back to the exact transposition test on the dense table,
        which also catches functionally symmetric voters whose weights differ.
        """
        table = self.to_table()
        groups: list[list[int]] = []
        for i in range(1, self.n + 1):
            for group in groups:
                rep = group[0]
                if self.weights[i - 1] == self.weights[rep - 1] or table.is_symmetric_in(
                    i, rep
                ):
                    group.append(i)
                    break
            else:
                groups.append([i])
        return SymmetryClasses(tuple(tuple(g) for g in groups))


@dataclass(frozen=True)
class SymmetryClasses:
    """Partition of voter indices into interchangeability classes."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "classes", tuple(tuple(sorted(g)) for g in self.classes)
        )
        seen: set[int] = set()
        for group in self.classes:
            if not group:
                raise ValueError("empty symmetry class")
            if seen & set(group):
                raise ValueError("symmetry classes must be disjoint")
            seen.update(group)
        if seen and seen != set(range(1, max(seen) + 1)):
            raise ValueError("symmetry classes must cover voters 1..n")

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(group[0] for group in self.classes)

    def class_of(self, i: int) -> tuple[int, ...]:
        for group in self.classes:
            if i in group:
                return group
        raise ValueError(f"voter {i} not covered by the partition")

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def check_scale_invariance(system: VotingSystem, c: int) -> bool:
    """Property hook: the table is unchanged when quota and weights scale by c."""
    return system.to_table() == system.scaled(c).to_table()
