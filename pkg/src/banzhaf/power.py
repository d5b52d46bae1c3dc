"""The Banzhaf power engine: swing counts, normalization, and cross-checks.

A voter's total Banzhaf power (TBP) is the number of ways that voter can
swing the outcome: winning vote configurations that turn losing when the
voter alone defects.  For a monotone rule this is exactly the weight of the
Boolean difference of the rule with respect to that voter, which the main
path computes on the dense truth table.  Two independent oracles recompute
the same number from the quota-and-weights description alone - one by direct
enumeration of all vote configurations, one by subset-sum counting over the
other voters - and :func:`analyze` treats any disagreement as a hard error.

Swing-counting convention: each dummy voter doubles every raw swing count,
because an irrelevant vote can always be flipped without changing the
scenario.  All counts reported here therefore collapse configurations that
differ only in dummies' votes to a single swing, i.e. they are taken in the
subsystem of voters that can actually influence the outcome.  Normalized
powers are unaffected by the convention, and a count divided by
``2**(essential voters - 1)`` is still the voter's decisiveness probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .truthtable import N_MAX, TruthTable
from .voting import SymmetryClasses, VotingSystem

#: analyze() runs the oracle cross-check by default up to this arity.
ORACLE_AUTO_LIMIT = 12


class OracleDisagreementError(RuntimeError):
    """The derivative path and the oracles returned different swing counts.

    This always signals an implementation bug, never a property of the
    analyzed system, so it is raised rather than reported.
    """


class NoDecisiveVoterError(ValueError):
    """Normalization was requested for an all-zero power vector."""


@dataclass(frozen=True)
class StructuralChecks:
    """Structural findings about the rule as a switching function."""

    monotone: bool
    causal: bool
    constant: bool


@dataclass(frozen=True)
class PowerReport:
    """Full power analysis of one voting system.

    `ntbp` is empty when every voter is a dummy (constant rule); otherwise it
    holds exact reduced fractions summing to 1.
    """

    tbp: tuple[int, ...]
    ntbp: tuple[Fraction, ...]
    dummies: frozenset[int]
    classes: SymmetryClasses
    checks: StructuralChecks
    oracle_verified: bool


# -- derivative-weight path ----------------------------------------------------


def tbp(table: TruthTable, i: int) -> int:
    """Swing count of voter ``i`` from the dense table of the rule.

    Weight of the Boolean difference about ``X_i``, divided by ``2**d`` for
    the ``d`` dummy variables among the others (see the module docstring for
    the convention).
    """
    raw = table.boolean_difference(i).weight()
    if raw == 0:
        return 0
    vacuous = sum(1 for j in range(1, table.n + 1) if j != i and table.is_vacuous_in(j))
    return raw >> vacuous


def tbp_all(table: TruthTable, classes: Optional[SymmetryClasses] = None) -> tuple[int, ...]:
    """Swing counts for all voters, one derivative per symmetry class.

    With a valid partition only class representatives are differentiated and
    the value is broadcast, which is exactly equivalent to differentiating
    every variable.  Without one, every variable is processed.
    """
    if classes is None:
        return tuple(tbp(table, i) for i in range(1, table.n + 1))
    values: dict[int, int] = {}
    for group in classes:
        value = tbp(table, group[0])
        for i in group:
            values[i] = value
    if len(values) != table.n:
        raise ValueError("symmetry classes do not cover all voters")
    return tuple(values[i] for i in range(1, table.n + 1))


def normalize(tbp_values: Sequence[int]) -> tuple[Fraction, ...]:
    """Divide each swing count by their sum, as exact reduced fractions."""
    total = sum(tbp_values)
    if total == 0:
        raise NoDecisiveVoterError(
            "no decisive voter: every Banzhaf power is zero, nothing to normalize by"
        )
    return tuple(Fraction(v, total) for v in tbp_values)


# -- enumeration oracle ---------------------------------------------------------


@lru_cache(maxsize=None)
def _enum_swing_counts(quota: int, weights: tuple[int, ...]) -> tuple[int, ...]:
    """Raw per-voter swing counts by walking all 2**n vote configurations.

    Pure threshold arithmetic on weighted sums; shares nothing with the
    truth-table machinery.
    """
    n = len(weights)
    size = 1 << n
    sums = [0] * size
    for j in range(1, size):
        low = j & -j
        sums[j] = sums[j ^ low] + weights[n - low.bit_length()]
    counts = [0] * n
    for j in range(size):
        s = sums[j]
        if s >= quota:
            m = j
            while m:
                low = m & -m
                m ^= low
                k = n - low.bit_length()
                if s - weights[k] < quota:
                    counts[k] += 1
    return tuple(counts)


def tbp_oracle_enum(system: VotingSystem, i: int) -> int:
    """Independent swing count for voter ``i`` by exhaustive enumeration."""
    if system.n > N_MAX:
        raise ValueError(f"enumeration oracle limited to {N_MAX} voters, got {system.n}")
    if not 1 <= i <= system.n:
        raise ValueError(f"voter index {i} out of range 1..{system.n}")
    counts = _enum_swing_counts(system.quota, system.weights)
    raw = counts[i - 1]
    if raw == 0:
        return 0
    return raw >> sum(1 for c in counts if c == 0)


# -- subset-sum oracle -----------------------------------------------------------


@lru_cache(maxsize=None)
def _dp_swing_counts(quota: int, weights: tuple[int, ...]) -> tuple[int, ...]:
    """Raw per-voter swing counts by subset-sum counting, in exact integers.

    One forward pass counts the subsets of all voters at each weight sum;
    each voter is then un-inserted to get the distribution over the others,
    and the swings are the subsets landing in ``[quota - w, quota - 1]``.
    Costs O(n * total_weight) arithmetic operations, so it also serves
    systems too large for a dense table.
    """
    total = sum(weights)
    full = [0] * (total + 1)
    full[0] = 1
    for w in weights:
        for s in range(total - w, -1, -1):
            full[s + w] += full[s]
    counts = []
    for w in weights:
        if w == 0:
            counts.append(0)  # the swing interval [quota, quota-1] is empty
            continue
        others = [0] * (total + 1)
        for s in range(total + 1):
            others[s] = full[s] - (others[s - w] if s >= w else 0)
        lo, hi = max(0, quota - w), min(quota - 1, total)
        counts.append(sum(others[lo : hi + 1]))
    return tuple(counts)


def tbp_oracle_dp(system: VotingSystem, i: int) -> int:
    """Independent swing count for voter ``i`` by subset-sum counting."""
    if not 1 <= i <= system.n:
        raise ValueError(f"voter index {i} out of range 1..{system.n}")
    counts = _dp_swing_counts(system.quota, system.weights)
    raw = counts[i - 1]
    if raw == 0:
        return 0
    return raw >> sum(1 for c in counts if c == 0)


# -- full analysis ------------------------------------------------------------


def analyze(system: VotingSystem, verify: Optional[bool] = None) -> PowerReport:
    """Analyze a voting system: powers, dummies, symmetry classes, findings.

    Up to :data:`~banzhaf.truthtable.N_MAX` voters the switching-algebraic
    path is used and, by default for up to :data:`ORACLE_AUTO_LIMIT` voters,
    cross-checked against both oracles (`verify` overrides the default either
    way).  Beyond ``N_MAX`` the subset-sum oracle alone carries the analysis,
    symmetry classes fall back to the equal-weight certificate, and no
    cross-check is possible.
    """
    n = system.n
    if n > N_MAX:
        if verify:
            raise ValueError(f"cross-check needs a dense table, so at most {N_MAX} voters")
        return _analyze_dp_only(system)

    table = system.to_table()
    classes = system.symmetry_classes()
    dummies = frozenset(i for i in range(1, n + 1) if table.is_vacuous_in(i))
    tbp_vec = tbp_all(table, classes)
    checks = StructuralChecks(
        monotone=table.is_monotone(),
        causal=table.is_causal(),
        constant=table.weight() in (0, 1 << n),
    )

    do_verify = verify if verify is not None else n <= ORACLE_AUTO_LIMIT
    if do_verify:
        enum_vec = tuple(tbp_oracle_enum(system, i) for i in range(1, n + 1))
        dp_vec = tuple(tbp_oracle_dp(system, i) for i in range(1, n + 1))
        if not (tbp_vec == enum_vec == dp_vec):
            raise OracleDisagreementError(
                f"swing counts disagree for {system}: "
                f"derivative={tbp_vec} enumeration={enum_vec} subset-sum={dp_vec}"
            )

    ntbp = normalize(tbp_vec) if any(tbp_vec) else ()
    return PowerReport(tbp_vec, ntbp, dummies, classes, checks, bool(do_verify))


def _analyze_dp_only(system: VotingSystem) -> PowerReport:
    n = system.n
    counts = _dp_swing_counts(system.quota, system.weights)
    zeros = sum(1 for c in counts if c == 0)
    tbp_vec = tuple(0 if c == 0 else c >> zeros for c in counts)
    dummies = frozenset(i for i in range(1, n + 1) if counts[i - 1] == 0)

    groups: dict[int, list[int]] = {}
    for i, w in enumerate(system.weights, 1):
        groups.setdefault(w, []).append(i)
    ordered = sorted(groups.values(), key=lambda g: g[0])
    classes = SymmetryClasses(tuple(tuple(g) for g in ordered))

    total = system.total_weight
    checks = StructuralChecks(
        monotone=True,  # non-negative weights can only help a bill
        causal=system.quota <= total,
        constant=system.quota > total,
    )
    ntbp = normalize(tbp_vec) if any(tbp_vec) else ()
    return PowerReport(tbp_vec, ntbp, dummies, classes, checks, False)
