"""Numeric coding of categorical variables.

Each distinct category ("class") of a variable is coded by a number whose
modulus reflects the class cardinality: the tied-rank value ``(n + 1) / 2``
by default, or plainly ``n`` with ``coding="cardinality"``.  Classes whose
cardinalities are pairwise distinct get real codes, which preserve a total
order (larger class, strictly larger code).  Classes that share a
cardinality would collide, so each group of m equal-cardinality classes is
spread over the m-th roots of unity: equal modulus, distinct phases.

There are m! ways to hand out the roots within a group.  A
:class:`PhaseAssignment` fixes one choice; :func:`enumerate_assignments`
produces all of them in a deterministic order (Heap's algorithm per group,
identity first, Cartesian product across groups) so that downstream sweeps
are reproducible.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .exceptions import DataError
from .validation import check_column, check_records


@dataclass(frozen=True)
class ClassSummary:
    """Per-class statistics of one categorical variable.

    Attributes
    ----------
    label : str
        Category name.
    cardinality : int
        Number of records in the class.
    rank : float
        Tied-rank value (cardinality + 1) / 2.
    group_id : int or None
        Identifier of the equal-cardinality group the class belongs to,
        or None when no other class shares its cardinality.
    """

    label: str
    cardinality: int
    rank: float
    group_id: int | None


def summarize_classes(column) -> list[ClassSummary]:
    """Summarize the classes of a categorical column, sorted by label.

    Every maximal set of two or more classes with equal cardinality forms
    a group; group ids are assigned by ascending cardinality.
    """
    values = check_column(column)
    cardinalities = Counter(values)
    group_cards = sorted(
        card for card, times in Counter(cardinalities.values()).items() if times >= 2
    )
    group_of = {card: gid for gid, card in enumerate(group_cards)}
    return [
        ClassSummary(
            label=label,
            cardinality=card,
            rank=(card + 1) / 2.0,
            group_id=group_of.get(card),
        )
        for label, card in sorted(cardinalities.items())
    ]


@dataclass(frozen=True)
class PhaseAssignment:
    """A choice of root-of-unity indices for grouped classes.

    ``phases`` maps each grouped class label to an index j; within a group
    of size m the indices form a permutation of 0..m-1 and select the root
    exp(2*pi*i*j/m).  Ungrouped classes never appear here.
    """

    phases: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "phases", tuple(sorted(self.phases)))
        labels = [l for l, _ in self.phases]
        if len(set(labels)) != len(labels):
            raise DataError("phase assignment repeats a class label")

    def as_dict(self) -> dict[str, int]:
        return dict(self.phases)

    def phase_index(self, label: str) -> int:
        for l, j in self.phases:
            if l == label:
                return j
        raise KeyError(label)

    def __len__(self) -> int:
        return len(self.phases)


def heap_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all permutations of 0..n-1 in Heap's-algorithm order.

    The identity comes first and each successive permutation differs from
    the previous one by a single transposition.  n = 0 yields one empty
    permutation.
    """
    if n < 0:
        raise DataError(f"permutation size must be >= 0, got {n}")
    a = list(range(n))
    yield tuple(a)
    c = [0] * n
    i = 0
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                a[0], a[i] = a[i], a[0]
            else:
                a[c[i]], a[i] = a[i], a[c[i]]
            yield tuple(a)
            c[i] += 1
            i = 0
        else:
            c[i] = 0
            i += 1


def _groups(summaries: Sequence[ClassSummary]) -> list[list[ClassSummary]]:
    """Equal-cardinality groups in group_id order, members sorted by label."""
    by_id: dict[int, list[ClassSummary]] = {}
    for s in summaries:
        if s.group_id is not None:
            by_id.setdefault(s.group_id, []).append(s)
    return [sorted(by_id[gid], key=lambda s: s.label) for gid in sorted(by_id)]


def identity_assignment(summaries: Sequence[ClassSummary]) -> PhaseAssignment:
    """The assignment that gives each group's sorted labels the indices
    0, 1, ... in order."""
    phases = []
    for members in _groups(summaries):
        phases.extend((s.label, j) for j, s in enumerate(members))
    return PhaseAssignment(tuple(phases))


def enumerate_assignments(summaries: Sequence[ClassSummary]) -> list[PhaseAssignment]:
    """All phase assignments, deterministically ordered.

    Per group of size m the m! index permutations are generated with
    Heap's algorithm (identity first); with several groups the Cartesian
    product is taken, last group varying fastest.  Without any group there
    is exactly one empty assignment.
    """
    groups = _groups(summaries)
    per_group = [
        [
            tuple((s.label, j) for s, j in zip(members, perm))
            for perm in heap_permutations(len(members))
        ]
        for members in groups
    ]
    return [
        PhaseAssignment(tuple(itertools.chain.from_iterable(combo)))
        for combo in itertools.product(*per_group)
    ]


def _check_assignment(
    assignment: PhaseAssignment, summaries: Sequence[ClassSummary]
) -> dict[str, tuple[int, int]]:
    """Validate an assignment against the group structure.

    Returns a map label -> (index j, group size m) for grouped labels.
    """
    given = assignment.as_dict()
    grouped: dict[str, tuple[int, int]] = {}
    for members in _groups(summaries):
        m = len(members)
        indices = []
        for s in members:
            if s.label not in given:
                raise DataError(
                    f"phase assignment is missing class {s.label!r} "
                    f"(group of {m} equal-cardinality classes)"
                )
            j = given.pop(s.label)
            if not 0 <= j < m:
                raise DataError(
                    f"phase index {j} for class {s.label!r} outside 0..{m - 1}"
                )
            indices.append(j)
            grouped[s.label] = (j, m)
        if len(set(indices)) != m:
            raise DataError(
                "phase assignment duplicates an index within a group: "
                f"{sorted(indices)}"
            )
    if given:
        raise DataError(
            f"phase assignment names classes outside any group: {sorted(given)}"
        )
    return grouped


class NominalCoder(BaseEstimator, TransformerMixin):
    """Code a categorical column as real or complex numbers.

    Parameters
    ----------
    coding : {"rank", "cardinality"}, default="rank"
        Modulus of the code for a class of n records: the tied rank
        (n + 1) / 2, or n itself.  For real-coded columns the two choices
        differ by one affine map of the whole column, so correlation
        results are identical; complex codes pick up a per-class phase
        factor instead, and sweep values differ slightly between the two.
    assignment : PhaseAssignment, optional
        Root-of-unity indices for the equal-cardinality groups.  Defaults
        to the identity assignment.  Must cover exactly the groups found
        during fit.
    allow_complex : bool, default=True
        If False, refuse columns that contain equal-cardinality classes
        instead of coding them with complex numbers.

    Attributes
    ----------
    summaries_ : list of ClassSummary
        Per-class statistics, sorted by label.
    class_map_ : dict of str to complex
        The learned code of every class.
    is_real_ : bool
        True when no class needed a complex code; ``transform`` then
        returns a float array.

    Notes
    -----
    Codes of distinct classes are always pairwise distinct: ungrouped
    classes have distinct moduli, grouped classes share a modulus but get
    distinct phases.  Real codes preserve the cardinality order.
    """

    def __init__(self, coding: str = "rank", assignment: PhaseAssignment | None = None,
                 allow_complex: bool = True):
        self.coding = coding
        self.assignment = assignment
        self.allow_complex = allow_complex

    def fit(self, X, y=None):
        if self.coding not in ("rank", "cardinality"):
            raise DataError(f"unknown coding {self.coding!r}, use 'rank' or 'cardinality'")
        summaries = summarize_classes(X)
        has_groups = any(s.group_id is not None for s in summaries)
        if has_groups and not self.allow_complex:
            tied = sorted(s.label for s in summaries if s.group_id is not None)
            raise DataError(
                "complex coding required: classes of equal cardinality present "
                f"({', '.join(tied)}) but allow_complex=False"
            )
        assignment = self.assignment
        if assignment is None:
            assignment = identity_assignment(summaries)
        grouped = _check_assignment(assignment, summaries)
        class_map: dict[str, complex] = {}
        for s in summaries:
            modulus = s.rank if self.coding == "rank" else float(s.cardinality)
            if s.label in grouped:
                j, m = grouped[s.label]
                class_map[s.label] = modulus * np.exp(2j * np.pi * j / m)
            else:
                class_map[s.label] = complex(modulus)
        self.summaries_ = summaries
        self.class_map_ = class_map
        self.is_real_ = not has_groups
        return self

    def transform(self, X) -> np.ndarray:
        if not hasattr(self, "class_map_"):
            raise NotFittedError("NominalCoder must be fitted before transform")
        values = check_column(X)
        unknown = sorted(set(values) - set(self.class_map_))
        if unknown:
            raise DataError(f"unknown categories not seen during fit: {unknown}")
        codes = np.array([self.class_map_[v] for v in values], dtype=np.complex128)
        if self.is_real_:
            return codes.real.copy()
        return codes


#: Record-removal policy used by :func:`break_ties`, also echoed in reports.
TIE_BREAK_POLICY = (
    "minimal number of removals; among minimal solutions prefer removing from "
    "lexicographically-last classes; within a class drop highest-index records"
)


@dataclass(frozen=True)
class TieBreakResult:
    """Outcome of :func:`break_ties`.

    Attributes
    ----------
    records : tuple of (str, str)
        The surviving records, in original order.
    removed : tuple of (int, (str, str))
        Original index and content of every removed record.
    variable : int
        Which pair position (0 or 1) was corrected.
    """

    records: tuple[tuple[str, str], ...]
    removed: tuple[tuple[int, tuple[str, str]], ...]
    variable: int

    @property
    def n_removed(self) -> int:
        return len(self.removed)


def _compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ways to split ``total`` into len(bounds) parts with part i <= bounds[i]."""
    if len(bounds) == 1:
        if total <= bounds[0]:
            yield (total,)
        return
    for first in range(min(total, bounds[0]) + 1):
        for rest in _compositions(total - first, bounds[1:]):
            yield (first,) + rest


def _minimal_removal_counts(labels: Sequence[str], cards: Sequence[int]) -> dict[str, int]:
    """Smallest per-class removal counts that leave all cardinalities distinct.

    Classes may be emptied entirely; an emptied class no longer exists and
    cannot tie.  Among all minimal-total solutions the deterministic winner
    maximizes removals from lexicographically-last classes.
    """
    for total in range(1, sum(cards) + 1):
        best_key = None
        best_combo = None
        for combo in _compositions(total, cards):
            kept = [c - d for c, d in zip(cards, combo) if c - d > 0]
            if len(set(kept)) == len(kept):
                key = tuple(reversed(combo))
                if best_key is None or key > best_key:
                    best_key = key
                    best_combo = combo
        if best_combo is not None:
            return dict(zip(labels, best_combo))
    raise DataError("no removal plan found")  # unreachable: removing all but one record works


def break_ties(records, variable: int = 0) -> TieBreakResult:
    """Remove the fewest records that rid one variable of equal-cardinality classes.

    The classes of the indicated variable are re-counted after the removal,
    so the result is guaranteed not to contain new ties.  The choice of
    records follows :data:`TIE_BREAK_POLICY` and is fully deterministic.

    Raises
    ------
    DataError
        If the variable has no equal-cardinality classes to begin with.
    """
    pairs = check_records(records)
    if variable not in (0, 1):
        raise DataError(f"variable index must be 0 or 1, got {variable}")
    column = [p[variable] for p in pairs]
    summaries = summarize_classes(column)
    if all(s.group_id is None for s in summaries):
        raise DataError("nothing to correct: no equal-cardinality classes")
    labels = [s.label for s in summaries]
    cards = [s.cardinality for s in summaries]
    removal = _minimal_removal_counts(labels, cards)
    drop: set[int] = set()
    for label, count in removal.items():
        if count == 0:
            continue
        indices = [i for i, v in enumerate(column) if v == label]
        drop.update(indices[-count:])
    kept = tuple(p for i, p in enumerate(pairs) if i not in drop)
    removed = tuple((i, pairs[i]) for i in sorted(drop))
    return TieBreakResult(records=kept, removed=removed, variable=variable)
