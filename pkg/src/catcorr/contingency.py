"""Contingency tables and the chi-square association test.

A :class:`ContingencyTable` cross-tabulates two categorical variables.
Rows belong to the first variable, columns to the second.  Labels are kept
in sorted order so that every derived quantity (record reconstruction,
report output) is deterministic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DataError, LowExpectedFrequencyWarning, NumericalError
from .special import regularized_gamma_q
from .validation import check_alpha, check_records


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """Observed frequencies of pairs of categories.

    Parameters
    ----------
    row_labels, col_labels : sequence of str
        Category names of the first and second variable.  Stored sorted;
        counts are reordered accordingly.
    counts : array-like of int, shape (n_rows, n_cols)
        Observed frequency of each (row, column) pair.  Entries must be
        non-negative integers.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        rows = tuple(str(l) for l in self.row_labels)
        cols = tuple(str(l) for l in self.col_labels)
        if not rows or not cols:
            raise DataError("a contingency table needs at least one row and one column")
        if any(l == "" for l in rows + cols):
            raise DataError("category labels must be non-empty strings")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise DataError("category labels must be unique per variable")
        counts = np.asarray(self.counts)
        if counts.shape != (len(rows), len(cols)):
            raise DataError(
                f"counts shape {counts.shape} does not match "
                f"{len(rows)} row and {len(cols)} column labels"
            )
        if not np.issubdtype(counts.dtype, np.integer):
            rounded = np.rint(np.asarray(counts, dtype=float))
            if not np.array_equal(rounded, np.asarray(counts, dtype=float)):
                raise DataError("counts must be integers")
            counts = rounded.astype(np.int64)
        counts = counts.astype(np.int64)
        if (counts < 0).any():
            raise DataError("counts must be non-negative")
        # canonical sorted label order
        ri = np.argsort(np.array(rows, dtype=object))
        ci = np.argsort(np.array(cols, dtype=object))
        counts = counts[np.ix_(ri, ci)].copy()
        counts.setflags(write=False)
        object.__setattr__(self, "row_labels", tuple(rows[i] for i in ri))
        object.__setattr__(self, "col_labels", tuple(cols[i] for i in ci))
        object.__setattr__(self, "counts", counts)

    @property
    def n_rows(self) -> int:
        return len(self.row_labels)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    @property
    def total(self) -> int:
        """Total number of observations."""
        return int(self.counts.sum())

    @property
    def row_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_totals(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    def to_pairs(self) -> list[tuple[str, str]]:
        """Reconstruct the individual records, row-major in label order.

        Each (row, column) pair is emitted ``counts[i, j]`` times.  A class
        with zero records leaves no trace in the pairs, so
        ``crosstab(table.to_pairs()) == table`` exactly when every row and
        column has at least one observation.
        """
        pairs = []
        for i, r in enumerate(self.row_labels):
            for j, c in enumerate(self.col_labels):
                pairs.extend([(r, c)] * int(self.counts[i, j]))
        return pairs

    def __eq__(self, other):
        if not isinstance(other, ContingencyTable):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and np.array_equal(self.counts, other.counts)
        )

    __hash__ = None


def crosstab(records) -> ContingencyTable:
    """Build a contingency table from (category, category) record pairs.

    Labels are sorted lexicographically in the result.

    Parameters
    ----------
    records : iterable of (str, str)
        One pair per observation; the first element belongs to the row
        variable, the second to the column variable.
    """
    pairs = check_records(records)
    rows = sorted({a for a, _ in pairs})
    cols = sorted({b for _, b in pairs})
    ri = {l: i for i, l in enumerate(rows)}
    ci = {l: j for j, l in enumerate(cols)}
    counts = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for a, b in pairs:
        counts[ri[a], ci[b]] += 1
    return ContingencyTable(tuple(rows), tuple(cols), counts)


def expected_frequencies(table: ContingencyTable) -> np.ndarray:
    """Expected cell frequencies under independence of the two variables.

    Cell (i, j) gets ``row_total_i * col_total_j / total``.  Row and
    column sums of the result match the observed margins exactly (up to
    rounding), which is what makes the chi-square statistic comparable.

    Raises
    ------
    DataError
        If the table is empty (total count zero).
    """
    n = table.total
    if n == 0:
        raise DataError("empty table: total count is zero")
    return np.outer(table.row_totals, table.col_totals) / float(n)


@dataclass(frozen=True)
class ChiSquareResult:
    """Outcome of the chi-square independence test.

    Attributes
    ----------
    statistic : float
        The chi-square statistic, sum of (observed - expected)^2 / expected.
    df : int
        Degrees of freedom, (n_rows - 1) * (n_cols - 1).
    p_value : float
        Upper-tail probability of the statistic under the null hypothesis
        of independence.
    v_cramer_squared : float
        Squared Cramer V association strength, in [0, 1].
    """

    statistic: float
    df: int
    p_value: float
    v_cramer_squared: float

    def rejects(self, alpha: float = 0.1) -> bool:
        """Whether the independence hypothesis is rejected at level alpha."""
        return self.p_value < check_alpha(alpha)


def chi_square_survival(statistic: float, df: int) -> float:
    """Upper-tail probability of a chi-square variable with ``df`` degrees
    of freedom: the integral of its density from ``statistic`` to infinity."""
    if df < 1:
        raise NumericalError(f"degrees of freedom must be >= 1, got {df}")
    if statistic < 0:
        raise NumericalError(f"chi-square statistic must be >= 0, got {statistic}")
    return regularized_gamma_q(df / 2.0, statistic / 2.0)


def chi_square_test(table: ContingencyTable) -> ChiSquareResult:
    """Chi-square test of independence on a contingency table.

    Warns with :class:`LowExpectedFrequencyWarning` when any expected
    frequency falls below 5 (the usual validity rule of thumb); the test
    is still computed.  Tables with a single row or column have zero
    degrees of freedom; for them the statistic is identically 0 and the
    result is reported as (0, p=1, V^2=0) without a tail integral.

    Raises
    ------
    NumericalError
        If any row or column sum is zero, which would put a zero expected
        frequency in a divisor.
    """
    if (table.row_totals == 0).any() or (table.col_totals == 0).any():
        raise NumericalError(
            "degenerate margin: a row or column of the table sums to zero"
        )
    expected = expected_frequencies(table)
    low = [
        (table.row_labels[i], table.col_labels[j], float(expected[i, j]))
        for i, j in zip(*np.nonzero(expected < 5.0))
    ]
    if low:
        cells = ", ".join(f"({r},{c})={v:.3f}" for r, c, v in low)
        warnings.warn(
            f"expected frequencies below 5 in {len(low)} cell(s): {cells}",
            LowExpectedFrequencyWarning,
            stacklevel=2,
        )
    statistic = float(((table.counts - expected) ** 2 / expected).sum())
    df = (table.n_rows - 1) * (table.n_cols - 1)
    if df == 0:
        return ChiSquareResult(statistic=0.0, df=0, p_value=1.0, v_cramer_squared=0.0)
    p_value = chi_square_survival(statistic, df)
    v2 = statistic / (table.total * min(table.n_rows - 1, table.n_cols - 1))
    return ChiSquareResult(
        statistic=statistic, df=df, p_value=p_value, v_cramer_squared=v2
    )
