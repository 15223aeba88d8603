"""Shared fixtures: small categorical datasets used across the suite.

Each dataset is a contingency table between a row variable (v1) and a
column variable (v2).  The *tied* variants give v1 a group of classes
with equal cardinality, which forces complex coding and makes the
correlation sweep non-trivial.
"""

import numpy as np
import pytest

from catcorr import ContingencyTable


def records_of(table: ContingencyTable) -> list[tuple[str, str]]:
    return table.to_pairs()


def columns_of(table: ContingencyTable) -> tuple[list[str], list[str]]:
    pairs = table.to_pairs()
    return [p[0] for p in pairs], [p[1] for p in pairs]


@pytest.fixture
def table_3x2() -> ContingencyTable:
    """Distinct cardinalities everywhere: both variables real-codable."""
    return ContingencyTable(("A", "B", "C"), ("X", "Y"), [[3, 0], [2, 2], [0, 2]])


@pytest.fixture
def table_2x2_tied() -> ContingencyTable:
    """v1 has two classes of cardinality 4 (one group, m=2)."""
    return ContingencyTable(("A", "B"), ("X", "Y"), [[3, 1], [2, 2]])


@pytest.fixture
def table_4x2_tied3() -> ContingencyTable:
    """v1 has three classes of cardinality 5 plus one of cardinality 3."""
    return ContingencyTable(
        ("A", "B", "C", "D"), ("X", "Y"), [[1, 4], [2, 3], [3, 2], [1, 2]]
    )


@pytest.fixture
def table_5x4_tied4() -> ContingencyTable:
    """v1 has four classes of cardinality 90 plus one of cardinality 540."""
    return ContingencyTable(
        ("U", "W", "X", "Y", "Z"),
        ("A", "B", "C", "D"),
        [
            [45, 20, 13, 12],
            [15, 45, 20, 10],
            [5, 8, 50, 27],
            [8, 10, 17, 55],
            [10, 30, 50, 450],
        ],
    )


@pytest.fixture
def table_5x3_tied5() -> ContingencyTable:
    """All five v1 classes share cardinality 450 (one group, m=5)."""
    return ContingencyTable(
        ("A", "B", "C", "D", "E"),
        ("X", "Y", "Z"),
        [
            [200, 120, 130],
            [250, 100, 100],
            [50, 80, 320],
            [170, 130, 150],
            [300, 100, 50],
        ],
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20250808)
