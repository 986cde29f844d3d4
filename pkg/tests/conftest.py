"""Shared fixtures: cached oracles, golden matrices, seeded tree corpora."""

from __future__ import annotations

import functools
import random
from fractions import Fraction

import numpy as np
import pytest

from gearpinv.circulant import circ
from gearpinv.edm import gram_from_edm
from gearpinv.graphs import gear_distance_closed
from gearpinv.pinv import rational_pinv
from gearpinv.rational import rational
from gearpinv.trees import WeightedTree


@functools.cache
def _distance_pinv(n: int):
    return rational_pinv(gear_distance_closed(n).astype(object))


@functools.cache
def _gram_pinv(n: int):
    gram = gram_from_edm(gear_distance_closed(n).astype(object))
    return rational_pinv(gram)


@pytest.fixture(scope="session")
def gear_oracle():
    """Exact pseudoinverse of the gear distance matrix, cached per n."""
    return _distance_pinv


@pytest.fixture(scope="session")
def gram_oracle():
    """Exact pseudoinverse of -1/2 P D P for the gear graph, cached per n."""
    return _gram_pinv


def _attachment_edges(m: int, rng: random.Random) -> list[tuple[int, int]]:
    # Uniform random attachment: vertex v joins one uniformly chosen
    # earlier vertex, which yields every labeled tree shape on small m.
    return [(rng.randint(1, v - 1), v) for v in range(2, m + 1)]


def random_unit_tree(seed: int, max_vertices: int = 12) -> WeightedTree:
    rng = random.Random(seed)
    m = rng.randint(2, max_vertices)
    edges = _attachment_edges(m, rng)
    return WeightedTree(m, tuple((a, b, Fraction(1)) for a, b in edges))


def random_weighted_tree(seed: int, max_vertices: int = 10) -> WeightedTree:
    rng = random.Random(seed)
    m = rng.randint(2, max_vertices)
    edges = _attachment_edges(m, rng)
    pool = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]
    return WeightedTree(m, tuple((a, b, rng.choice(pool)) for a, b in edges))


@pytest.fixture(scope="session")
def unit_tree_corpus() -> list[WeightedTree]:
    return [random_unit_tree(seed) for seed in range(20)]


@pytest.fixture(scope="session")
def weighted_tree_corpus() -> list[WeightedTree]:
    return [random_weighted_tree(seed) for seed in range(100, 120)]


def assemble_blocks(hub, hub_rim, hub_sub, rim_rim, rim_sub, sub_rim, sub_sub):
    """Rational matrix from a hub scalar, two hub rows, and circulant rows.

    The two mixed blocks are given independently and must be transposes
    of each other, which doubles as a consistency check on the reference
    values being assembled.
    """
    size = len(rim_rim)
    column = np.full((size, 1), rational(1), dtype=object)
    top = np.hstack(
        [
            np.array([[rational(hub)]], dtype=object),
            rational(hub_rim) * column.T,
            rational(hub_sub) * column.T,
        ]
    )
    mixed = circ(rim_sub)
    mixed_back = circ(sub_rim)
    assert (mixed.T == mixed_back).all(), "mixed blocks are not transposes"
    middle = np.hstack([rational(hub_rim) * column, circ(rim_rim), mixed])
    bottom = np.hstack([rational(hub_sub) * column, mixed_back, circ(sub_sub)])
    return np.vstack([top, middle, bottom])


@pytest.fixture(scope="session")
def golden_laplacian_5():
    return assemble_blocks(
        "4/9",
        "1/9",
        "-2/9",
        ["1/3", "-2/9", "2/9", "-2/9"],
        ["0", "-1/9", "-1/9", "0"],
        ["0", "0", "-1/9", "-1/9"],
        ["2/9", "1/9", "0", "1/9"],
    )


@pytest.fixture(scope="session")
def golden_laplacian_6():
    return assemble_blocks(
        "9/20",
        "3/25",
        "-21/100",
        ["34/125", "-16/125", "9/125", "9/125", "-16/125"],
        ["3/125", "-22/125", "3/125", "-22/125", "3/125"],
        ["3/125", "3/125", "-22/125", "3/125", "-22/125"],
        ["129/500", "29/500", "29/500", "29/500", "29/500"],
    )


@pytest.fixture(scope="session")
def golden_pinv_5():
    return assemble_blocks(
        "-35/162",
        "-19/324",
        "8/81",
        ["-107/648", "73/648", "-71/648", "73/648"],
        ["1/162", "5/81", "5/81", "1/162"],
        ["1/162", "1/162", "5/81", "5/81"],
        ["-7/81", "-5/162", "2/81", "-5/162"],
    )


@pytest.fixture(scope="session")
def golden_pinv_6():
    return assemble_blocks(
        "-1/5",
        "-3/50",
        "2/25",
        ["-17/125", "8/125", "-9/250", "-9/250", "8/125"],
        ["-3/250", "11/125", "-3/250", "11/125", "-3/250"],
        ["-3/250", "-3/250", "11/125", "-3/250", "11/125"],
        ["-13/125", "-1/250", "-1/250", "-1/250", "-1/250"],
    )
