"""Good index triples indexing the star relators."""

from itertools import product
from typing import NamedTuple

from errors import InvalidParameterError


class GoodTriple(NamedTuple):
    i: int
    j: int
    k: int


def is_good(i: int, j: int, k: int) -> bool:
    """Cyclically ordered (i ≤ j ≤ k up to rotation) and not constant."""
    if i == j == k:
        return False
    return i <= j <= k or j <= k <= i or k <= i <= j


def good_triples(n: int) -> list[GoodTriple]:
    """
    All good triples in {1..n}^3, in lexicographic order.

    Raises:
        InvalidParameterError: if n < 1.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"good_triples requires n ≥ 1, got {n!r}")
    return [GoodTriple(*t) for t in product(range(1, n + 1), repeat=3) if is_good(*t)]
