"""
First homology of a closed genus-g surface in the standard symplectic basis
(x_1..x_g, y_1..y_g) with <x_i, y_i> = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from errors import DimensionError


@dataclass(frozen=True)
class HomologyClass:
    """Integer vector in the basis (x_1..x_g, y_1..y_g)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) % 2:
            raise DimensionError(f"Homology class needs an even length, got {len(self.coords)}")

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-c for c in self.coords))


def coords_of(v) -> tuple[int, ...]:
    return v.coords if isinstance(v, HomologyClass) else tuple(int(c) for c in v)


def symplectic_form(g: int) -> np.ndarray:
    """J with <u, v> = u^T J v."""
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for i in range(g):
        J[i, g + i] = 1
        J[g + i, i] = -1
    return J


def symplectic_pairing(u, v) -> int:
    """<u, v> = Σ u_i v_{g+i} - u_{g+i} v_i."""
    u, v = coords_of(u), coords_of(v)
    if len(u) != len(v) or len(u) % 2:
        raise DimensionError(f"Cannot pair vectors of lengths {len(u)} and {len(v)}")
    g = len(u) // 2
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))
