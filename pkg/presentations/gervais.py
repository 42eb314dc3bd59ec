"""
Lifted Gervais presentation of the central extension for g ≥ 3, r ≥ 1.

Generators: b, b1..b_{g-1}, a1..a_n, c{i}_{j} for ordered pairs i ≠ j,
and mu, where n = 2g + r - 2. Relators:
- handles       c_{2i,2i∓1} = c_{2i±1,2i}, both signs, 1 ≤ i ≤ g-1
- braids        one braid/commutation relator per pair meeting at most once
- stars         c_ij c_jk c_ki = (a_i a_j a_k b)^3 mu^-1 per good triple
- centrality    [x, mu] for every twist generator

Curve model: the a_k run around a circle of n arcs; c_{i,j} encloses the
arcs i, i+1, …, j-1 (cyclically) and is disjoint from a_i and a_j.
"""

import logging
import re

import config
from errors import InvalidParameterError, NoClassError
from processor import Relator

from .base import BasePresentationBuilder, Intersection, Presentation
from .triples import good_triples

logger = logging.getLogger(__name__)

_A_RE = re.compile(r"a(\d+)\Z")
_B_RE = re.compile(r"b(\d+)\Z")
_C_RE = re.compile(r"c(\d+)_(\d+)\Z")


def c_name(i: int, j: int) -> str:
    return f"c{i}_{j}"


class GervaisLiftBuilder(BasePresentationBuilder):
    """Builder for the lifted Gervais presentation."""

    FAMILY_NAME = config.FAMILY_GERVAIS

    def __init__(self, g: int, r: int = 1, table_overrides=None):
        super().__init__(g, r, table_overrides)
        self.n = 2 * g + r - 2

    @staticmethod
    def _validate_parameters(g: int, r: int):
        if not isinstance(g, int) or not isinstance(r, int) or g < 3 or r < 1:
            raise InvalidParameterError(f"gervais requires g ≥ 3, r ≥ 1 (got g={g}, r={r})")

    # ── Names ──

    def generator_names(self) -> list[str]:
        n = 2 * self.g + self.r - 2
        names = ["b"] + [f"b{l}" for l in range(1, self.g)] + [f"a{k}" for k in range(1, n + 1)]
        names += [c_name(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        return names + [config.MU]

    def _parse(self, name: str) -> tuple[str, tuple[int, ...]]:
        """Split a twist generator name into its kind and indices."""
        if name not in self.alphabet or name == config.MU:
            self._no_class(name)
        if name == "b":
            return "b", ()
        for kind, pattern in (("a", _A_RE), ("bl", _B_RE), ("c", _C_RE)):
            m = pattern.match(name)
            if m:
                return kind, tuple(int(x) for x in m.groups())
        raise NoClassError(name)

    def arc_interval(self, i: int, j: int) -> frozenset[int]:
        """Arcs enclosed by c_{i,j}: i, i+1, …, j-1, read cyclically in 1..n."""
        arcs, k = set(), i
        while k != j:
            arcs.add(k)
            k = k % self.n + 1
        return frozenset(arcs)

    # ── Homology ──

    def homology_class(self, name: str) -> tuple[int, ...]:
        kind, idx = self._parse(name)
        g = self.g
        v = [0] * (2 * g)
        if kind == "b":
            v[g] = 1
        elif kind == "bl":
            v[g + idx[0]] = 1
        elif kind == "a":
            v[:] = self._a_class(idx[0])
        else:
            ai, aj = self._a_class(idx[0]), self._a_class(idx[1])
            v = [p - q for p, q in zip(ai, aj)]
        return tuple(v)

    def _a_class(self, k: int) -> list[int]:
        """a_k = x1, minus x_{k/2+1} when k is even and k ≤ 2g-2."""
        v = [0] * (2 * self.g)
        v[0] = 1
        if k % 2 == 0 and k <= 2 * self.g - 2:
            v[k // 2] -= 1
        return v

    # ── Intersections ──

    def intersection(self, x: str, y: str) -> Intersection:
        (kx, ix), (ky, iy) = sorted((self._parse(x), self._parse(y)))
        zero, one, many = Intersection.ZERO, Intersection.ONE, Intersection.MANY

        if kx == "a" and ky == "b":
            return one
        if kx == "a" and ky == "bl":
            return one if ix[0] == 2 * iy[0] else zero
        if kx == "a" and ky == "c":
            k, (i, j) = ix[0], iy
            return many if k != i and k in self.arc_interval(i, j) else zero
        if kx == "bl" and ky == "c":
            return one if 2 * ix[0] in iy else zero
        if kx == "c" and ky == "c":
            s, t = self.arc_interval(*ix), self.arc_interval(*iy)
            return zero if s <= t or t <= s or not (s & t) else many
        # a-a, b-bl, b-c, bl-bl
        return zero

    # ── Build ──

    def _c(self, i: int, j: int):
        if i == j:
            return self.alphabet.identity()
        return self.alphabet.gen(c_name(i, j))

    def handle_relators(self) -> list[Relator]:
        """
        Two handle equations per 1 ≤ i ≤ g-1, one for each sign choice:
            [i,-]   c_{2i,2i-1} = c_{2i+1,2i}
            [i,+]   c_{2i,2i+1} = c_{2i-1,2i}
        """
        relators = []
        for i in range(1, self.g):
            relators.append(Relator(f"thm4.i[{i},-]", self._c(2 * i, 2 * i - 1) * ~self._c(2 * i + 1, 2 * i)))
            relators.append(Relator(f"thm4.i[{i},+]", self._c(2 * i, 2 * i + 1) * ~self._c(2 * i - 1, 2 * i)))
        return relators

    def star_relators(self) -> list[Relator]:
        a = self.alphabet
        mu = a.gen(config.MU)
        relators = []
        for i, j, k in good_triples(self.n):
            lhs = self._c(i, j) * self._c(j, k) * self._c(k, i)
            rhs = a.word(f"a{i}", f"a{j}", f"a{k}", "b") ** 3 * ~mu
            relators.append(Relator(f"thm4.iii[{i},{j},{k}]", lhs * ~rhs))
        return relators

    def build(self) -> Presentation:
        relators = self.handle_relators()
        relators += self.pair_relators(self.table(), "thm4.ii", "thm4.ii")
        relators += self.star_relators()
        relators += self.centrality_relators("thm4.iv")

        notes = [f"n = 2g + r - 2 = {self.n}", "c_{l,l} is read as the identity in star relators"]
        return self.finish(relators, notes)


def build_gervais_lift(g: int, r: int = 1) -> Presentation:
    """Lifted Gervais presentation for g ≥ 3 and r ≥ 1."""
    return GervaisLiftBuilder(g, r).build()
