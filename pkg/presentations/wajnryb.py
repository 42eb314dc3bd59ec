"""
Lifted Wajnryb presentation of the central extension for g ≥ 3, r ∈ {0, 1}:
- Generators c0..c_{2g+1} and the central generator mu
- Braid / commutation relators from the chain intersection table
- 3-chain relator with its central correction, centrality of mu
- Lantern relator with b1, b2, b3 expanded
- For closed surfaces, the commutator of c_{2g+1} with c_{2g}..c1 c1..c_{2g}

The curves: c1, c2, …, c_{2g+1} form a chain and c0 meets c4 only.
"""

import logging

import config
from errors import InvalidParameterError, UnsupportedGenusError
from processor import Relator
from words import Alphabet, Word

from .base import BasePresentationBuilder, Intersection, Presentation

logger = logging.getLogger(__name__)


def chain_homology_class(name: str, g: int) -> tuple[int, ...] | None:
    """
    Class of the chain curve c_i (and c0) in H_1 of the genus-g surface.

    c1 = y1, c_{2i} = x_i, c_{2i+1} = y_{i+1} - y_i, c_{2g+1} = y_g, c0 = y2.
    Returns None for names outside c0..c_{2g+1}.
    """
    if not (name.startswith("c") and name[1:].isdigit()):
        return None
    i = int(name[1:])
    v = [0] * (2 * g)

    def y(k):
        return g + k - 1

    if i == 0:
        v[y(2)] = 1
    elif i == 1:
        v[y(1)] = 1
    elif i == 2 * g + 1:
        v[y(g)] = 1
    elif 2 <= i <= 2 * g and i % 2 == 0:
        v[i // 2 - 1] = 1
    elif 3 <= i <= 2 * g - 1:
        v[y((i - 1) // 2 + 1)] = 1
        v[y((i - 1) // 2)] = -1
    else:
        return None
    return tuple(v)


def chain_intersection(x: str, y: str) -> Intersection:
    """Adjacent chain curves meet once, c0 meets c4 once, everything else is disjoint."""
    i, j = sorted((int(x[1:]), int(y[1:])))
    if i >= 1 and j - i == 1:
        return Intersection.ONE
    if (i, j) == (0, 4):
        return Intersection.ONE
    return Intersection.ZERO


def lantern_macros(alphabet: Alphabet, b3_variant: str = config.DEFAULT_B3_VARIANT) -> dict[str, Word]:
    """
    The words b0..b3 (conjugates of c0 and b1) used by the 3-chain and
    lantern relators.

    Args:
        alphabet: an alphabet containing c0..c6
        b3_variant: key of config.B3_CONJUGATORS

    Returns:
        Mapping "b0".."b3" → expanded word.
    """
    if b3_variant not in config.B3_CONJUGATORS:
        raise InvalidParameterError(
            f"Unknown b3 variant {b3_variant!r}; choose from {sorted(config.B3_CONJUGATORS)}"
        )
    c0 = alphabet.gen("c0")
    parse = alphabet.parse

    b0 = c0.conjugate(parse("c4 c3 c2 c1 c1 c2 c3 c4"))
    b1 = c0.conjugate(parse("c4 c5 c3 c4"))
    b2 = b1.conjugate(parse("c2 c3 c1 c2"))
    b3 = c0.conjugate(parse(config.B3_CONJUGATORS[b3_variant], macros={"b1": b1}))
    return {"b0": b0, "b1": b1, "b2": b2, "b3": b3}


def hyperelliptic_word(alphabet: Alphabet, top: int) -> Word:
    """c_top c_{top-1} … c1 c1 c2 … c_top."""
    down = alphabet.word(*(f"c{i}" for i in range(top, 0, -1)))
    up = alphabet.word(*(f"c{i}" for i in range(1, top + 1)))
    return down * up


class WajnrybLiftBuilder(BasePresentationBuilder):
    """Builder for the lifted Wajnryb presentation."""

    FAMILY_NAME = config.FAMILY_WAJNRYB

    def __init__(self, g: int, r: int = 1, b3_variant: str = config.DEFAULT_B3_VARIANT, table_overrides=None):
        super().__init__(g, r, table_overrides)
        if b3_variant not in config.B3_CONJUGATORS:
            raise InvalidParameterError(
                f"Unknown b3 variant {b3_variant!r}; choose from {sorted(config.B3_CONJUGATORS)}"
            )
        self.b3_variant = b3_variant

    @staticmethod
    def _validate_parameters(g: int, r: int):
        if not isinstance(g, int) or g < 3:
            raise UnsupportedGenusError(
                f"wajnryb requires g ≥ 3, r ∈ {{0,1}} (got g={g}); use build_genus2 for g = 2"
            )
        if r not in (0, 1):
            raise InvalidParameterError(f"wajnryb requires g ≥ 3, r ∈ {{0,1}} (got r={r})")

    def generator_names(self) -> list[str]:
        return [f"c{i}" for i in range(2 * self.g + 2)] + [config.MU]

    def intersection(self, x: str, y: str) -> Intersection:
        return chain_intersection(x, y)

    def homology_class(self, name: str) -> tuple[int, ...]:
        cls = chain_homology_class(name, self.g) if name in self.alphabet else None
        if cls is None:
            self._no_class(name)
        return cls

    def macros(self) -> dict[str, Word]:
        return lantern_macros(self.alphabet, self.b3_variant)

    def build(self) -> Presentation:
        a = self.alphabet
        table = self.table()
        m = self.macros()
        mu = a.gen(config.MU)
        top = 2 * self.g

        relators = self.pair_relators(table, "eq1.1", "eq1.2")

        chain = a.parse("(c1 c2 c3)^4") * ~(a.gen("c0") * m["b0"]) * ~mu
        relators.append(Relator("eq1.3", chain))
        relators += self.centrality_relators("eq1.3")

        lantern = a.gen("c0") * m["b2"] * m["b1"] * ~(a.parse("c1 c3 c5") * m["b3"])
        relators.append(Relator("eq1.4", lantern))

        notes = [
            "u in the generator list is read as mu",
            "b0..b3 are expanded words, not generators",
        ]
        if self.b3_variant != config.DEFAULT_B3_VARIANT:
            notes.append(f"b3 conjugator variant: {self.b3_variant}")
        if self.r == 0:
            delta = hyperelliptic_word(a, top)
            closing = self.commutator(delta, a.gen(f"c{top + 1}"))
            relators.append(Relator("eq1.5", closing))
        else:
            notes.append(f"c{top + 1} enters only through its pair and centrality relators")

        return self.finish(relators, notes)


def build_wajnryb_lift(g: int, r: int = 1, b3_variant: str = config.DEFAULT_B3_VARIANT) -> Presentation:
    """Lifted Wajnryb presentation for g ≥ 3 and r ∈ {0, 1}."""
    return WajnrybLiftBuilder(g, r, b3_variant=b3_variant).build()
