"""
Genus-2 presentation on the chain c1..c5:
braid/commutation relators plus the squared 3-chain identity and the
commutation of c1 with c5 c4 c3 c2 c1 c1 c2 c3 c4 c5.
"""

import logging

import config
from processor import Relator

from .base import BasePresentationBuilder, Intersection, Presentation
from .wajnryb import chain_homology_class, chain_intersection, hyperelliptic_word

logger = logging.getLogger(__name__)

GENUS = 2


class Genus2Builder(BasePresentationBuilder):
    """Builder for the genus-2 presentation (no central generator)."""

    FAMILY_NAME = config.FAMILY_GENUS2

    def __init__(self, table_overrides=None):
        super().__init__(GENUS, 0, table_overrides)

    @staticmethod
    def _validate_parameters(g: int, r: int):
        pass

    def generator_names(self) -> list[str]:
        return [f"c{i}" for i in range(1, 2 * GENUS + 2)]

    def intersection(self, x: str, y: str) -> Intersection:
        return chain_intersection(x, y)

    def homology_class(self, name: str) -> tuple[int, ...]:
        cls = chain_homology_class(name, GENUS) if name in self.alphabet else None
        if cls is None:
            self._no_class(name)
        return cls

    def kappa_chain(self):
        """(c1 c2 c3)^4 c5^-2."""
        return self.alphabet.parse("(c1 c2 c3)^4 c5^-2")

    def build(self) -> Presentation:
        a = self.alphabet
        relators = self.pair_relators(self.table(), "eq1.1", "eq1.2")

        delta = hyperelliptic_word(a, 2 * GENUS + 1)
        relators.append(Relator("eq1.6", self.kappa_chain() ** 2 * ~(delta ** 2)))
        relators.append(Relator("eq1.7", self.commutator(delta, a.gen("c1"))))

        return self.finish(relators)


def build_genus2() -> Presentation:
    """Genus-2 presentation on c1..c5."""
    return Genus2Builder().build()
