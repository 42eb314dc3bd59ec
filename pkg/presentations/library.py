"""
Builder registry and the library of named central words
(kappa_chain, kappa_lantern, the closed-surface and genus-2 relators).
"""

import logging

import config
from errors import InvalidParameterError

from .base import BasePresentationBuilder
from .genus2 import Genus2Builder
from .gervais import GervaisLiftBuilder
from .wajnryb import WajnrybLiftBuilder, hyperelliptic_word

logger = logging.getLogger(__name__)

BUILDERS: dict[str, type[BasePresentationBuilder]] = {
    config.FAMILY_WAJNRYB: WajnrybLiftBuilder,
    config.FAMILY_GERVAIS: GervaisLiftBuilder,
    config.FAMILY_GENUS2: Genus2Builder,
}


def resolve_family(family: str) -> str:
    """Map a short or full family name to its canonical name."""
    name = config.FAMILY_ALIASES.get(family, family)
    if name not in BUILDERS:
        raise InvalidParameterError(
            f"Unknown family {family!r}; choose from {sorted(config.FAMILY_ALIASES)}"
        )
    return name


def builder_for(family: str, g: int | None = None, r: int | None = None,
                b3_variant: str = config.DEFAULT_B3_VARIANT,
                table_overrides=None) -> BasePresentationBuilder:
    """
    Instantiate the builder for a family.

    Args:
        family: "wajnryb", "gervais", "genus2" or a full family name
        g, r: surface parameters (genus2 accepts only g = 2, r = 0)
        b3_variant: lantern conjugator variant (wajnryb only)
        table_overrides: intersection entries forced for fault injection

    Raises:
        InvalidParameterError / UnsupportedGenusError for bad parameters.
    """
    family = resolve_family(family)

    if family == config.FAMILY_GENUS2:
        if g not in (None, 2) or r not in (None, 0):
            raise InvalidParameterError(f"genus2 requires g = 2, r = 0 (got g={g}, r={r})")
        return Genus2Builder(table_overrides=table_overrides)

    if g is None:
        raise InvalidParameterError(f"{family} requires --g")
    r = 1 if r is None else r
    if family == config.FAMILY_WAJNRYB:
        return WajnrybLiftBuilder(g, r, b3_variant=b3_variant, table_overrides=table_overrides)
    return GervaisLiftBuilder(g, r, table_overrides=table_overrides)


def relator_library(g: int, r: int | None = None, b3_variant: str = config.DEFAULT_B3_VARIANT) -> dict:
    """
    Named words over the matching alphabet.

    g = 2 (r = 0, the default): kappa_chain = (c1 c2 c3)^4 c5^-2, kappa_lantern = 1,
    eq1.6 and eq1.7 over the genus-2 alphabet.

    g ≥ 3 (r ∈ {0, 1}, default 1): over the lifted Wajnryb alphabet,
    kappa_chain = (c1 c2 c3)^4 c0^-1 b0^-1, kappa_chain_eq13 =
    (c1 c2 c3)^4 (c0 b0)^-1, kappa_lantern = c1^-1 c3^-1 c5^-1 b3^-1 c0 b2 b1,
    eq1.5 and the macro words b0..b3.

    kappa_lantern is a cyclic rotation of the lantern relator eq1.4, so it
    reads c0 b2 b1 in that relator's order rather than as a product b0 b1 b2
    taken in index order.

    Raises:
        InvalidParameterError: for (g, r) outside both families.
    """
    if not isinstance(g, int) or g < 2:
        raise InvalidParameterError(f"relator_library requires g ≥ 2 (got g={g})")

    if g == 2:
        if r not in (None, 0):
            raise InvalidParameterError(f"genus2 requires g = 2, r = 0 (got g={g}, r={r})")
        r = 0
        builder = Genus2Builder()
        presentation = builder.build()
        library = {
            "kappa_chain": builder.kappa_chain(),
            "kappa_lantern": builder.alphabet.identity(),
            "eq1.6": presentation.relator("eq1.6"),
            "eq1.7": presentation.relator("eq1.7"),
        }
    else:
        r = 1 if r is None else r
        if r not in (0, 1):
            raise InvalidParameterError(f"relator_library at g ≥ 3 requires r ∈ {{0,1}} (got r={r})")
        builder = WajnrybLiftBuilder(g, r, b3_variant=b3_variant)
        a = builder.alphabet
        m = builder.macros()
        c0 = a.gen("c0")
        top = 2 * g
        library = {
            "kappa_chain": a.parse("(c1 c2 c3)^4") * ~c0 * ~m["b0"],
            "kappa_chain_eq13": a.parse("(c1 c2 c3)^4") * ~(c0 * m["b0"]),
            "kappa_lantern": ~(a.parse("c1 c3 c5") * m["b3"]) * c0 * m["b2"] * m["b1"],
            "eq1.5": builder.commutator(hyperelliptic_word(a, top), a.gen(f"c{top + 1}")),
            **m,
        }

    logger.debug(f"📋 Relator library (g={g}, r={r}): {', '.join(library)}")
    return library
