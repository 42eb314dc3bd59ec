"""Presentation builders for the lifted Wajnryb, lifted Gervais and genus-2 families."""

from .base import BasePresentationBuilder, Intersection, IntersectionTable, Presentation
from .genus2 import Genus2Builder, build_genus2
from .gervais import GervaisLiftBuilder, build_gervais_lift
from .library import builder_for, relator_library, resolve_family
from .triples import GoodTriple, good_triples
from .wajnryb import WajnrybLiftBuilder, build_wajnryb_lift, lantern_macros

__all__ = [
    "BasePresentationBuilder",
    "Intersection",
    "IntersectionTable",
    "Presentation",
    "Genus2Builder",
    "build_genus2",
    "GervaisLiftBuilder",
    "build_gervais_lift",
    "builder_for",
    "relator_library",
    "resolve_family",
    "GoodTriple",
    "good_triples",
    "WajnrybLiftBuilder",
    "build_wajnryb_lift",
    "lantern_macros",
]
