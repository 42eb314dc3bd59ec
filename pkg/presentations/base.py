"""
Base presentation builder with common functionality:
- Presentation / IntersectionTable value types
- Braid and commutation relators driven by the intersection table
- Consistency check between the intersection table and the homology classes
- Standardized finishing pass through the relator processor
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import config
from errors import InconsistentTableError, InvalidParameterError, NoClassError
from homology import symplectic_pairing
from processor import Relator, process_relators, merge_relators, quotient
from words import Alphabet, Word

logger = logging.getLogger(__name__)


class Intersection(Enum):
    """Geometric intersection number, capped at "many"."""

    ZERO = 0
    ONE = 1
    MANY = "many"

    def __str__(self) -> str:
        return str(self.value)


def pair_key(x: str, y: str) -> frozenset:
    return frozenset((x, y))


class IntersectionTable:
    """Symmetric map (symbol, symbol) → {0, 1, many}; the diagonal is "many"."""

    def __init__(self, names: Iterable[str], entries: Mapping[frozenset, Intersection]):
        self.names = tuple(names)
        self._entries = dict(entries)

    def __getitem__(self, pair: tuple[str, str]) -> Intersection:
        x, y = pair
        if x == y:
            return Intersection.MANY
        try:
            return self._entries[pair_key(x, y)]
        except KeyError:
            raise NoClassError(f"No intersection entry for ({x}, {y})") from None

    def pairs(self) -> Iterator[tuple[str, str, Intersection]]:
        """Unordered pairs in generator order, with their entries."""
        for i, x in enumerate(self.names):
            for y in self.names[i + 1:]:
                yield x, y, self[x, y]

    def to_json(self) -> dict:
        return {f"{x},{y}": str(entry) for x, y, entry in self.pairs()}


@dataclass(frozen=True)
class Presentation:
    """Generator list plus labelled relator list, tagged with its family and (g, r)."""

    family: str
    g: int
    r: int
    alphabet: Alphabet
    relators: tuple[Relator, ...]
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        labels = [rel.label for rel in self.relators]
        if len(set(labels)) != len(labels):
            raise InvalidParameterError(f"Relator labels are not unique in {self.family} presentation")
        for rel in self.relators:
            if rel.word.alphabet != self.alphabet:
                raise InvalidParameterError(f"Relator {rel.label} uses symbols outside the alphabet")

    @property
    def generators(self) -> tuple[str, ...]:
        return self.alphabet.names

    @property
    def labels(self) -> list[str]:
        return [rel.label for rel in self.relators]

    def relator(self, label: str) -> Word:
        for rel in self.relators:
            if rel.label == label:
                return rel.word
        raise KeyError(label)

    def relators_with_prefix(self, prefix: str) -> list[Relator]:
        return [rel for rel in self.relators if rel.label.split("[")[0] == prefix]

    def with_relators(self, extra: Mapping[str, Word] | Iterable[Relator]) -> "Presentation":
        """Append labelled relators (kept in the given order)."""
        if isinstance(extra, Mapping):
            extra = [Relator(label, word) for label, word in extra.items()]
        relators = merge_relators(self.relators, extra, self.alphabet)
        return Presentation(self.family, self.g, self.r, self.alphabet, tuple(relators), self.notes)

    def quotient(self, names: Iterable[str] = (config.MU,)) -> "Presentation":
        """Kill generators; by default mu, giving the base mapping class group."""
        return quotient(self, names)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "g": self.g,
            "r": self.r,
            "generators": list(self.generators),
            "relators": [{"label": rel.label, "word": rel.word.to_json()} for rel in self.relators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        alphabet = Alphabet(data["generators"])
        relators = tuple(
            Relator(item["label"], Word.from_json(alphabet, item["word"])) for item in data["relators"]
        )
        return cls(data["family"], int(data["g"]), int(data["r"]), alphabet, relators)


class BasePresentationBuilder(ABC):
    """Abstract base class for all presentation builders."""

    FAMILY_NAME = "unknown"

    def __init__(self, g: int, r: int, table_overrides: Mapping[tuple[str, str], Intersection] | None = None):
        self._validate_parameters(g, r)
        self.g = g
        self.r = r
        self.table_overrides = {pair_key(*k): v for k, v in (table_overrides or {}).items()}

    @staticmethod
    @abstractmethod
    def _validate_parameters(g: int, r: int):
        """Raise InvalidParameterError / UnsupportedGenusError for bad (g, r)."""

    @abstractmethod
    def generator_names(self) -> list[str]:
        """Generators in the order the theorem lists them, mu last."""

    @abstractmethod
    def intersection(self, x: str, y: str) -> Intersection:
        """Static intersection table entry for two distinct twist generators."""

    @abstractmethod
    def homology_class(self, name: str) -> tuple[int, ...]:
        """
        Homology class of the curve behind a twist generator, in the basis
        (x_1..x_g, y_1..y_g) with <x_i, y_i> = 1.

        Raises:
            NoClassError: for mu and for unknown names.
        """

    @abstractmethod
    def build(self) -> Presentation:
        """Build the presentation for (g, r)."""

    # ── Shared machinery ──

    @cached_property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.generator_names(), label=f"{self.FAMILY_NAME}(g={self.g}, r={self.r})")

    def twist_generators(self) -> list[str]:
        return [n for n in self.generator_names() if n != config.MU]

    def intersection_table(self) -> IntersectionTable:
        names = self.twist_generators()
        entries = {}
        for i, x in enumerate(names):
            for y in names[i + 1:]:
                key = pair_key(x, y)
                entries[key] = self.table_overrides.get(key, self.intersection(x, y))
        return IntersectionTable(names, entries)

    def _no_class(self, name: str):
        raise NoClassError(f"{name!r} has no homology class in the {self.FAMILY_NAME} family")

    def check_table_consistency(self, table: IntersectionTable):
        """Every entry 0 or 1 must equal |<[x], [y]>|."""
        classes = {n: self.homology_class(n) for n in table.names}
        for x, y, entry in table.pairs():
            if entry is Intersection.MANY:
                continue
            pairing = abs(symplectic_pairing(classes[x], classes[y]))
            if pairing != entry.value:
                raise InconsistentTableError(
                    f"{self.FAMILY_NAME}: I({x}, {y}) = {entry} but |<[{x}], [{y}]>| = {pairing}"
                )

    @staticmethod
    def commutator(x: Word, y: Word) -> Word:
        """x y x^-1 y^-1."""
        return x * y * ~x * ~y

    @staticmethod
    def braid_relator(x: Word, y: Word) -> Word:
        """x y x (y x y)^-1."""
        return x * y * x * ~(y * x * y)

    def pair_relators(self, table: IntersectionTable, commute_label: str, braid_label: str) -> list[Relator]:
        """One commutation relator per disjoint pair, then one braid relator per pair meeting once."""
        gen = self.alphabet.gen
        commuting, braiding = [], []
        for x, y, entry in table.pairs():
            if entry is Intersection.ZERO:
                commuting.append(Relator(f"{commute_label}[{x},{y}]", self.commutator(gen(x), gen(y))))
            elif entry is Intersection.ONE:
                braiding.append(Relator(f"{braid_label}[{x},{y}]", self.braid_relator(gen(x), gen(y))))
        return commuting + braiding

    def centrality_relators(self, label: str) -> list[Relator]:
        mu = self.alphabet.gen(config.MU)
        return [
            Relator(f"{label}[{x}]", self.commutator(self.alphabet.gen(x), mu))
            for x in self.twist_generators()
        ]

    def table(self) -> IntersectionTable:
        """Intersection table with overrides, checked against the homology classes."""
        table = self.intersection_table()
        if self.table_overrides:
            logger.warning(
                f"⚠️ {self.FAMILY_NAME}: {len(self.table_overrides)} table override(s) in effect, "
                f"consistency check skipped"
            )
        else:
            self.check_table_consistency(table)
        return table

    def finish(self, relators: list[Relator], notes: Iterable[str] = ()) -> Presentation:
        """Run the relator pipeline and wrap the result."""
        processed = process_relators(relators, self.alphabet)
        logger.info(
            f"✅ {self.FAMILY_NAME} (g={self.g}, r={self.r}): "
            f"{len(self.alphabet)} generators, {len(processed)} relators"
        )
        return Presentation(self.FAMILY_NAME, self.g, self.r, self.alphabet, tuple(processed), tuple(notes))
