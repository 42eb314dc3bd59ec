"""
Relator processor module:
- Cyclically reduces relator words
- Validates relators against the alphabet (known symbols, non-empty, unique labels)
- Deduplicates relators that agree up to rotation and inversion
- Quotients a presentation by killing generators (e.g. mu = 1)
- Diffs two relator lists label by label
- Reads relators back from text notation
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple

from errors import ParseError
from words import Alphabet, Word

logger = logging.getLogger(__name__)


class Relator(NamedTuple):
    label: str
    word: Word


def process_relators(relators: Iterable[Relator], alphabet: Alphabet) -> list[Relator]:
    """
    Full processing pipeline:
    1. Cyclically reduce every word
    2. Validate records (alphabet, non-empty, unique label)
    3. Deduplicate up to rotation and inversion
    """
    relators = list(relators)
    logger.debug(f"Processing {len(relators)} raw relators...")

    processed = []
    seen_labels: set[str] = set()
    for rel in relators:
        rel = _normalize(rel)
        if _is_valid(rel, alphabet, seen_labels):
            processed.append(rel)
            seen_labels.add(rel.label)

    dropped = len(relators) - len(processed)
    if dropped:
        logger.info(f"Dropped {dropped} empty or invalid relator(s)")

    deduped = _deduplicate(processed)
    logger.debug(f"Relators after deduplication: {len(deduped)}")

    return deduped


def _normalize(rel: Relator) -> Relator:
    return Relator(rel.label, rel.word.cyclic_reduce())


def _is_valid(rel: Relator, alphabet: Alphabet, seen_labels: set[str]) -> bool:
    """Validate that the relator lives over the alphabet and carries information."""
    if rel.word.alphabet != alphabet:
        logger.warning(f"Relator {rel.label} is over a different alphabet, skipped")
        return False

    if rel.word.is_identity():
        logger.debug(f"Relator {rel.label} reduces to the identity, dropped")
        return False

    if rel.label in seen_labels:
        logger.warning(f"Duplicate relator label {rel.label}, later copy dropped")
        return False

    return True


def _deduplicate(relators: list[Relator]) -> list[Relator]:
    """
    Remove relators whose cyclic words coincide up to rotation and inversion.
    The first occurrence (canonical relator order) is kept.
    """
    unique = []
    seen: dict[tuple, str] = {}

    for rel in relators:
        key = rel.word.canonical_cyclic_form()
        if key in seen:
            logger.debug(f"Relator {rel.label} duplicates {seen[key]}")
            continue
        seen[key] = rel.label
        unique.append(rel)

    removed = len(relators) - len(unique)
    if removed > 0:
        logger.info(f"Removed {removed} duplicate relator(s)")

    return unique


def quotient(presentation, names: Iterable[str]):
    """
    Kill the given generators: substitute them by the identity, drop them
    from the alphabet and renormalize the relators.

    Args:
        presentation: a Presentation
        names: generator names to kill

    Returns:
        A new Presentation over the smaller alphabet.
    """
    names = list(names)
    target = presentation.alphabet.without(names)
    mapping = {n: None for n in names}

    relators = [Relator(r.label, r.word.substitute(mapping, target)) for r in presentation.relators]
    kept = process_relators(relators, target)
    logger.info(
        f"Quotient by {', '.join(names)}: {len(presentation.relators)} → {len(kept)} relators"
    )
    return replace(presentation, alphabet=target, relators=tuple(kept))


def merge_relators(existing: Iterable[Relator], extra: Iterable[Relator], alphabet: Alphabet) -> list[Relator]:
    """Append extra relators and rerun the pipeline over the combined list."""
    existing = list(existing)
    combined = process_relators(existing + list(extra), alphabet)
    logger.info(f"Found {max(0, len(combined) - len(existing))} new relator(s) to append")
    return combined


@dataclass
class RelatorDiff:
    missing: list[str] = field(default_factory=list)     # expected labels not produced
    unexpected: list[str] = field(default_factory=list)  # produced labels not expected
    mismatched: list[str] = field(default_factory=list)  # same label, different cyclic word

    @property
    def is_empty(self) -> bool:
        return not (self.missing or self.unexpected or self.mismatched)


def diff_relators(actual: Iterable[Relator], expected: Iterable[Relator]) -> RelatorDiff:
    """Compare two relator lists label by label, words up to rotation and inversion."""
    actual = {r.label: r.word for r in actual}
    expected = {r.label: r.word for r in expected}

    diff = RelatorDiff(
        missing=[label for label in expected if label not in actual],
        unexpected=[label for label in actual if label not in expected],
    )
    for label, word in expected.items():
        if label in actual and actual[label].canonical_cyclic_form() != word.canonical_cyclic_form():
            diff.mismatched.append(label)
    return diff


def read_relator_text(text: str, alphabet: Alphabet | None = None) -> tuple[Alphabet, list[Relator]]:
    """
    Read relators written in text notation.

    Accepted lines (blank lines and "#" comments are skipped):
        generators: c0, c1, ...    declares the alphabet
        relators: 30               expected relator count
        b1 := c0 c4                defines a macro usable in later lines
        eq1.1[c0,c1]: c0 c1 c0^-1 c1^-1

    Args:
        text: file contents, e.g. the output of exporter.presentation_to_text
        alphabet: alphabet to parse against when the text declares none

    Returns:
        (alphabet, relators) with words freely reduced, in file order.
    """
    macros: dict[str, Word] = {}
    relators: list[Relator] = []
    expected = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if ":=" in line:
            name, body = (part.strip() for part in line.split(":=", 1))
            if alphabet is None:
                raise ParseError(f"Line {lineno}: macro {name!r} before any generators line")
            macros[name] = alphabet.parse(body, macros)
            continue

        key, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"Line {lineno}: expected 'label: word', got {line!r}")
        key, body = key.strip(), body.strip()

        if key == "generators":
            declared = Alphabet(n.strip() for n in body.split(",") if n.strip())
            if alphabet is not None and declared != alphabet:
                raise ParseError(f"Line {lineno}: generators {declared.names} differ from {alphabet.names}")
            alphabet = declared
        elif key == "relators":
            if not body.isdigit():
                raise ParseError(f"Line {lineno}: relator count must be a number, got {body!r}")
            expected = int(body)
        elif alphabet is None:
            raise ParseError(f"Line {lineno}: relator {key!r} before any generators line")
        else:
            relators.append(Relator(key, alphabet.parse(body, macros)))

    if expected is not None and expected != len(relators):
        raise ParseError(f"Text declares {expected} relators but lists {len(relators)}")
    logger.debug(f"Read {len(relators)} relators, {len(macros)} macros")
    return alphabet, relators
