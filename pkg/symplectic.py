"""
Symplectic verification oracle:
- Symplectic matrices over the homology basis (see homology.py)
- Dehn twists as transvections x ↦ x + <x, v> v on H_1(Σ_g; Z)
- Word evaluation and relator-by-relator identity checks (mu ↦ I)
- Projective representation check over exact rationals (sympy)
- Assignment files {"dimension": n, "matrices": {name: [["p/q", ...]]}}
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
import sympy

import config
from errors import (
    DimensionError,
    InvalidAssignmentError,
    InvalidParameterError,
    MissingAssignmentError,
    ParseError,
)
from homology import HomologyClass, coords_of, symplectic_form
from presentations import Intersection, Presentation, builder_for, relator_library
from words import Word

logger = logging.getLogger(__name__)


# ─── Symplectic group ────────────────────────────────────────────────

class SymplecticElement:
    """2g×2g integer matrix preserving the standard symplectic form."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        arr = np.array(matrix, dtype=object)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
            raise DimensionError(f"Symplectic matrices are 2g×2g, got shape {arr.shape}")
        arr.flags.writeable = False
        self.matrix = arr

    @classmethod
    def identity(cls, g: int) -> "SymplecticElement":
        arr = np.zeros((2 * g, 2 * g), dtype=object)
        for i in range(2 * g):
            arr[i, i] = 1
        return cls(arr)

    @property
    def genus(self) -> int:
        return self.matrix.shape[0] // 2

    def __matmul__(self, other: "SymplecticElement") -> "SymplecticElement":
        if self.matrix.shape != other.matrix.shape:
            raise DimensionError(f"Cannot multiply {self.matrix.shape} by {other.matrix.shape}")
        return SymplecticElement(self.matrix.dot(other.matrix))

    def inverse(self) -> "SymplecticElement":
        """M^-1 = -J M^T J."""
        J = symplectic_form(self.genus)
        return SymplecticElement(-J.dot(self.matrix.T).dot(J))

    def is_identity(self) -> bool:
        return self == SymplecticElement.identity(self.genus)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(tuple(self.matrix.flatten().tolist()))

    def __repr__(self) -> str:
        return f"SymplecticElement({self.matrix.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.matrix.tolist()


def is_symplectic(M) -> bool:
    """M^T J M == J."""
    arr = M.matrix if isinstance(M, SymplecticElement) else np.array(M, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
        return False
    J = symplectic_form(arr.shape[0] // 2)
    return np.array_equal(arr.T.dot(J).dot(arr), J)


def transvection(v, g: int | None = None) -> SymplecticElement:
    """
    Transvection x ↦ x + <x, v> v, i.e. I + v (J v)^T.

    Args:
        v: homology class (or integer sequence) of length 2g
        g: ambient genus; inferred from v when omitted

    Raises:
        DimensionError: if v does not have length 2g.
    """
    coords = coords_of(v)
    if g is None:
        if len(coords) % 2 or not coords:
            raise DimensionError(f"Cannot infer the genus from a vector of length {len(coords)}")
        g = len(coords) // 2
    if len(coords) != 2 * g:
        raise DimensionError(f"Class of length {len(coords)} does not live in H_1 of genus {g}")

    vec = np.array(coords, dtype=object)
    T = SymplecticElement.identity(g).matrix.copy()
    T += np.outer(vec, symplectic_form(g).dot(vec))
    return SymplecticElement(T)


def curve_class(family: str, symbol: str, g: int | None = None, r: int | None = None) -> HomologyClass:
    """
    Homology class of the curve behind a twist generator.

    Raises:
        NoClassError: for mu and for symbols outside the family's alphabet.
    """
    return HomologyClass(builder_for(family, g, r).homology_class(symbol))


# ─── Evaluation ──────────────────────────────────────────────────────

def _evaluate(word: Word, assignment: Mapping, identity, inverse: Callable, cache: dict | None = None):
    """Left-to-right product of generator images with exponents."""
    cache = {} if cache is None else cache
    out = identity
    for symbol, exponent in word.letters:
        name = symbol.name
        if name not in assignment:
            raise MissingAssignmentError(f"No image assigned to generator {name!r}")
        if exponent < 0:
            if name not in cache:
                cache[name] = inverse(assignment[name])
            image = cache[name]
        else:
            image = assignment[name]
        for _ in range(abs(exponent)):
            out = out @ image
    return out


def evaluate(word: Word, assignment: Mapping[str, SymplecticElement]) -> SymplecticElement:
    """
    Image of a word under a generator assignment.

    Raises:
        MissingAssignmentError: for a generator without an image.
    """
    if not assignment:
        raise MissingAssignmentError("Empty assignment")
    g = next(iter(assignment.values())).genus
    return _evaluate(word, assignment, SymplecticElement.identity(g), SymplecticElement.inverse)


def symplectic_assignment(p: Presentation) -> dict[str, SymplecticElement]:
    """Transvection images of every twist generator, mu ↦ I."""
    builder = builder_for(p.family, p.g, p.r)
    assignment = {}
    for name in p.generators:
        if name == config.MU:
            assignment[name] = SymplecticElement.identity(p.g)
        else:
            assignment[name] = transvection(builder.homology_class(name), p.g)
    return assignment


@dataclass
class SpReport:
    """Per-relator identity check in Sp(2g, Z)."""

    family: str
    g: int
    r: int
    results: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.results if not ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "g": self.g,
            "r": self.r,
            "passed": self.passed,
            "relators": len(self.results),
            "failures": self.failures,
        }


def verify_presentation_sp(p: Presentation) -> SpReport:
    """Check that every relator of p maps to the identity with mu ↦ I."""
    assignment = symplectic_assignment(p)
    identity = SymplecticElement.identity(p.g)
    cache: dict = {}

    report = SpReport(p.family, p.g, p.r)
    for rel in p.relators:
        image = _evaluate(rel.word, assignment, identity, SymplecticElement.inverse, cache)
        ok = image == identity
        report.results.append((rel.label, ok))
        if not ok:
            logger.debug(f"❌ {rel.label} is not the identity in Sp({2 * p.g}, Z)")

    if report.passed:
        logger.info(f"✅ All {len(report.results)} relators of {p.family} (g={p.g}, r={p.r}) pass in Sp({2 * p.g}, Z)")
    else:
        logger.warning(f"⚠️ {len(report.failures)} relator(s) fail in Sp({2 * p.g}, Z): {', '.join(report.failures)}")
    return report


def fault_override(builder) -> dict[tuple[str, str], Intersection]:
    """
    A single table entry flipped from 0 to 1 that the oracle must catch:
    the first disjoint pair with nonzero, distinct (up to sign) classes.
    """
    for x, y, entry in builder.intersection_table().pairs():
        if entry is not Intersection.ZERO:
            continue
        u, v = builder.homology_class(x), builder.homology_class(y)
        if any(u) and any(v) and u != v and u != tuple(-c for c in v):
            logger.warning(f"⚠️ Injecting fault: I({x}, {y}) forced to 1")
            return {(x, y): Intersection.ONE}
    raise InvalidParameterError(f"No pair in {builder.FAMILY_NAME} can carry an injected fault")


def kappa_order_check(g: int) -> dict:
    """
    Whether (c1 c2 c3)^4 c0^-1 b0^-1 and (c1 c2 c3)^4 (c0 b0)^-1 have the
    same symplectic image (they agree in the group iff c0 and b0 commute).
    """
    library = relator_library(g, 1)
    builder = builder_for(config.FAMILY_WAJNRYB, g, 1)
    assignment = {n: transvection(builder.homology_class(n), g) for n in builder.twist_generators()}
    assignment[config.MU] = SymplecticElement.identity(g)

    chain = evaluate(library["kappa_chain"], assignment)
    chain_eq13 = evaluate(library["kappa_chain_eq13"], assignment)
    same = chain == chain_eq13
    logger.info(f"📋 kappa_chain orderings at g={g}: {'same' if same else 'different'} symplectic image")
    return {"g": g, "same_image": same, "chain_is_identity": chain.is_identity()}


# ─── Projective representations ──────────────────────────────────────

@dataclass(frozen=True)
class ScalarResult:
    """Image of one relator: c·I (scalar set) or a failure with its deviation."""

    label: str
    scalar: sympy.Rational | None = None
    deviation: sympy.Rational | None = None

    @property
    def is_scalar(self) -> bool:
        return self.scalar is not None

    def to_dict(self) -> dict:
        if self.is_scalar:
            return {"label": self.label, "scalar": str(self.scalar)}
        return {"label": self.label, "scalar": None, "deviation": str(self.deviation)}


@dataclass
class RepReport:
    dimension: int
    results: list[ScalarResult] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [r.label for r in self.results if not r.is_scalar]

    @property
    def non_unit(self) -> list[str]:
        return [r.label for r in self.results if r.is_scalar and r.scalar != 1]

    @property
    def projective(self) -> bool:
        """Every relator maps to a scalar matrix."""
        return not self.failures

    @property
    def linear(self) -> bool:
        """Every relator maps to the identity."""
        return self.projective and not self.non_unit

    def scalars(self) -> dict[str, sympy.Rational | None]:
        return {r.label: r.scalar for r in self.results}

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "projective": self.projective,
            "linear": self.linear,
            "relators": [r.to_dict() for r in self.results],
        }


def _scalar_or_deviation(label: str, M: sympy.Matrix) -> ScalarResult:
    n = M.rows
    c = M[0, 0]
    deviation = max(abs(M[i, j] - (c if i == j else 0)) for i in range(n) for j in range(n))
    if deviation == 0:
        return ScalarResult(label, scalar=sympy.Rational(c))
    return ScalarResult(label, deviation=sympy.Rational(deviation))


def _check_assignment(p: Presentation, assignment: Mapping[str, sympy.Matrix]) -> int:
    """Common square dimension of the assignment; every generator must be present and invertible."""
    missing = [name for name in p.generators if name not in assignment]
    if missing:
        raise MissingAssignmentError(f"No matrix assigned to: {', '.join(missing)}")
    dims = {assignment[name].shape for name in p.generators}
    if len(dims) != 1:
        raise DimensionError(f"Assigned matrices have different shapes: {sorted(dims)}")
    rows, cols = dims.pop()
    if rows != cols or rows == 0:
        raise DimensionError(f"Assigned matrices must be square and non-empty, got {rows}×{cols}")
    for name in p.generators:
        if assignment[name].det() == 0:
            raise InvalidAssignmentError(f"Matrix assigned to {name!r} is not invertible")
    return rows


def verify_projective_rep(p: Presentation, assignment: Mapping[str, sympy.Matrix]) -> RepReport:
    """
    For every relator, the scalar c with image c·I, or a failure carrying
    the max-norm distance between the image and M[0,0]·I.

    Raises:
        MissingAssignmentError, DimensionError, InvalidAssignmentError
    """
    n = _check_assignment(p, assignment)
    identity = sympy.eye(n)
    cache: dict = {}

    report = RepReport(dimension=n)
    for rel in p.relators:
        image = _evaluate(rel.word, assignment, identity, lambda M: M.inv(), cache)
        report.results.append(_scalar_or_deviation(rel.label, image))

    logger.info(
        f"📊 Representation check ({n}×{n}): {len(report.results)} relators, "
        f"{len(report.failures)} non-scalar, {len(report.non_unit)} scalar ≠ 1"
    )
    return report


def to_rational_assignment(assignment: Mapping[str, SymplecticElement]) -> dict[str, sympy.Matrix]:
    return {name: sympy.Matrix(element.tolist()) for name, element in assignment.items()}


def scaled_assignment(p: Presentation, lam) -> dict[str, sympy.Matrix]:
    """
    The symplectic assignment with every twist image multiplied by lam and
    mu ↦ lam^10·I: a relator with twist exponent sum s maps to lam^(s - 10k),
    k the mu exponent sum.
    """
    lam = sympy.Rational(lam)
    if lam == 0:
        raise InvalidAssignmentError("Scaling factor must be nonzero")
    base = to_rational_assignment(symplectic_assignment(p))
    scaled = {}
    for name, M in base.items():
        if name == config.MU:
            scaled[name] = lam ** config.CENTER_GENERATOR_LANTERN_POWER * sympy.eye(M.rows)
        else:
            scaled[name] = lam * M
    return scaled


# ─── Assignment files ────────────────────────────────────────────────

def assignment_to_json(assignment: Mapping[str, sympy.Matrix]) -> dict:
    if not assignment:
        raise ParseError("Cannot serialize an empty assignment")
    dimension = next(iter(assignment.values())).rows
    return {
        "dimension": dimension,
        "matrices": {
            name: [[str(sympy.Rational(x)) for x in M.row(i)] for i in range(M.rows)]
            for name, M in sorted(assignment.items())
        },
    }


def assignment_from_json(data) -> dict[str, sympy.Matrix]:
    """
    Parse {"dimension": n, "matrices": {name: [[rational-as-string]]}}.

    Raises:
        ParseError: malformed structure or entries
        DimensionError: a matrix that is not n×n
    """
    if not isinstance(data, dict) or "matrices" not in data or "dimension" not in data:
        raise ParseError("Assignment JSON needs 'dimension' and 'matrices'")
    n = data["dimension"]
    matrices = data["matrices"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"Invalid dimension {n!r}")
    if not isinstance(matrices, dict) or not matrices:
        raise ParseError("Assignment JSON has no matrices")

    assignment = {}
    for name, rows in matrices.items():
        if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise DimensionError(f"Matrix for {name!r} is not {n}×{n}")
        try:
            assignment[name] = sympy.Matrix([[_parse_rational(x) for x in row] for row in rows])
        except (TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as e:
            raise ParseError(f"Bad entry in matrix {name!r}: {e}") from None
    return assignment


def _parse_rational(x) -> sympy.Rational:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ValueError(f"expected 'p/q' or an integer, got {x!r}")
    value = sympy.Rational(x)
    if not value.is_Rational:
        raise ValueError(f"{x!r} is not a finite rational")
    return value


def load_assignment(path: str) -> dict[str, sympy.Matrix]:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from None
    return assignment_from_json(data)


def save_assignment(assignment: Mapping[str, sympy.Matrix], path: str):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(assignment_to_json(assignment), f, indent=config.JSON_INDENT)
        f.write("\n")
    logger.info(f"✅ Assignment saved: {path}")
