"""
Central-element calculus for Dehn-twist factorizations:
- Twist types (non-separating, separating of type k) and factorizations
- Counting homomorphisms eps_ns, eps_k and the value I_g = sigma + m - m_ns
- Exponents of kappa_chain / kappa_lantern for a factorization trivial in M_g
- The distinguished central elements and their (I_g, eps) values
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

import config
from errors import (
    ConstantsCorruptedError,
    InvalidParameterError,
    NonIntegralSolutionError,
    ParseError,
    UnsupportedGenusError,
)
from presentations import GervaisLiftBuilder, good_triples
from presentations.gervais import c_name

logger = logging.getLogger(__name__)


# ─── Twist data ──────────────────────────────────────────────────────

@dataclass(frozen=True)
class TwistType:
    """Non-separating (k is None) or separating of type k."""

    k: int | None = None

    @classmethod
    def nonseparating(cls) -> "TwistType":
        return cls(None)

    @classmethod
    def separating(cls, k: int) -> "TwistType":
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise InvalidParameterError(f"Separating twist type needs k ≥ 0, got {k!r}")
        return cls(k)

    @property
    def is_separating(self) -> bool:
        return self.k is not None

    def validate(self, g: int):
        if self.is_separating and not 0 <= self.k <= g // 2:
            raise InvalidParameterError(f"separating({self.k}) requires 0 ≤ k ≤ {g // 2} at genus {g}")

    def __str__(self) -> str:
        return f"sep({self.k})" if self.is_separating else "ns"

    def to_json(self):
        return {"sep": self.k} if self.is_separating else "ns"

    @classmethod
    def from_json(cls, data) -> "TwistType":
        if data == "ns":
            return cls.nonseparating()
        if isinstance(data, dict) and set(data) == {"sep"}:
            return cls.separating(data["sep"])
        raise ParseError(f"Twist must be \"ns\" or {{\"sep\": k}}, got {data!r}")


NS = TwistType.nonseparating()


@dataclass(frozen=True)
class Factorization:
    """Positive Dehn-twist factorization with the caller-supplied signature."""

    g: int
    twists: tuple[TwistType, ...] = ()
    sigma: int = 0

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))
        if isinstance(self.g, bool) or not isinstance(self.g, int) or self.g < 2:
            raise InvalidParameterError(f"Factorization genus must be ≥ 2, got {self.g!r}")
        if isinstance(self.sigma, bool) or not isinstance(self.sigma, int):
            raise InvalidParameterError(f"Signature must be an integer, got {self.sigma!r}")
        for t in self.twists:
            t.validate(self.g)

    @property
    def m(self) -> int:
        return len(self.twists)

    @property
    def m_ns(self) -> int:
        return sum(1 for t in self.twists if not t.is_separating)

    def __add__(self, other: "Factorization") -> "Factorization":
        """Concatenation; signatures add."""
        if self.g != other.g:
            raise InvalidParameterError(f"Cannot concatenate factorizations of genus {self.g} and {other.g}")
        return Factorization(self.g, self.twists + other.twists, self.sigma + other.sigma)

    def to_json(self) -> dict:
        return {"g": self.g, "sigma": self.sigma, "twists": [t.to_json() for t in self.twists]}

    @classmethod
    def from_json(cls, data) -> "Factorization":
        if not isinstance(data, dict) or not {"g", "sigma", "twists"} <= set(data):
            raise ParseError("Factorization JSON needs 'g', 'sigma' and 'twists'")
        if not isinstance(data["twists"], list):
            raise ParseError("'twists' must be a list")
        return cls(data["g"], tuple(TwistType.from_json(t) for t in data["twists"]), data["sigma"])

    @classmethod
    def load(cls, path: str) -> "Factorization":
        try:
            with open(path, encoding="utf-8") as f:
                return cls.from_json(json.load(f))
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e}") from None

    def save(self, path: str):
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_json(), f, indent=config.JSON_INDENT)
            f.write("\n")


@dataclass(frozen=True)
class CentralExponents:
    """Exponents (N_C, N_L) of kappa_chain and kappa_lantern."""

    n_chain: int
    n_lantern: int

    def to_dict(self) -> dict:
        return {"n_chain": self.n_chain, "n_lantern": self.n_lantern}


@dataclass(frozen=True)
class EpsilonCounts:
    """eps_ns and the vector eps_k, k = 0..⌊g/2⌋."""

    eps_ns: int
    eps_k: tuple[int, ...]

    def __iter__(self):
        return iter((self.eps_ns, self.eps_k))

    def __add__(self, other: "EpsilonCounts") -> "EpsilonCounts":
        if len(self.eps_k) != len(other.eps_k):
            raise InvalidParameterError("Epsilon vectors of different genera")
        return EpsilonCounts(self.eps_ns + other.eps_ns, tuple(a + b for a, b in zip(self.eps_k, other.eps_k)))

    @property
    def total(self) -> int:
        return self.eps_ns + sum(self.eps_k)


# ─── Counting ────────────────────────────────────────────────────────

def abelianization_rank(g: int) -> int:
    """Number of counting homomorphisms: eps_ns and eps_0..eps_⌊g/2⌋."""
    return g // 2 + 2


def epsilon_counts(f: Factorization) -> EpsilonCounts:
    eps_k = [0] * (f.g // 2 + 1)
    for t in f.twists:
        if t.is_separating:
            eps_k[t.k] += 1
    return EpsilonCounts(f.m_ns, tuple(eps_k))


def ig_value(f: Factorization) -> int:
    """I_g = sigma + m - m_ns (the factorization is assumed trivial in M_g)."""
    return f.sigma + f.m - f.m_ns


def genus2_splitting_invariant(f: Factorization) -> tuple[int, int]:
    """(12·eps_ns + eps_1, eps_0) for a genus-2 factorization."""
    if f.g != 2:
        raise InvalidParameterError(f"genus2_splitting_invariant requires g = 2, got g={f.g}")
    eps_ns, (eps_0, eps_1) = epsilon_counts(f)
    return config.GENUS2_SPLIT_NS_WEIGHT * eps_ns + eps_1, eps_0


# ─── Solvers ─────────────────────────────────────────────────────────

def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise NonIntegralSolutionError(f"non-integral-solution: {what} = {num}/{den}")
    return num // den


def _check_counts(m: int, m_ns: int):
    if not 0 <= m_ns <= m:
        raise InvalidParameterError(f"Counts must satisfy m ≥ m_ns ≥ 0 (got m={m}, m_ns={m_ns})")


def solve_from_counts(g: int, sigma: int, m: int, m_ns: int, compat: bool = False) -> CentralExponents:
    """
    (N_C, N_L) from (sigma, m, m_ns).

    g ≥ 3 solves m_ns = N_L + 10 N_C, sigma = N_L + 6 N_C + m - m_ns, i.e.
    N_C = (m - sigma)/4 and N_L = m_ns - 10 N_C. g = 2 solves
    sigma = 6 N_C + m - m_ns with N_L = 0.

    compat=True returns the printed closed forms instead:
    g ≥ 3: ((sigma + m)/4, (5 sigma + 5m - 2 m_ns)/2); g = 2: ((sigma + m - m_ns)/6, 0).
    These do not satisfy the system above in general.

    Raises:
        NonIntegralSolutionError: when a division is not exact.
    """
    _check_counts(m, m_ns)
    if g < 2:
        raise InvalidParameterError(f"Solver requires g ≥ 2, got g={g}")
    if compat:
        logger.warning("⚠️ Compatibility mode: printed closed forms, not the linear system")

    if g == 2:
        num = sigma + m - m_ns if compat else sigma - m + m_ns
        n_chain = _exact_div(num, config.GENUS2_DIVISOR, "N_C")
        result = CentralExponents(n_chain, 0)
        if not compat and sigma != config.GENUS2_DIVISOR * n_chain + m - m_ns:
            raise ConstantsCorruptedError(f"Re-substitution failed for {result}")
        return result

    if compat:
        n_chain = _exact_div(sigma + m, config.CHAIN_DIVISOR, "N_C")
        n_lantern = _exact_div(5 * sigma + 5 * m - 2 * m_ns, 2, "N_L")
        return CentralExponents(n_chain, n_lantern)

    n_chain = _exact_div(m - sigma, config.CHAIN_DIVISOR, "N_C")
    n_lantern = m_ns - config.LANTERN_NS_WEIGHT * n_chain
    if (m_ns != n_lantern + config.LANTERN_NS_WEIGHT * n_chain
            or sigma != n_lantern + config.CHAIN_SIGMA_WEIGHT * n_chain + m - m_ns):
        raise ConstantsCorruptedError(f"Re-substitution failed for ({n_chain}, {n_lantern})")
    return CentralExponents(n_chain, n_lantern)


def solve_central_exponents(f: Factorization, compat: bool = False) -> CentralExponents:
    """Exponents of kappa_chain and kappa_lantern for g ≥ 3."""
    if f.g < 3:
        raise UnsupportedGenusError("solve_central_exponents requires g ≥ 3; use solve_central_exponents_g2")
    result = solve_from_counts(f.g, f.sigma, f.m, f.m_ns, compat)
    logger.info(f"✅ Central exponents (g={f.g}, sigma={f.sigma}, m={f.m}, m_ns={f.m_ns}): {result.to_dict()}")
    return result


def solve_central_exponents_g2(f: Factorization, compat: bool = False) -> CentralExponents:
    """Exponent of kappa_chain for g = 2 (kappa_lantern is trivial)."""
    if f.g != 2:
        raise InvalidParameterError(f"solve_central_exponents_g2 requires g = 2, got g={f.g}")
    result = solve_from_counts(2, f.sigma, f.m, f.m_ns, compat)
    logger.info(f"✅ Central exponents (g=2, sigma={f.sigma}, m={f.m}, m_ns={f.m_ns}): {result.to_dict()}")
    return result


def forward_counts(g: int, exponents: CentralExponents, m: int, m_ns: int | None = None) -> tuple[int, int, int]:
    """
    (sigma, m, m_ns) satisfying the solver's system. For g ≥ 3 m_ns is
    fixed by the exponents; for g = 2 it defaults to m.
    """
    if g == 2:
        m_ns = m if m_ns is None else m_ns
        sigma = config.GENUS2_DIVISOR * exponents.n_chain + m - m_ns
        return sigma, m, m_ns
    m_ns = exponents.n_lantern + config.LANTERN_NS_WEIGHT * exponents.n_chain
    sigma = exponents.n_lantern + config.CHAIN_SIGMA_WEIGHT * exponents.n_chain + m - m_ns
    return sigma, m, m_ns


# ─── Central elements ────────────────────────────────────────────────

@dataclass(frozen=True)
class CentralElement:
    """
    A named element of the kernel with its I_g value (None when unknown)
    and signed twist-type counts.
    """

    name: str
    ig: int | None
    eps_ns: int
    eps_sep: dict = field(default_factory=dict)

    def __mul__(self, other: "CentralElement") -> "CentralElement":
        ig = None if self.ig is None or other.ig is None else self.ig + other.ig
        sep = dict(self.eps_sep)
        for k, v in other.eps_sep.items():
            sep[k] = sep.get(k, 0) + v
        return CentralElement(f"{self.name}·{other.name}", ig, self.eps_ns + other.eps_ns,
                              {k: v for k, v in sep.items() if v})

    def __pow__(self, n: int) -> "CentralElement":
        ig = None if self.ig is None else n * self.ig
        return CentralElement(f"{self.name}^{n}", ig, n * self.eps_ns,
                              {k: n * v for k, v in self.eps_sep.items() if n * v})

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ig": self.ig,
            "eps_ns": self.eps_ns,
            "eps_sep": {str(k): v for k, v in sorted(self.eps_sep.items())},
        }


def kappa_chain() -> CentralElement:
    return CentralElement("kappa_chain", config.IG_KAPPA_CHAIN, config.EPS_NS_KAPPA_CHAIN)


def kappa_lantern(g: int = 3) -> CentralElement:
    """
    Three twists against four: the word counts -EPS_NS_KAPPA_LANTERN
    non-separating letters. Trivial at g = 2.
    """
    if g == 2:
        return CentralElement("kappa_lantern", 0, 0)
    return CentralElement("kappa_lantern", config.IG_KAPPA_LANTERN, -config.EPS_NS_KAPPA_LANTERN)


def lantern_k(k: int, g: int) -> CentralElement:
    """
    The k-th lantern element: one separating(k) twist, three non-separating
    positive and three non-separating inverse twists. Its I_g value is not modelled.
    """
    if g < 3 or not 0 <= k < g / 2:
        raise InvalidParameterError(f"lantern_k requires g ≥ 3 and 0 ≤ k < g/2 (got k={k}, g={g})")
    return CentralElement(f"L_{k}", None, 0, {k: 1})


def center_generator(g: int = 3) -> CentralElement:
    """kappa_chain · kappa_lantern^10."""
    return kappa_chain() * kappa_lantern(g) ** config.CENTER_GENERATOR_LANTERN_POWER


def central_elements(g: int) -> dict[str, CentralElement]:
    elements = {
        "kappa_chain": kappa_chain(),
        "kappa_lantern": kappa_lantern(g),
        "center_generator": center_generator(g),
    }
    if g >= 3:
        for k in range((g + 1) // 2):
            elements[f"L_{k}"] = lantern_k(k, g)
    return elements


def generator_check() -> dict:
    """
    Recompute (I_g, eps_ns) of kappa_chain · kappa_lantern^10 from the
    stored constants and compare with (4, 0).

    Raises:
        ConstantsCorruptedError: if the stored constants disagree.
    """
    power = config.CENTER_GENERATOR_LANTERN_POWER
    ig = config.IG_KAPPA_CHAIN + power * config.IG_KAPPA_LANTERN
    eps_ns = config.EPS_NS_KAPPA_CHAIN - power * config.EPS_NS_KAPPA_LANTERN
    report = {
        "ig": ig,
        "eps_ns": eps_ns,
        "expected": list(config.EXPECTED_CENTER_GENERATOR),
        "ok": (ig, eps_ns) == tuple(config.EXPECTED_CENTER_GENERATOR),
    }
    if not report["ok"]:
        raise ConstantsCorruptedError(
            f"Central constants corrupted: (I_g, eps_ns) = ({ig}, {eps_ns}), "
            f"expected {tuple(config.EXPECTED_CENTER_GENERATOR)}"
        )
    logger.debug(f"Center generator check: {report}")
    return report


# ─── Star relators ───────────────────────────────────────────────────

def star_relator_values(g: int, r: int = 1) -> dict[str, tuple[int, int]]:
    """
    (I_g, eps_ns) = (5 - N, 9 - N) for each star relator of the lifted
    Gervais presentation with pairwise distinct indices, N the number of
    separating curves among c_ij, c_jk, c_ki once the boundary is capped.
    """
    builder = GervaisLiftBuilder(g, r)
    values = {}
    for i, j, k in good_triples(builder.n):
        if len({i, j, k}) < 3:
            continue
        n_sep = sum(
            1 for x, y in ((i, j), (j, k), (k, i))
            if not any(builder.homology_class(c_name(x, y)))
        )
        values[f"thm4.iii[{i},{j},{k}]"] = (config.STAR_IG_BASE - n_sep, config.STAR_EPS_NS_BASE - n_sep)
    logger.debug(f"Star relator values (g={g}, r={r}): {len(values)} relators")
    return values
