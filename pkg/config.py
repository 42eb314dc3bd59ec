"""
Configuration module for the mapping class group toolkit.
Centralizes the constants shared by the builders, the verifiers,
the central-element calculus and the exporters.
"""

import os

# ─── Generators ──────────────────────────────────────────────────────
MU = "mu"  # central generator of every lifted presentation

# ─── Presentation Families ───────────────────────────────────────────
FAMILY_WAJNRYB = "wajnryb-lift"
FAMILY_GERVAIS = "gervais-lift"
FAMILY_GENUS2 = "genus2"

# Short names accepted on the command line
FAMILY_ALIASES = {
    "wajnryb": FAMILY_WAJNRYB,
    "gervais": FAMILY_GERVAIS,
    "genus2": FAMILY_GENUS2,
}

# ─── Lantern Conjugator (b3) ─────────────────────────────────────────
# b3 = Z^-1 c0 Z. Both variants are written over c1..c6 and the macro b1.
# "corrected" is checked only through its image in Sp(2g, Z), i.e. up to
# its action on homology. "printed" fails the lantern relator there under
# both twist signs and both evaluation orders, see DESIGN.md.
B3_CONJUGATORS = {
    "corrected": "c4 b1 c6 c2^-1 b1^-1 c4^-1 c1^-1 c2^-1 b1^-1 c6^-1",
    "printed": "c6 c5 c4 c3 c2 c5^-1 c6^-1 b1 c6 c5 c1^-1 c2^-1 c3^-1 c4^-1",
}
DEFAULT_B3_VARIANT = "corrected"

# ─── Central Constants ───────────────────────────────────────────────
# Endo-Nagami values of the two distinguished central elements
IG_KAPPA_CHAIN = -6
IG_KAPPA_LANTERN = 1

# Net non-separating counts, forced by the center-generator identity
EPS_NS_KAPPA_CHAIN = 10
EPS_NS_KAPPA_LANTERN = 1

# kappa_chain * kappa_lantern^10 generates the center
CENTER_GENERATOR_LANTERN_POWER = 10
EXPECTED_CENTER_GENERATOR = (4, 0)  # (I_g, eps_ns)

# Star relators of the Gervais lift map to (5 - N, 9 - N)
STAR_IG_BASE = 5
STAR_EPS_NS_BASE = 9

# Genus-2 splitting (a, b, c) -> (12a + c, b)
GENUS2_SPLIT_NS_WEIGHT = 12

# ─── Solver Divisors ─────────────────────────────────────────────────
CHAIN_DIVISOR = 4         # N_C = (m - sigma) / 4 for g >= 3
GENUS2_DIVISOR = 6        # N_C = (sigma - m + m_ns) / 6 for g = 2
LANTERN_NS_WEIGHT = 10    # m_ns = N_L + 10 N_C
CHAIN_SIGMA_WEIGHT = 6    # sigma = N_L + 6 N_C + m - m_ns

# ─── Computer Algebra Export ─────────────────────────────────────────
CAS_DIALECTS = ("gap", "magma")
DEFAULT_CAS_DIALECT = "gap"

# ─── Exit Codes ──────────────────────────────────────────────────────
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# ─── Output ──────────────────────────────────────────────────────────
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
OUTPUT_DIR = os.path.join(BASE_DIR, "output")
OUTPUT_FILE = os.path.join(OUTPUT_DIR, "presentation.xlsx")
OUTPUT_CSV = os.path.join(OUTPUT_DIR, "presentation.csv")

JSON_INDENT = 2

# ─── Column Names (tabular exports) ──────────────────────────────────
RELATOR_COLUMNS = [
    "Label",
    "Kind",
    "Length",
    "Syllables",
    "Word",
]

REPORT_COLUMNS = [
    "Label",
    "Kind",
    "Status",
    "Scalar",
    "Deviation",
]

# Relator kind, read off the label prefix
RELATOR_KINDS = {
    "eq1.1": "commutation",
    "eq1.2": "braid",
    "eq1.3": "3-chain",
    "eq1.4": "lantern",
    "eq1.5": "closed",
    "eq1.6": "genus-2 chain",
    "eq1.7": "genus-2 hyperelliptic",
    "thm4.i": "handle",
    "thm4.ii": "braid",
    "thm4.iii": "star",
    "thm4.iv": "centralization",
    "extra": "extra",
}

STATUS_COLORS = {
    "pass": "C6EFCE",   # Green
    "fail": "FFC7CE",   # Red
    "scalar": "FFF2CC",  # Light yellow
}

HEADER_COLOR = "2B579A"

# ─── Logging ─────────────────────────────────────────────────────────
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
