import os
import re
import subprocess
import sys

import pytest

import config
from errors import InconsistentTableError, InvalidParameterError, NoClassError, UnsupportedGenusError
from presentations import (
    GervaisLiftBuilder,
    Intersection,
    Presentation,
    WajnrybLiftBuilder,
    build_gervais_lift,
    build_wajnryb_lift,
    builder_for,
    good_triples,
    lantern_macros,
    relator_library,
    resolve_family,
)
from presentations.gervais import c_name
from processor import Relator


def total_exponent(word) -> int:
    return sum(e for _, e in word.letters)


# ─── Genus 2 ─────────────────────────────────────────────────────────

def test_genus2_generators_and_relators(genus2):
    assert genus2.generators == ("c1", "c2", "c3", "c4", "c5")
    assert genus2.g == 2 and genus2.r == 0
    assert len(genus2.relators_with_prefix("eq1.1")) == 6
    assert len(genus2.relators_with_prefix("eq1.2")) == 4
    assert "eq1.6" in genus2.labels and "eq1.7" in genus2.labels
    assert config.MU not in genus2.generators


# ─── Wajnryb lift ────────────────────────────────────────────────────

def test_wajnryb_generators(wajnryb31):
    assert wajnryb31.generators == tuple(f"c{i}" for i in range(8)) + ("mu",)


def test_wajnryb_relator_families(wajnryb31):
    assert len(wajnryb31.relators_with_prefix("eq1.1")) == 21
    assert len(wajnryb31.relators_with_prefix("eq1.2")) == 7
    # 3-chain relator plus one centrality relator per twist generator
    assert len(wajnryb31.relators_with_prefix("eq1.3")) == 1 + 8
    assert wajnryb31.labels.count("eq1.4") == 1
    assert "eq1.5" not in wajnryb31.labels


def test_wajnryb_closed_surface_adds_one_relator(wajnryb30, wajnryb31):
    assert len(wajnryb30.relators) == len(wajnryb31.relators) + 1
    assert "eq1.5" in wajnryb30.labels


def test_wajnryb_3chain_relator_carries_mu(wajnryb31):
    assert wajnryb31.relator("eq1.3").exponent_sum("mu") == -1
    assert wajnryb31.relator("eq1.4").exponent_sum("mu") == 0


@pytest.mark.parametrize("g, r", [(2, 1), (1, 0)])
def test_wajnryb_rejects_small_genus(g, r):
    with pytest.raises(UnsupportedGenusError, match="wajnryb requires g ≥ 3"):
        WajnrybLiftBuilder(g, r)


def test_wajnryb_rejects_many_boundaries():
    with pytest.raises(InvalidParameterError, match=re.escape("r ∈ {0,1}")):
        WajnrybLiftBuilder(3, 2)


def test_wajnryb_homology_classes():
    builder = WajnrybLiftBuilder(3, 1)
    assert builder.homology_class("c1") == (0, 0, 0, 1, 0, 0)
    assert builder.homology_class("c0") == (0, 0, 0, 0, 1, 0)
    assert builder.homology_class("c2") == (1, 0, 0, 0, 0, 0)
    assert builder.homology_class("c5") == (0, 0, 0, 0, -1, 1)
    assert builder.homology_class("c7") == (0, 0, 0, 0, 0, 1)
    with pytest.raises(NoClassError):
        builder.homology_class(config.MU)


def test_table_consistency_check_uses_the_pairing():
    class MisdrawnBuilder(WajnrybLiftBuilder):
        def intersection(self, x, y):
            if {x, y} == {"c1", "c3"}:
                return Intersection.ONE
            return super().intersection(x, y)

    with pytest.raises(InconsistentTableError, match=r"I\(c1, c3\)"):
        MisdrawnBuilder(3, 1).build()


def test_builders_do_not_pull_in_the_oracle():
    root = os.path.dirname(os.path.abspath(config.__file__))
    code = "import sys, presentations; assert 'symplectic' not in sys.modules"
    subprocess.run([sys.executable, "-c", code], cwd=root, check=True)


def test_chain_table():
    table = WajnrybLiftBuilder(3, 1).intersection_table()
    assert table["c0", "c4"] is Intersection.ONE
    assert table["c4", "c0"] is Intersection.ONE
    assert table["c3", "c4"] is Intersection.ONE
    assert table["c0", "c3"] is Intersection.ZERO
    assert table["c2", "c2"] is Intersection.MANY


def test_unknown_b3_variant():
    with pytest.raises(InvalidParameterError):
        WajnrybLiftBuilder(3, 1, b3_variant="folklore")
    with pytest.raises(InvalidParameterError):
        lantern_macros(WajnrybLiftBuilder(3, 1).alphabet, "folklore")


def test_b3_variants_differ_only_in_lantern():
    corrected = build_wajnryb_lift(3, 1)
    printed = build_wajnryb_lift(3, 1, b3_variant="printed")
    assert corrected.labels == printed.labels
    assert corrected.relator("eq1.4") != printed.relator("eq1.4")
    assert corrected.relator("eq1.3") == printed.relator("eq1.3")


def test_table_override_skips_consistency_check(caplog):
    builder = WajnrybLiftBuilder(3, 1, table_overrides={("c1", "c3"): Intersection.ONE})
    p = builder.build()
    assert "eq1.2[c1,c3]" in p.labels
    assert "eq1.1[c1,c3]" not in p.labels
    assert "override" in caplog.text


# ─── Gervais lift ────────────────────────────────────────────────────

def test_gervais_generators(gervais31):
    n = 2 * 3 + 1 - 2
    assert gervais31.generators[:3] == ("b", "b1", "b2")
    assert gervais31.generators[3:3 + n] == tuple(f"a{k}" for k in range(1, n + 1))
    assert len(gervais31.generators) == 1 + 2 + n + n * (n - 1) + 1
    assert gervais31.generators[-1] == config.MU


@pytest.mark.parametrize("g, r", [(3, 1), (3, 2), (4, 1)])
def test_gervais_star_count_matches_good_triples(g, r):
    p = build_gervais_lift(g, r)
    n = 2 * g + r - 2
    assert len(p.relators_with_prefix("thm4.iii")) == len(good_triples(n))
    handles = p.relators_with_prefix("thm4.i")
    assert len(handles) == 2 * (g - 1)
    assert len({rel.label.split(",")[0] for rel in handles}) == g - 1
    assert len(p.relators_with_prefix("thm4.iv")) == len(p.generators) - 1


def test_gervais_star_relator_word(gervais31):
    a = gervais31.alphabet
    expected = a.parse("c1_2 c2_3 c3_1 mu (a1 a2 a3 b)^-3")
    assert gervais31.relator("thm4.iii[1,2,3]").canonical_cyclic_form() == expected.canonical_cyclic_form()
    # c_ll is the identity
    expected = a.parse("c1_3 c3_1 mu (a1 a1 a3 b)^-3")
    assert gervais31.relator("thm4.iii[1,1,3]").canonical_cyclic_form() == expected.canonical_cyclic_form()


@pytest.mark.parametrize("i", [1, 2])
def test_gervais_handles_cover_both_signs(gervais31, i):
    a = gervais31.alphabet
    minus = a.parse(f"c{2 * i}_{2 * i - 1} c{2 * i + 1}_{2 * i}^-1")
    plus = a.parse(f"c{2 * i}_{2 * i + 1} c{2 * i - 1}_{2 * i}^-1")
    assert gervais31.relator(f"thm4.i[{i},-]") == minus
    assert gervais31.relator(f"thm4.i[{i},+]") == plus


def test_gervais_classes_and_table():
    builder = GervaisLiftBuilder(3, 1)
    a1, a2 = builder.homology_class("a1"), builder.homology_class("a2")
    c12 = builder.homology_class(c_name(1, 2))
    assert c12 == tuple(x - y for x, y in zip(a1, a2))
    assert builder.homology_class("b") == (0, 0, 0, 1, 0, 0)

    table = builder.intersection_table()
    assert table["a1", "b"] is Intersection.ONE
    assert table["a1", "a2"] is Intersection.ZERO
    assert table["b1", "a2"] is Intersection.ONE
    assert table["a1", c_name(1, 2)] is Intersection.ZERO
    assert table["a2", c_name(1, 3)] is Intersection.MANY
    assert table[c_name(1, 3), c_name(1, 2)] is Intersection.ZERO
    assert table[c_name(1, 3), c_name(2, 4)] is Intersection.MANY


@pytest.mark.parametrize("g, r", [(2, 1), (3, 0)])
def test_gervais_rejects_parameters(g, r):
    with pytest.raises(InvalidParameterError, match="gervais requires g ≥ 3, r ≥ 1"):
        GervaisLiftBuilder(g, r)


# ─── Good triples ────────────────────────────────────────────────────

def test_good_triples_small():
    assert good_triples(1) == []
    assert [tuple(t) for t in good_triples(2)] == [(1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 1, 1), (2, 1, 2), (2, 2, 1)]


def test_good_triples_rejects_zero():
    with pytest.raises(InvalidParameterError):
        good_triples(0)


# ─── Registry and library ────────────────────────────────────────────

def test_resolve_family():
    assert resolve_family("wajnryb") == config.FAMILY_WAJNRYB
    assert resolve_family(config.FAMILY_GERVAIS) == config.FAMILY_GERVAIS
    with pytest.raises(InvalidParameterError):
        resolve_family("humphries")


def test_builder_for_parameters():
    assert isinstance(builder_for("wajnryb", 4), WajnrybLiftBuilder)
    assert builder_for("gervais", 3).r == 1
    with pytest.raises(InvalidParameterError):
        builder_for("genus2", 3)
    with pytest.raises(InvalidParameterError):
        builder_for("wajnryb")


def test_relator_library_genus3():
    library = relator_library(3, 1)
    assert {"kappa_chain", "kappa_chain_eq13", "kappa_lantern", "eq1.5", "b0", "b1", "b2", "b3"} <= set(library)
    assert total_exponent(library["kappa_chain"]) == config.EPS_NS_KAPPA_CHAIN
    # three positive twists against four inverse ones
    assert total_exponent(library["kappa_lantern"]) == -config.EPS_NS_KAPPA_LANTERN


def test_relator_library_genus2():
    library = relator_library(2, 0)
    assert str(library["kappa_chain"]) == "c1 c2 c3 c1 c2 c3 c1 c2 c3 c1 c2 c3 c5^-2"
    assert library["kappa_lantern"].is_identity()
    assert total_exponent(library["kappa_chain"]) == config.EPS_NS_KAPPA_CHAIN


@pytest.mark.parametrize("g, r", [(1, 0), (2, 1), (2, 2), (3, 2)])
def test_relator_library_rejects(g, r):
    with pytest.raises(InvalidParameterError):
        relator_library(g, r)


def test_relator_library_genus2_defaults_to_closed():
    assert relator_library(2).keys() == relator_library(2, 0).keys()


def test_kappa_lantern_rotates_the_lantern_relator(wajnryb31):
    kappa = relator_library(3, 1)["kappa_lantern"]
    assert kappa.canonical_cyclic_form() == wajnryb31.relator("eq1.4").canonical_cyclic_form()


# ─── Presentation value type ─────────────────────────────────────────

def test_presentation_rejects_duplicate_labels(genus2):
    rel = genus2.relators[0]
    with pytest.raises(InvalidParameterError):
        Presentation("x", 2, 0, genus2.alphabet, (rel, Relator(rel.label, rel.word ** 2)))


def test_presentation_dict_form(wajnryb31):
    again = Presentation.from_dict(wajnryb31.to_dict())
    assert again.generators == wajnryb31.generators
    assert again.relators == wajnryb31.relators


def test_with_relators_appends_and_dedups(genus2):
    kappa = relator_library(2, 0)["kappa_chain"]
    p = genus2.with_relators({"kappa": kappa, "kappa-again": kappa ** -1})
    assert p.labels[-1] == "kappa"
    assert len(p.relators) == len(genus2.relators) + 1


def test_quotient_removes_mu(wajnryb31):
    base = wajnryb31.quotient()
    assert config.MU not in base.generators
    assert [rel.label for rel in base.relators_with_prefix("eq1.3")] == ["eq1.3"]
    assert len(base.relators) == 30
