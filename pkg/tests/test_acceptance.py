"""End-to-end properties of the toolkit on the supported parameter ranges."""

from itertools import product

import pytest
import sympy

import config
from central import CentralExponents, forward_counts, generator_check, kappa_chain, kappa_lantern, solve_from_counts
from intmat import AbelianInvariants, abelianize
from presentations import build_genus2, build_gervais_lift, build_wajnryb_lift, good_triples, relator_library
from presentations.triples import is_good
from processor import diff_relators, read_relator_text
from symplectic import load_assignment, verify_presentation_sp, verify_projective_rep

WAJNRYB_RANGE = [(g, r) for g in range(3, 7) for r in (0, 1)]
GERVAIS_RANGE = [(g, r) for g in range(3, 6) for r in range(1, 4)]


@pytest.mark.parametrize("g, r", WAJNRYB_RANGE)
def test_wajnryb_relators_are_identity_in_sp(g, r):
    report = verify_presentation_sp(build_wajnryb_lift(g, r))
    assert report.passed, report.failures


@pytest.mark.parametrize("g, r", GERVAIS_RANGE)
def test_gervais_relators_are_identity_in_sp(g, r):
    report = verify_presentation_sp(build_gervais_lift(g, r))
    assert report.passed, report.failures


def test_genus2_relators_are_identity_in_sp():
    assert verify_presentation_sp(build_genus2()).passed


@pytest.mark.parametrize("g, r", [(g, r) for g in (3, 4, 5) for r in (0, 1)])
def test_wajnryb_lift_is_perfect(g, r):
    assert abelianize(build_wajnryb_lift(g, r)).is_trivial


@pytest.mark.parametrize("g", [3, 4])
def test_gervais_lift_is_perfect(g):
    assert abelianize(build_gervais_lift(g, 1)).is_trivial


def test_genus2_homology_is_z10():
    p = build_genus2()
    assert abelianize(p.with_relators({"kappa_chain": relator_library(2, 0)["kappa_chain"]})) == AbelianInvariants((10,), 0)


def test_central_constants():
    assert kappa_chain().ig == -6
    assert kappa_lantern().ig == 1
    report = generator_check()
    assert (report["ig"], report["eps_ns"]) == (4, 0)
    assert tuple(report["expected"]) == config.EXPECTED_CENTER_GENERATOR


def test_solver_round_trip_all_exponents():
    for n_chain, n_lantern in product(range(-20, 21), repeat=2):
        m_ns = n_lantern + 10 * n_chain
        if m_ns < 0:
            continue
        exponents = CentralExponents(n_chain, n_lantern)
        sigma, m, m_ns = forward_counts(3, exponents, m_ns + 3)
        assert solve_from_counts(3, sigma, m, m_ns) == exponents
    for n_chain in range(-20, 21):
        exponents = CentralExponents(n_chain, 0)
        sigma, m, m_ns = forward_counts(2, exponents, 8, 5)
        assert solve_from_counts(2, sigma, m, m_ns) == exponents


@pytest.mark.parametrize("n", range(1, 13))
def test_good_triples_match_brute_force(n):
    brute = [
        (i, j, k) for i, j, k in product(range(1, n + 1), repeat=3)
        if not i == j == k and (i <= j <= k or j <= k <= i or k <= i <= j)
    ]
    triples = [tuple(t) for t in good_triples(n)]
    assert triples == brute
    assert all(is_good(*t) for t in triples)
    assert not any(i == j == k for i, j, k in triples)


def test_representation_checker_discriminates(wajnryb31, fixtures_dir):
    plain = verify_projective_rep(wajnryb31, load_assignment(f"{fixtures_dir}/sp_assignment_w31.json"))
    assert plain.linear

    scaled = verify_projective_rep(wajnryb31, load_assignment(f"{fixtures_dir}/sp_assignment_w31_scaled.json"))
    scalars = scaled.scalars()
    assert scalars["eq1.3"] == 1
    lam = sympy.Rational(1, 2)
    assert scalars["eq1.4"] == lam ** -1
    assert not scaled.linear and scaled.projective


@pytest.mark.parametrize("name, fixture_file", [("wajnryb31", "wajnryb_m31.txt"), ("gervais31", "gervais_m31.txt")])
def test_base_quotient_matches_fixture(name, fixture_file, fixtures_dir, request):
    with open(f"{fixtures_dir}/{fixture_file}", encoding="utf-8") as f:
        alphabet, expected = read_relator_text(f.read())

    base = request.getfixturevalue(name).quotient()
    assert base.alphabet == alphabet
    assert base.labels == [rel.label for rel in expected]
    diff = diff_relators(base.relators, expected)
    assert diff.is_empty, diff
