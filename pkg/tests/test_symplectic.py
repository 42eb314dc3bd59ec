import json
import random

import pytest
import sympy

import config
from errors import (
    DimensionError,
    InvalidAssignmentError,
    MissingAssignmentError,
    NoClassError,
    ParseError,
)
from homology import HomologyClass, symplectic_form, symplectic_pairing
from presentations import GervaisLiftBuilder, Intersection, WajnrybLiftBuilder, build_wajnryb_lift
from symplectic import (
    SymplecticElement,
    assignment_from_json,
    assignment_to_json,
    curve_class,
    evaluate,
    fault_override,
    is_symplectic,
    kappa_order_check,
    load_assignment,
    save_assignment,
    scaled_assignment,
    symplectic_assignment,
    to_rational_assignment,
    transvection,
    verify_presentation_sp,
    verify_projective_rep,
)


# ─── Pairing and transvections ───────────────────────────────────────

def test_pairing_on_basis():
    x1, y1 = (1, 0, 0, 0), (0, 0, 1, 0)
    assert symplectic_pairing(x1, y1) == 1
    assert symplectic_pairing(y1, x1) == -1
    assert symplectic_pairing(x1, (0, 0, 0, 1)) == 0
    with pytest.raises(DimensionError):
        symplectic_pairing((1, 0), (1, 0, 0, 0))


def test_symplectic_form_shape():
    J = symplectic_form(2)
    assert J.shape == (4, 4)
    assert J[0, 2] == 1 and J[2, 0] == -1


def test_homology_class_requires_even_length():
    with pytest.raises(DimensionError):
        HomologyClass((1, 0, 0))
    assert HomologyClass((0, 0)).is_zero()
    assert (-HomologyClass((1, -2))).coords == (-1, 2)


def test_transvection_matrix_genus1():
    assert transvection((0, 1)).tolist() == [[1, 0], [1, 1]]
    assert transvection((1, 0)).tolist() == [[1, -1], [0, 1]]


def test_transvection_acts_by_pairing():
    rng = random.Random(3)
    g = 3
    for _ in range(30):
        v = [rng.randint(-3, 3) for _ in range(2 * g)]
        x = [rng.randint(-5, 5) for _ in range(2 * g)]
        T = transvection(v, g)
        assert is_symplectic(T)
        image = list(T.matrix.dot(x))
        expected = [xi + symplectic_pairing(x, v) * vi for xi, vi in zip(x, v)]
        assert image == expected
        assert (T @ T.inverse()).is_identity()


def test_transvection_ignores_orientation():
    rng = random.Random(5)
    for _ in range(30):
        v = [rng.randint(-3, 3) for _ in range(6)]
        assert transvection(v) == transvection([-x for x in v])


@pytest.mark.parametrize("builder", [WajnrybLiftBuilder(3, 1), GervaisLiftBuilder(3, 1)], ids=["wajnryb", "gervais"])
def test_disjoint_curves_commute(builder):
    images = {name: transvection(builder.homology_class(name), 3) for name in builder.twist_generators()}
    disjoint = [(x, y) for x, y, entry in builder.table().pairs() if entry is Intersection.ZERO]
    assert disjoint
    for x, y in disjoint:
        assert images[x] @ images[y] == images[y] @ images[x], (x, y)


def test_transvection_dimension_errors():
    with pytest.raises(DimensionError):
        transvection((1, 0, 0))
    with pytest.raises(DimensionError):
        transvection((1, 0), g=2)


def test_non_symplectic_matrix():
    assert not is_symplectic([[2, 0], [0, 1]])
    assert not is_symplectic([[1, 0, 0]])


def test_curve_class():
    assert curve_class("wajnryb", "c1", 3, 1).coords == (0, 0, 0, 1, 0, 0)
    assert curve_class("genus2", "c2").coords == (1, 0, 0, 0)
    with pytest.raises(NoClassError):
        curve_class("wajnryb", config.MU, 3, 1)
    with pytest.raises(NoClassError):
        curve_class("gervais", "zz", 3, 1)


def test_evaluate_left_to_right(genus2):
    a = genus2.alphabet
    assignment = symplectic_assignment(genus2)
    word = a.parse("c1 c2^-1")
    expected = assignment["c1"] @ assignment["c2"].inverse()
    assert evaluate(word, assignment) == expected
    assert evaluate(a.identity(), assignment).is_identity()


def test_evaluate_missing_generator(genus2):
    with pytest.raises(MissingAssignmentError):
        evaluate(genus2.alphabet.parse("c1"), {})
    with pytest.raises(MissingAssignmentError):
        evaluate(genus2.alphabet.parse("c1 c5"), {"c1": SymplecticElement.identity(2)})


# ─── Relator identity oracle ─────────────────────────────────────────

def test_mu_maps_to_identity(wajnryb31):
    assert symplectic_assignment(wajnryb31)[config.MU].is_identity()


@pytest.mark.parametrize("name", ["genus2", "wajnryb31", "wajnryb30", "gervais31"])
def test_presentations_pass(name, request):
    p = request.getfixturevalue(name)
    report = verify_presentation_sp(p)
    assert report.passed, report.failures
    assert len(report.results) == len(p.relators)


def test_printed_b3_fails_only_the_lantern():
    report = verify_presentation_sp(build_wajnryb_lift(3, 1, b3_variant="printed"))
    assert report.failures == ["eq1.4"]
    assert report.to_dict()["passed"] is False


@pytest.mark.parametrize("variant, holds", [("corrected", True), ("printed", False)])
def test_lantern_under_every_twist_convention(variant, holds):
    p = build_wajnryb_lift(3, 1, b3_variant=variant)
    positive = symplectic_assignment(p)
    negative = {name: m.inverse() for name, m in positive.items()}
    lantern = p.relator("eq1.4")
    # a right-to-left product equals the inverse word read left to right under inverted twists
    for assignment, word in [(positive, lantern), (negative, lantern), (negative, ~lantern), (positive, ~lantern)]:
        assert evaluate(word, assignment).is_identity() == holds


def test_injected_fault_is_caught():
    builder = WajnrybLiftBuilder(3, 1)
    overrides = fault_override(builder)
    assert list(overrides.values()) == [Intersection.ONE]
    faulty = WajnrybLiftBuilder(3, 1, table_overrides=overrides).build()
    report = verify_presentation_sp(faulty)
    assert not report.passed
    (x, y), = overrides
    assert f"eq1.2[{x},{y}]" in report.failures


def test_kappa_orderings_agree_in_sp():
    assert kappa_order_check(3) == {"g": 3, "same_image": True, "chain_is_identity": True}


# ─── Projective representations ──────────────────────────────────────

def test_symplectic_fixture_matches_assignment(wajnryb31, fixtures_dir):
    loaded = load_assignment(f"{fixtures_dir}/sp_assignment_w31.json")
    assert loaded == to_rational_assignment(symplectic_assignment(wajnryb31))


def test_scaled_fixture_matches_assignment(wajnryb31, fixtures_dir):
    loaded = load_assignment(f"{fixtures_dir}/sp_assignment_w31_scaled.json")
    assert loaded == scaled_assignment(wajnryb31, sympy.Rational(1, 2))


def test_scalar_depends_on_exponent_sums(wajnryb31):
    lam = sympy.Rational(3)
    report = verify_projective_rep(wajnryb31, scaled_assignment(wajnryb31, lam))
    assert report.projective
    scalars = report.scalars()
    assert scalars["eq1.3"] == 1
    assert scalars["eq1.4"] == lam ** -1
    assert report.non_unit == ["eq1.4"]


def test_non_scalar_image_reports_deviation(genus2):
    assignment = {name: sympy.eye(2) for name in genus2.generators}
    assignment["c1"] = sympy.Matrix([[1, 1], [0, 1]])
    assignment["c2"] = sympy.Matrix([[1, 0], [1, 1]])
    report = verify_projective_rep(genus2, assignment)
    assert not report.projective
    assert "eq1.2[c1,c2]" in report.failures
    failed = next(r for r in report.results if r.label == "eq1.2[c1,c2]")
    assert failed.deviation > 0
    assert failed.to_dict()["scalar"] is None


def test_assignment_validation(genus2):
    good = {name: sympy.eye(2) for name in genus2.generators}

    with pytest.raises(MissingAssignmentError):
        verify_projective_rep(genus2, {k: v for k, v in good.items() if k != "c3"})
    with pytest.raises(DimensionError):
        verify_projective_rep(genus2, {**good, "c3": sympy.eye(3)})
    with pytest.raises(InvalidAssignmentError):
        verify_projective_rep(genus2, {**good, "c3": sympy.zeros(2, 2)})


def test_scaled_assignment_rejects_zero(wajnryb31):
    with pytest.raises(InvalidAssignmentError):
        scaled_assignment(wajnryb31, 0)


# ─── Assignment files ────────────────────────────────────────────────

@pytest.mark.parametrize("data", [{}, [], {"dimension": 0, "matrices": {"a": []}}, {"dimension": 1, "matrices": {}}])
def test_assignment_json_structure_errors(data):
    with pytest.raises(ParseError):
        assignment_from_json(data)


def test_assignment_json_entry_errors():
    with pytest.raises(DimensionError):
        assignment_from_json({"dimension": 2, "matrices": {"a": [["1", "0"]]}})
    with pytest.raises(ParseError):
        assignment_from_json({"dimension": 1, "matrices": {"a": [["x/y"]]}})
    with pytest.raises(ParseError):
        assignment_from_json({"dimension": 1, "matrices": {"a": [[0.5]]}})


def test_assignment_file_roundtrip(tmp_path):
    assignment = {"a": sympy.Matrix([[sympy.Rational(1, 3), 0], [2, -1]])}
    path = tmp_path / "a.json"
    save_assignment(assignment, str(path))
    assert json.loads(path.read_text())["matrices"]["a"] == [["1/3", "0"], ["2", "-1"]]
    assert load_assignment(str(path)) == assignment


def test_load_assignment_rejects_bad_json(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("")
    with pytest.raises(ParseError):
        load_assignment(str(path))
    assert assignment_to_json({"m": sympy.eye(1)}) == {"dimension": 1, "matrices": {"m": [["1"]]}}
