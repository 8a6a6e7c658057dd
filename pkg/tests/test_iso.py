from itertools import permutations

import pytest

from icosa5.icosa import classify_rotation
from icosa5.iso import (
    A5_DOMAIN,
    CLASS_CORRESPONDENCE,
    all_double_transposition_checks,
    build_a5,
    double_transposition_identity,
    extend_hom,
    full_correspondence,
    verify_isomorphism,
)
from icosa5.perm import CycleType, parse_cycles


def a5(text):
    return parse_cycles(text, A5_DOMAIN)


def test_build_a5():
    g = build_a5()
    assert len(g) == 60
    assert a5("(1,2,3)") in g
    assert all(p.is_even for p in g)
    # oracle: the even permutations of five points, by enumeration
    from icosa5.perm import Permutation
    evens = {p for p in (Permutation(A5_DOMAIN, imgs) for imgs in permutations(range(5))) if p.is_even}
    assert set(g) == evens


def test_generator_images(model):
    h = model.hom
    assert h(model.named["D"]) == a5("(1,4,5)")
    assert h(model.named["Y"]) == a5("(2,4,5)")
    assert h(model.named["T"]) == a5("(3,4,5)")
    assert h(model.ico.identity).is_identity()


def test_image_of_a(model):
    d, y, t = (a5(c) for c in ("(1,4,5)", "(2,4,5)", "(3,4,5)"))
    assert d * y * d * t == a5("(2,3,4)")
    assert model.hom(model.named["A"]) == a5("(2,3,4)")


def test_image_of_c(model):
    assert model.hom(model.named["C"]) == a5("(1,5,3)")
    assert model.hom(model.named["C"] ** 2) == a5("(1,3,5)")


def test_table2_isomorphism_passes(model):
    report = verify_isomorphism(model.hom)
    assert report.pairs_checked == 3600
    assert report.multiplicative_failures == 0
    assert report.injective and report.surjective and report.passed


def test_swapped_images_also_isomorphism(model):
    images = dict(model.a5_generators)
    images["D"], images["Y"] = images["Y"], images["D"]
    h = extend_hom(model.ico, images, model.a5)
    report = verify_isomorphism(h)
    assert report.passed
    assert h.element_map != model.hom.element_map


def test_order_mismatch_fails(model):
    images = dict(model.a5_generators)
    images["D"] = a5("(1,2,3,4,5)")
    report = verify_isomorphism(extend_hom(model.ico, images, model.a5))
    assert not report.multiplicative
    assert report.first_failure is not None
    assert not report.passed


def test_extend_hom_needs_all_images(model):
    with pytest.raises(ValueError):
        extend_hom(model.ico, {"D": a5("(1,4,5)")}, model.a5)


def test_preimage_is_inverse(model):
    h = model.hom
    for g in model.ico:
        assert h.preimage(h(g)) == g
    with pytest.raises(ValueError):
        h.preimage(a5("(1,2)"))


def test_preservation_properties(model, graph):
    h = model.hom
    for g in model.ico:
        assert h(g).order() == g.order()
        assert h(g.inverse()) == h(g).inverse()
        assert CLASS_CORRESPONDENCE[classify_rotation(g, graph).kind] == h(g).cycle_type()


def test_power_correspondence(model):
    images = []
    for i in range(1, 7):
        for k in range(1, 5):
            assert model.hom(model.s[i] ** k) == model.q[i] ** k
            images.append(model.q[i] ** k)
    assert len(set(images)) == 24
    assert all(p.cycle_type() == CycleType.of(k5=1) for p in images)
    assert model.q[1] == a5("(1,3,2,4,5)")


def test_correspondence_rows(model, graph):
    corr = full_correspondence(model.hom, graph)
    assert len(corr) == 60
    assert len({r.rotation for r in corr}) == 60
    assert len({r.image for r in corr}) == 60
    assert [r.rotation_class.kind for r in corr].count("identity") == 1
    assert corr.rows[0].rotation.is_identity() and corr.rows[0].image.is_identity()
    kinds = [r.rotation_class.kind for r in corr]
    assert kinds == ["identity"] + ["face"] * 20 + ["edge"] * 15 + ["vertex"] * 24

    by_rotation = {r.rotation: r for r in corr}
    yd = by_rotation[model.evaluate("YD")]
    assert yd.image == a5("(1,4)(2,5)")
    assert {frozenset(a) for a in yd.rotation_class.axis} == {frozenset({"2", "3"}), frozenset({"2''", "3''"})}

    s1 = by_rotation[model.evaluate("X^2D")]
    assert s1.image == a5("(1,3,2,4,5)")
    assert s1.rotation_class.kind == "vertex"
    assert s1.rotation_class.axis == (("1'",), ("1+",))


def test_correspondence_schema(model, graph):
    rows = full_correspondence(model.hom, graph).to_list()
    assert set(rows[0]) == {"word", "rotation_cycles", "class", "axis", "a5_cycles", "a5_class"}
    assert rows[0]["word"] == "-"
    assert rows[0]["a5_class"] == "k1=5"
    from icosa5.icosa import ICO_DOMAIN
    for row in rows:
        rotation = parse_cycles(row["rotation_cycles"], ICO_DOMAIN)
        assert parse_cycles(row["a5_cycles"], A5_DOMAIN) == model.hom(rotation)
        assert row["class"] == classify_rotation(rotation, graph).kind


def test_correspondence_words_certified(model, graph):
    from icosa5.group import evaluate_word
    for row in full_correspondence(model.hom, graph):
        assert evaluate_word(model.ico_generators, row.word) == row.rotation
        assert evaluate_word(model.a5_generators, row.word) == row.image


@pytest.mark.parametrize(
    "points, expected",
    [(("3", "1", "5", "4"), "(3,4)(1,5)"), (("4", "5", "2", "1"), "(4,1)(5,2)")],
)
def test_double_transposition_examples(points, expected):
    check = double_transposition_identity(*points)
    assert check.passed
    assert check.product == a5(expected)


def test_double_transposition_all_tuples():
    checks = all_double_transposition_checks()
    assert len(checks) == 120
    assert all(c.passed for c in checks)


def test_double_transposition_needs_distinct_points():
    with pytest.raises(ValueError):
        double_transposition_identity("1", "1", "2", "3")
