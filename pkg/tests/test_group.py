from itertools import product

import pytest

from icosa5.group import (
    ClosureError,
    GeneratorSet,
    WordParseError,
    evaluate_word,
    format_word,
    generate,
    parse_word,
    partition_by_cycle_type,
    shortest_word,
    verify_relations,
)
from icosa5.iso import A5_DOMAIN, a5_generators
from icosa5.perm import CycleType, Permutation, parse_cycles

GENS = ("D", "Y", "T")


def brute_force_words(gens, max_len):
    """Every element's lexicographically least shortest word, by plain enumeration."""
    found = {}
    ident = Permutation.identity(gens.domain)
    for n in range(max_len + 1):
        for w in product(gens.names, repeat=n):
            p = ident
            for name in w:
                p = p * gens[name]
            found.setdefault(p, w)
    return found


@pytest.fixture(scope="module")
def oracle(model):
    return brute_force_words(model.ico_generators, 6)


def test_orders(model):
    assert len(generate(model.ico_generators)) == 60
    assert len(generate(a5_generators())) == 60


def test_trivial_group():
    e = Permutation.identity(A5_DOMAIN)
    assert len(generate(GeneratorSet([("I", e)]))) == 1


def test_closure_bound():
    s5 = GeneratorSet([("s", parse_cycles("(1,2)", A5_DOMAIN)), ("c", parse_cycles("(1,2,3,4,5)", A5_DOMAIN))])
    assert len(generate(s5)) == 120
    with pytest.raises(ClosureError):
        generate(s5, bound=100)


def test_generator_set_validation():
    p = parse_cycles("(1,2,3)", A5_DOMAIN)
    with pytest.raises(ValueError):
        GeneratorSet([("a", p), ("a", p)])
    with pytest.raises(ValueError):
        GeneratorSet([])


def test_enumeration_is_breadth_first(model):
    lengths = [len(model.ico.word(g)) for g in model.ico]
    assert lengths == sorted(lengths)
    assert model.ico.elements[0].is_identity()


def test_evaluate_word_examples(model):
    gens = model.ico_generators
    assert evaluate_word(gens, tuple("DYDT")) == model.named["A"]
    assert evaluate_word(gens, ()) == Permutation.identity(gens.domain)
    a2 = "DYDT" * 2
    assert evaluate_word(gens, tuple("Y" + a2 + "Y" + "TDTY")) == model.named["X"]
    with pytest.raises(KeyError):
        evaluate_word(gens, ("Q",))


def test_shortest_words_match_brute_force(model, oracle):
    assert set(oracle) == set(model.ico)
    for g in model.ico:
        assert shortest_word(model.ico, g) == oracle[g]
        assert evaluate_word(model.ico_generators, shortest_word(model.ico, g)) == g


def test_cayley_diameter(model, oracle):
    # frozen from the enumeration oracle
    assert max(len(w) for w in oracle.values()) == 5
    assert model.ico.diameter() == 5
    layers = [sum(len(w) == n for w in oracle.values()) for n in range(6)]
    assert layers == [1, 3, 9, 18, 21, 8]


def test_shortest_word_for_a(model):
    w = shortest_word(model.ico, model.named["A"])
    assert len(w) <= 4
    assert w == ("Y", "Y", "T")
    assert shortest_word(model.ico, model.ico.identity) == ()


def test_shortest_word_rejects_outsiders(model):
    with pytest.raises(ValueError):
        shortest_word(model.ico, model.graph.antipode_permutation())


def test_same_words_on_both_sides(model):
    # the isomorphism preserves word length, so the Cayley graphs agree
    for g in model.ico:
        assert model.a5.word(model.hom(g)) == model.ico.word(g)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("DYDT", tuple("DYDT")),
        ("", ()),
        ("-", ()),
        ("I", ()),
        ("D^3", tuple("DDD")),
        ("D3", tuple("DDD")),
        ("(DT)^2", tuple("DTDT")),
        ("X2D", ("X", "X", "D")),
        ("YA^2YV", ("Y", "A", "A", "Y", "V")),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text, "DYTAVX") == expected


@pytest.mark.parametrize("text", ["DQ", "(DT", "DT)", "D^"])
def test_parse_word_errors(text):
    with pytest.raises(WordParseError):
        parse_word(text, GENS)


def test_format_word():
    assert format_word(()) == "-"
    assert format_word(("D", "Y")) == "DY"


RELATIONS = [parse_word(s, GENS) for s in ("D^3", "Y^3", "T^3", "(DT)^2", "(DY)^2", "(YT)^2")]


@pytest.mark.parametrize("side", ["ico", "a5"])
def test_presentation_relations_hold(model, side):
    gens = model.ico_generators if side == "ico" else model.a5_generators
    report = verify_relations(gens, [(w, ()) for w in RELATIONS])
    assert report.passed
    assert len(report.results) == 6


def test_false_relation_fails(model):
    report = verify_relations(model.ico_generators, [(("D", "D"), ())])
    assert not report.passed
    assert "FAIL" in str(report.results[0])


def test_partition_sizes(model):
    a5 = {k: len(v) for k, v in partition_by_cycle_type(model.a5).items()}
    assert a5 == {
        CycleType.of(k1=5): 1,
        CycleType.of(k1=2, k3=1): 20,
        CycleType.of(k1=1, k2=2): 15,
        CycleType.of(k5=1): 24,
    }
    ico = {k: len(v) for k, v in partition_by_cycle_type(model.ico).items()}
    assert ico == {
        CycleType.of(k1=12): 1,
        CycleType.of(k3=4): 20,
        CycleType.of(k2=6): 15,
        CycleType.of(k1=2, k5=2): 24,
    }


def test_partition_conjugation_invariant(model):
    for group in (model.ico, model.a5):
        for cls in partition_by_cycle_type(group).values():
            members = set(cls)
            for g in group:
                assert {g.inverse() * p * g for p in cls} == members


def test_generate_idempotent(model):
    again = generate(GeneratorSet((str(i), p) for i, p in enumerate(model.ico)))
    assert set(again) == set(model.ico)
