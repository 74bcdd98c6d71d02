import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import posets
from posetcong.boolean import (
    check_reflexive_compatible_is_boolean_congruence,
    complements,
    distributive_identity,
    distributive_violation,
    enumerate_boolean_congruences,
    filter_kernel_status,
    find_complementation,
    is_boolean,
    is_boolean_congruence,
    is_distributive,
    lemma2_kernel_exclusion,
    pixley_T,
    theorem2_checks,
    undefined_join_pairs,
    weak_regularity,
)
from posetcong.congruence import (
    CongruenceError,
    EquivRelation,
    enumerate_congruences,
    format_relation,
    kernel,
    parse_relation,
)
from posetcong.corpus import boolean_lattice, random_boolean_poset, random_bounded_poset
from posetcong.io import load_bundled
from posetcong.poset import ElementSet, build_poset, sup

FIG4_CONGRUENCES = ["[0,a'][a,1]", "[0,b'][b,1]", "[0,c'][c,1]", "[0,d'][d,1]"]

FIG6_CONGRUENCES = [
    "[0,e][c,d'][d,c'][e',1]",
    "[0,e'][a,b'][b,a'][e,1]",
    "[0,c'][c,1]",
    "[0,d'][d,1]",
    "[0,a'][a,1]",
    "[0,b'][b,1]",
]


def labels(P, pairs):
    return [(P.labels[x], P.labels[y]) for x, y in pairs]


# -- distributivity ---------------------------------------------------------------


def test_distributive_examples(fig1, fig4, fig6):
    assert is_distributive(fig4.poset)
    assert is_distributive(fig6.poset)
    assert is_distributive(load_bundled("chain2").poset)
    # fig1 is relatively pseudocomplemented, hence distributive
    assert is_distributive(fig1.poset)


def test_non_distributive_lattices():
    n5 = build_poset(list("0abc1"), [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    m3 = build_poset(list("0abc1"), [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])
    for P in (n5, m3):
        assert not is_distributive(P)
        assert all(not distributive_identity(P, k) for k in (1, 2, 3, 4))
    # L(U(a,b),c) = {0,c} while LU(L(a,c),L(b,c)) = {0}
    x, y, z = distributive_violation(m3, 1)
    assert (m3.labels[x], m3.labels[y], m3.labels[z]) == ("a", "b", "c")
    with pytest.raises(ValueError):
        distributive_violation(m3, 5)


@settings(max_examples=60, deadline=None)
@given(posets(max_size=7))
def test_distributive_identities_agree(P):
    vals = {distributive_identity(P, k) for k in (1, 2, 3, 4)}
    assert len(vals) == 1


def test_distributive_identities_agree_bounded():
    rng = random.Random(2)
    for _ in range(60):
        P = random_bounded_poset(rng.randint(1, 6), rng, p=rng.choice([0.2, 0.4]))
        assert len({distributive_identity(P, k) for k in (1, 2, 3, 4)}) == 1


# -- complementation ----------------------------------------------------------------


def test_fig4_complementation(fig4):
    P = fig4.poset
    c = find_complementation(P)
    pairs = {(P.labels[x], P.labels[c(x)]) for x in range(P.n)}
    for x in ("a", "b", "c", "d"):
        assert (x, x + "'") in pairs and (x + "'", x) in pairs
    assert ("0", "1") in pairs and ("1", "0") in pairs


def test_two_chain_complementation():
    P = load_bundled("chain2").poset
    assert find_complementation(P).comp == (1, 0)


def test_fig1_not_complemented(fig1):
    P = fig1.poset
    assert not complements(P, P.index("a"))
    assert find_complementation(P) is None
    assert not is_boolean(P)


def test_complements_need_bounds():
    with pytest.raises(CongruenceError):
        complements(build_poset(["a", "b"], []), 0)


def test_boolean_examples(fig4, fig6):
    assert is_boolean(fig4.poset) and is_boolean(fig6.poset)
    assert is_boolean(load_bundled("bool3").poset)
    assert not is_boolean(load_bundled("chain3").poset)


def test_complements_unique_on_distributive_bundled():
    for name in ("fig1", "fig3", "fig4", "fig6", "bool1", "bool2", "bool3", "chain3"):
        P = load_bundled(name).poset
        if P.bounded and is_distributive(P):
            assert all(len(complements(P, x)) <= 1 for x in range(P.n))


def test_random_boolean_posets_are_boolean():
    rng = random.Random(4)
    for k in (2, 3, 4):
        for _ in range(5):
            P = random_boolean_poset(k, rng)
            assert is_boolean(P)
    for _ in range(3):
        P = random_boolean_poset(4, rng, non_lattice=True)
        assert is_boolean(P)
        assert any(sup(P, x, y) is None for x in range(P.n) for y in range(P.n))


# -- Boolean congruences ------------------------------------------------------------


def test_fig4_boolean_congruences(fig4):
    P = fig4.poset
    family = enumerate_boolean_congruences(P, fig4.comp)
    assert sorted(format_relation(P, t) for t in family.members[1:-1]) == sorted(FIG4_CONGRUENCES)
    assert len(family) == 6
    assert family.members == enumerate_congruences(P).members


def test_fig4_meet_is_not_intersection(fig4):
    P = fig4.poset
    family = enumerate_boolean_congruences(P, fig4.comp)
    t1 = family.index(parse_relation(P, "[0,a'][a,1]"))
    t2 = family.index(parse_relation(P, "[0,b'][b,1]"))
    assert family.names[family.meet(t1, t2)] == "delta"
    inter = family.members[t1].intersection(family.members[t2])
    assert format_relation(P, inter) == "{0,c,d}[a,b'][b,a']{d',c',1}"


def test_fig6_boolean_congruences(fig6):
    P = fig6.poset
    family = enumerate_boolean_congruences(P, fig6.comp)
    got = sorted(format_relation(P, t) for t in family.members[1:-1])
    assert got == sorted(FIG6_CONGRUENCES)


def test_fig6_listed_relations_that_fail(fig6):
    # two further relations of the worked example are not compatible with Max L
    P = fig6.poset
    i = P.index
    t1 = parse_relation(P, "[0,a][b,e][c,d'][d,c'][e',b'][a',1]")
    t2 = parse_relation(P, "[0,d][c,e'][b,a'][a,b'][e,c'][d',1]")
    assert not is_boolean_congruence(P, fig6.comp, t1)
    assert not is_boolean_congruence(P, fig6.comp, t2)
    # (b,b), (c,d') in t1 but Max L(b,c) = {0}, Max L(b,d') = {b} and (0,b) not in t1
    assert P.max_l_table[i("b")][i("c")] == 1 << i("0")
    assert P.max_l_table[i("b")][i("d'")] == 1 << i("b")
    assert t1.related(i("c"), i("d'")) and not t1.related(i("0"), i("b"))


def test_two_chain_boolean_congruences():
    doc = load_bundled("chain2")
    assert len(enumerate_boolean_congruences(doc.poset, doc.comp)) == 2


# -- Pixley operator ------------------------------------------------------------------


def test_pixley_examples(fig4, fig6):
    P = fig4.poset
    i = P.index
    assert P.names(pixley_T(P, fig4.comp, i("a"), i("b"), i("a"))) == ["a"]
    Q = fig6.poset
    j = Q.index
    assert set(Q.names(pixley_T(Q, fig6.comp, j("a"), j("b"), j("c")))) == {"d'", "b'"}


def test_pixley_laws():
    posets_ = [load_bundled(n) for n in ("fig4", "fig6", "bool1", "bool2", "bool3")]
    extra = [boolean_lattice(4)]
    for P, comp in [(d.poset, d.comp) for d in posets_] + [(B, find_complementation(B)) for B in extra]:
        for x, y in itertools.product(range(P.n), repeat=2):
            assert pixley_T(P, comp, x, y, y) == ElementSet.of([x])
            assert pixley_T(P, comp, x, y, x) == ElementSet.of([x])
            assert pixley_T(P, comp, x, x, y) == ElementSet.of([y])


# -- kernels ----------------------------------------------------------------------------


def test_lemma2_fig4(fig4):
    P = fig4.poset
    i = P.index
    ex = lemma2_kernel_exclusion(P, i("a'"), fig4.comp)
    assert i("b'") in ex.criterion_i
    assert P.names(ex.criterion_i) == ["d'", "c'", "b'"]
    assert P.names(P.max_l_table[i("a'")][i("b'")]) == ["c", "d"]
    assert sup(P, i("b'"), i("d'")) == i("1") and sup(P, i("b'"), i("c'")) == i("1")
    assert not lemma2_kernel_exclusion(P, i("1"), fig4.comp).excluded


def test_lemma2_fig6(fig6):
    P = fig6.poset
    i = P.index
    ex = lemma2_kernel_exclusion(P, i("b'"), fig6.comp)
    assert i("c") in ex.criterion_ii
    assert P.names(P.min_u_table[i("b")][i("c")]) == ["d'", "a'"]
    assert sup(P, i("a'"), i("d'")) == i("1") and sup(P, i("d'"), i("e'")) == i("1")


def test_filter_kernel_status(fig4, fig6):
    P = fig4.poset
    family = enumerate_congruences(P)
    for x in ("a'", "b'", "c'", "d'"):
        assert filter_kernel_status(P, family, P.upset(P.index(x))) == []
    (t,) = filter_kernel_status(P, family, P.upset(P.index("a")))
    assert format_relation(P, t) == "[0,a'][a,1]"
    assert filter_kernel_status(P, family, P.elements("1")) == [EquivRelation.delta(P.n)]
    Q = fig6.poset
    family6 = enumerate_congruences(Q)
    for x in ("b'", "c'"):
        assert filter_kernel_status(Q, family6, Q.upset(Q.index(x))) == []
        assert lemma2_kernel_exclusion(Q, Q.index(x), fig6.comp).excluded


def test_lemma2_sound_on_random_boolean_posets():
    rng = random.Random(8)
    for k in (3, 3, 4, 4):
        P = random_boolean_poset(k, rng)
        comp = find_complementation(P)
        kernels = {kernel(P, t).mask for t in enumerate_congruences(P)}
        for a in range(P.n):
            if lemma2_kernel_exclusion(P, a, comp).excluded:
                assert P.up[a] not in kernels


# -- kernel tests and weak regularity ------------------------------------------------


def test_theorem2(fig4, fig6):
    for doc in (fig4, fig6):
        for t in enumerate_boolean_congruences(doc.poset, doc.comp):
            assert theorem2_checks(doc.poset, doc.comp, t).ok
    P = fig4.poset
    t = parse_relation(P, "[0,a'][a,1]")
    i = P.index
    assert P.min_u_table[i("a")][fig4.comp(i("1"))] == 1 << i("a")
    assert i("a") in kernel(P, t)


def test_weak_regularity(fig6):
    P, comp = fig6.poset, fig6.comp
    family = enumerate_boolean_congruences(P, comp)
    for t in family:
        assert weak_regularity(P, comp, t, t) == "consistent"
    for t, u in itertools.combinations(family.members, 2):
        assert weak_regularity(P, comp, t, u) == "n/a"


def test_undefined_join_pairs(fig4, fig6):
    Q = fig6.poset
    expected = {(x, y) for x in ("a", "b") for y in ("c'", "d'")}
    expected |= {(x, y) for x in ("c", "d") for y in ("a'", "b'")}
    assert set(labels(Q, undefined_join_pairs(Q, fig6.comp))) == expected
    B = load_bundled("bool3")
    assert undefined_join_pairs(B.poset, B.comp) == []
    P = fig4.poset
    assert labels(P, undefined_join_pairs(P, fig4.comp)) == [
        ("a", "d'"), ("a", "c'"), ("a", "b'"),
        ("b", "d'"), ("b", "c'"), ("b", "a'"),
        ("c", "d'"), ("c", "b'"), ("c", "a'"),
        ("d", "c'"), ("d", "b'"), ("d", "a'"),
    ]


def test_reflexive_compatible_boolean(fig4):
    P, comp = fig4.poset, fig4.comp
    R = parse_relation(P, "[0,b'][b,1]").pair_set()
    v = check_reflexive_compatible_is_boolean_congruence(P, comp, R)
    assert v.compatible and v.congruence
    d = EquivRelation.delta(P.n).pair_set()
    assert check_reflexive_compatible_is_boolean_congruence(P, comp, d).congruence
    rng = random.Random(6)
    others = list(itertools.permutations(range(P.n), 2))
    for _ in range(200):
        R = d | set(rng.sample(others, rng.randint(1, 20)))
        assert check_reflexive_compatible_is_boolean_congruence(P, comp, R).holds
    with pytest.raises(CongruenceError):
        check_reflexive_compatible_is_boolean_congruence(P, comp, {(0, 1)})
