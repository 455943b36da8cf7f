import pytest

import oracles
from genex.group import Group, coset_action, direct_product
from genex.perm import parse_permutation
from genex.structure import (
    MaximalSubgroupReport,
    all_subgroups,
    classify_maximal,
    derived_series,
    fitting_subgroup,
    frattini,
    is_maximal,
    is_nilpotent,
    is_primitive,
    is_solvable,
    is_transitive,
    lower_central_series,
    minimal_block,
    minimal_normal_subgroups,
    socle,
    subgroup_classes_up_to,
)


def P(text, degree):
    return parse_permutation(text, degree)


def make(texts, degree):
    return Group([P(t, degree) for t in texts], degree)


S4 = make(["(1,2,3,4)", "(1,2)"], 4)
A4 = make(["(1,2,3)", "(1,2)(3,4)"], 4)
A5 = make(["(1,2,3,4,5)", "(3,4,5)"], 5)
S5 = make(["(1,2,3,4,5)", "(1,2)"], 5)
C6 = make(["(1,2,3,4,5,6)"], 6)
Q8 = make(["(1,3,2,4)(5,7,6,8)", "(1,5,2,6)(3,8,4,7)"], 8)
D4 = make(["(1,2,3,4)", "(1,3)"], 4)
S3 = make(["(1,2,3)", "(1,2)"], 3)


def test_derived_series_abelian():
    series = derived_series(C6)
    assert [g.order() for g in series] == [6, 1]


def test_derived_series_s4():
    assert [g.order() for g in derived_series(S4)] == [24, 12, 4, 1]


def test_derived_series_a5_stable():
    series = derived_series(A5)
    assert [g.order() for g in series] == [60]
    assert not is_solvable(A5)
    assert is_solvable(S4)


def test_nilpotent_basics():
    assert is_nilpotent(C6)
    assert is_nilpotent(D4)
    assert not is_nilpotent(S3)
    assert is_nilpotent(Q8)
    assert not is_nilpotent(S4)


def test_nilpotent_agrees_with_lower_central_series():
    for g in [C6, D4, S3, Q8, S4, A4, A5]:
        via_lcs = lower_central_series(g)[-1].order() == 1
        assert is_nilpotent(g) == via_lcs


def test_minimal_normal_subgroups():
    assert [m.order() for m in minimal_normal_subgroups(A5)] == [60]
    assert [m.order() for m in minimal_normal_subgroups(S4)] == [4]
    assert sorted(m.order() for m in minimal_normal_subgroups(C6)) == [2, 3]
    with pytest.raises(ValueError):
        minimal_normal_subgroups(Group([], 3))


def test_socle():
    assert socle(S5).order() == 60
    assert socle(S4).order() == 4
    v4 = make(["(1,2)", "(3,4)"], 4)  # elementary abelian
    assert socle(v4).order() == 4


def test_blocks_and_primitivity():
    assert is_primitive(S4)
    assert is_primitive(A5)
    assert is_transitive(D4)
    assert not is_primitive(D4)  # opposite corners form blocks
    c4 = make(["(1,2,3,4)"], 4)
    assert not is_primitive(c4)
    reps = minimal_block(4, [g.imgs for g in D4.generators], 0, 2)
    assert len(set(reps)) == 2


def test_is_maximal():
    s3_in_s4 = make(["(2,3,4)", "(2,3)"], 4)
    assert is_maximal(S4, s3_in_s4)
    assert is_maximal(S4, A4)
    c2 = make(["(1,2)"], 4)
    assert not is_maximal(S4, c2)
    v4 = make(["(1,2)(3,4)", "(1,3)(2,4)"], 4)
    assert is_maximal(A4, v4)
    assert not is_maximal(S4, v4)  # V4 < A4 < S4
    assert not is_maximal(S4, S4)


# -- lattice -----------------------------------------------------------------

def lattice_orders(G):
    lat = all_subgroups(G)
    return sorted(c.order for c in lat.classes)


def test_lattice_q8():
    lat = all_subgroups(Q8)
    assert sorted(c.order for c in lat.classes) == [1, 2, 4, 4, 4, 8]
    maximal = [c.order for c in lat.maximal_classes()]
    assert maximal == [4, 4, 4]


def test_lattice_c6():
    lat = all_subgroups(C6)
    assert sorted(c.order for c in lat.classes) == [1, 2, 3, 6]
    assert sorted(c.order for c in lat.maximal_classes()) == [2, 3]


def test_lattice_s4_maximal_orders():
    lat = all_subgroups(S4)
    assert sorted(c.order for c in lat.maximal_classes()) == [6, 8, 12]


def test_lattice_matches_join_closure_oracle():
    for g in [S4, A4, Q8, D4, C6, S3]:
        elems = oracles.closure([x.imgs for x in g.generators], g.degree)
        oracle_subs = oracles.all_subgroups(elems, g.degree)
        lat = all_subgroups(g)
        # class sizes sum to the subgroup count, per-order multiset matches
        assert sum(lat.class_sizes) == len(oracle_subs)
        by_order_lat = {}
        for c in lat.classes:
            by_order_lat[c.order] = by_order_lat.get(c.order, 0) + c.size
        by_order_oracle = {}
        for s in oracle_subs:
            by_order_oracle[len(s)] = by_order_oracle.get(len(s), 0) + 1
        assert by_order_lat == by_order_oracle


def test_lattice_a5_contains_perfect_layer():
    lat = all_subgroups(A5)
    assert max(c.order for c in lat.classes) == 60  # A5 itself, found as perfect
    # A5 has 59 subgroups in total
    assert sum(lat.class_sizes) == 59
    assert sorted(c.order for c in lat.maximal_classes()) == [6, 10, 12]


def test_lattice_class_count_s5():
    lat = all_subgroups(S5)
    assert sum(lat.class_sizes) == 156
    assert sorted(c.order for c in lat.maximal_classes()) == [12, 20, 24, 60]


def test_bounded_enumeration_matches_full():
    lat = subgroup_classes_up_to(S4, 8)
    full = all_subgroups(S4)
    want = sorted((c.order, c.size) for c in full.classes if c.order <= 8)
    got = sorted((c.order, c.size) for c in lat.classes)
    assert got == want
    assert not lat.complete
    with pytest.raises(ValueError):
        lat.maximality_flags


def test_lattice_deterministic():
    a = all_subgroups(S4)
    b = all_subgroups(make(["(1,2,3,4)", "(1,2)"], 4))
    assert [(c.order, c.size, c.key) for c in a.classes] == \
        [(c.order, c.size, c.key) for c in b.classes]


# -- frattini -----------------------------------------------------------------

def test_frattini_values():
    assert frattini(S4).order() == 1
    assert frattini(Q8).order() == 2
    c4 = make(["(1,2,3,4)"], 4)
    assert frattini(c4).order() == 2


def test_frattini_equals_non_generators():
    for g in [S4, Q8, D4, C6, A4, S3]:
        elems = oracles.closure([x.imgs for x in g.generators], g.degree)
        oracle = set(oracles.non_generators(elems, g.degree))
        frat = frattini(g)
        assert set(frat.elements_raw()) == oracle


def test_fitting():
    assert fitting_subgroup(S4).order() == 4
    assert fitting_subgroup(S3).order() == 3
    assert fitting_subgroup(C6).order() == 6
    d10 = make(["(1,2,3,4,5,6,7,8,9,10)", "(2,10)(3,9)(4,8)(5,7)"], 10)
    f = fitting_subgroup(d10)
    assert f.order() == 10
    assert is_nilpotent(f)


# -- classification -----------------------------------------------------------

def test_classify_s4_s3_type1():
    s3 = make(["(2,3,4)", "(2,3)"], 4)
    rep = classify_maximal(S4, s3)
    assert rep.primitive_type == 1
    assert rep.core.order() == 1
    assert rep.intersection_shape == "not-applicable"


def test_classify_s5_s4_type2_coordinate():
    s4 = make(["(2,3,4,5)", "(2,3)"], 5)
    rep = classify_maximal(S5, s4)
    assert rep.primitive_type == 2
    assert rep.intersection_shape == "coordinate"
    assert rep.core.order() == 1
    assert rep.quotient_order == 120


def test_classify_diagonal_type3():
    a5a5 = direct_product(A5, A5)
    diag_gens = []
    for t in ["(1,2,3,4,5)", "(3,4,5)"]:
        left = P(t, 5)
        right = P(t.replace("1", "6").replace("2", "7").replace("3", "8")
                  .replace("4", "9").replace("5", "10"), 10)
        diag_gens.append(P(t, 10) * right)
    diag = Group(diag_gens, 10)
    assert diag.order() == 60
    rep = classify_maximal(a5a5, diag)
    assert rep.primitive_type == 3
    assert rep.core.order() == 1


def test_classify_rejects_non_maximal():
    v4 = make(["(1,2)(3,4)", "(1,3)(2,4)"], 4)
    with pytest.raises(ValueError):
        classify_maximal(S4, v4)


def test_classify_type2_with_core():
    # D4 < S4: core is V4? no -- D4 has core V4, quotient S4/V4 = S3 acts on 3 pts
    d4 = make(["(1,2,3,4)", "(1,3)"], 4)
    rep = classify_maximal(S4, d4)
    assert rep.core.order() == 4
    assert rep.quotient_order == 6
    assert rep.primitive_type == 1
