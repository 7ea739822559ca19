"""Shape classification, both verdict routes, reports, and audits."""

import pytest

from oortlab.analysis import centralizer, normalizer, o_p_prime, sylow
from oortlab.classify import (
    OortVerdict,
    ShapeVerdict,
    Witness,
    _identify_quotient,
    allowed_shape,
    cyclic_by_p_subgroups,
    even_structure_report,
    is_cyclic_by_p,
    is_o_group_by_criterion,
    is_o_group_by_definition,
    odd_structure_report,
    shape_of,
    theorem_audit,
)
from oortlab.construct import alternating, build_group, pgl2, psl2, psl3_4, symmetric
from oortlab.errors import PreconditionFailed
from oortlab.perm import Group, perm_from_cycles


def dicyclic12():
    # C3 : C4 with the 4-element inverting; the other nonabelian order-12
    # group besides D12 and A4 (a single involution, so not dihedral)
    x = perm_from_cycles(7, [(0, 1, 2)])
    y = perm_from_cycles(7, [(0, 1), (3, 4, 5, 6)])
    return Group(7, [x, y])


def frobenius20():
    x = perm_from_cycles(5, [(0, 1, 2, 3, 4)])
    y = perm_from_cycles(5, [(1, 2, 4, 3)])
    return Group(5, [x, y])


# -- shapes -------------------------------------------------------------


@pytest.mark.parametrize(
    "spec,label",
    [
        ("C:12", "C12"),
        ("D:12", "D12"),
        ("A:4", "A4"),
        ("PROD:(C:2)x(C:6)", "Other(12)"),
        ("C:2", "C2"),
        ("D:4", "D4"),
        ("C:1", "C1"),
        ("Q:8", "Other(8)"),
    ],
)
def test_shape_labels(spec, label):
    assert shape_of(build_group(spec)).label == label


def test_dicyclic_is_other():
    G = dicyclic12()
    assert G.order() == 12
    assert shape_of(G).label == "Other(12)"


@pytest.mark.parametrize(
    "shape,p,ok",
    [
        (ShapeVerdict("Cyclic", 15), 7, True),
        (ShapeVerdict("Dihedral", 4), 2, True),
        (ShapeVerdict("Dihedral", 6), 3, True),
        (ShapeVerdict("Dihedral", 6), 2, False),
        (ShapeVerdict("Dihedral", 18), 3, True),
        (ShapeVerdict("A4", 12), 2, True),
        (ShapeVerdict("A4", 12), 3, False),
        (ShapeVerdict("Other", 8), 2, False),
    ],
)
def test_allowed_shape(shape, p, ok):
    assert allowed_shape(shape, p) is ok


# -- cyclic-by-p detection and enumeration ------------------------------


def test_is_cyclic_by_p():
    s3 = symmetric(3)
    ok, data = is_cyclic_by_p(s3, 3)
    assert ok and data[0].order() == 3 and data[1] == 2
    ok2, data2 = is_cyclic_by_p(s3, 2)
    assert not ok2 and data2 is None
    ok3, data3 = is_cyclic_by_p(frobenius20(), 5)
    assert ok3 and data3[0].order() == 5 and data3[1] == 4
    ok4, data4 = is_cyclic_by_p(build_group("C:12"), 2)
    assert ok4 and data4 == (data4[0], 3) and data4[0].order() == 4


def test_enumeration_shapes_d18():
    G = build_group("D:18")
    labels = {shape_of(H).label for H in cyclic_by_p_subgroups(G, 3)}
    assert labels == {"C1", "C2", "C3", "C9", "D6", "D18"}


def test_enumeration_members_are_cyclic_by_p():
    G = build_group("S:4")
    seen = 0
    for H in cyclic_by_p_subgroups(G, 3):
        assert is_cyclic_by_p(H, 3)[0]
        seen += 1
    assert seen > 0


def test_enumeration_c6():
    G = build_group("C:6")
    orders = sorted(H.order() for H in cyclic_by_p_subgroups(G, 3))
    assert orders == [1, 2, 3, 6]


# -- verdict routes -----------------------------------------------------


VERDICTS = [
    ("C:12", 2, True),
    ("D:18", 3, True),
    ("D:18", 2, True),
    ("Q:8", 2, False),
    ("A:7", 2, False),
    ("A:4", 2, True),
    ("A:4", 3, True),
    ("A:5", 5, True),
    ("A:6", 3, False),
    ("S:4", 2, True),
    ("S:5", 2, True),
    ("S:5", 5, False),
    ("PSL2:7", 2, True),
    ("PSL2:7", 7, False),
    ("INV:3:8:cyclic", 2, True),
    ("INV:3:8:klein", 3, False),
    ("DELPERM:5:S4:sign", 2, True),
    ("DELPERM:5:S4", 2, False),
]


@pytest.mark.parametrize("spec,p,expect", VERDICTS)
def test_routes_agree(spec, p, expect):
    G = build_group(spec)
    vd = is_o_group_by_definition(G, p)
    vc = is_o_group_by_criterion(G, p)
    assert vd.is_o_group is expect
    assert vc.is_o_group is expect
    if expect:
        assert not vd.witnesses
    else:
        assert vd.witnesses


def test_witnesses_are_genuine_counterexamples():
    G = build_group("S:5")
    vd = is_o_group_by_definition(G, 5)
    assert not vd.is_o_group
    for w in vd.witnesses:
        assert is_cyclic_by_p(w.subgroup, 5)[0]
        assert not allowed_shape(w.shape, 5)
        assert shape_of(w.subgroup) == w.shape
    # the order-20 Frobenius group is the canonical counterexample
    assert any(w.shape.order == 20 for w in vd.witnesses)


def test_verdict_json():
    j = is_o_group_by_definition(build_group("Q:8"), 2).to_json()
    assert j["is_o_group"] is False
    assert j["route"] == "Definition"
    assert j["witnesses"] and all("generators" in w for w in j["witnesses"])


def test_relabeling_invariance():
    G = build_group("S:4")
    c = perm_from_cycles(4, [(0, 2, 3)])
    H = Group(4, [c * g * c.inv() for g in G.generators])
    for p in (2, 3):
        assert (
            is_o_group_by_definition(H, p).is_o_group
            == is_o_group_by_definition(G, p).is_o_group
        )


@pytest.mark.parametrize(
    "spec,p,branch",
    [
        ("C:15", 3, "N=C"),
        ("D:18", 3, "index-2 inversion"),
        ("S:6", 3, "Sylow noncyclic"),
        ("A:7", 5, "normalizer element is not an inverting involution"),
        ("PROD:(S:3)x(D:10)", 5, "C_G(Q) nonabelian"),
        ("C:12", 2, "Sylow cyclic"),
        ("A:4", 2, "Sylow dihedral self-centralizing Kleins"),
        ("Q:8", 2, "Sylow neither cyclic nor dihedral"),
        ("A:7", 2, "Klein four not self-centralizing"),
    ],
)
def test_criterion_branches(spec, p, branch):
    assert is_o_group_by_criterion(build_group(spec), p).branch == branch


def test_trivial_sylow_is_positive():
    v = is_o_group_by_criterion(build_group("C:4"), 3)
    assert v.is_o_group and v.branch == "N=C"


# -- quotient identification --------------------------------------------


def test_identify_quotient():
    assert _identify_quotient(psl2(7)).label == "isomorphic-to PSL(2,7)"
    assert _identify_quotient(alternating(5)).label == "consistent-with PSL(2,5)"
    assert _identify_quotient(pgl2(5)).label == "consistent-with PGL(2,5)"
    assert _identify_quotient(psl3_4()).label == "consistent-with PSL(3,4)"
    assert _identify_quotient(symmetric(4)).tag == "unidentified"


# -- structure reports --------------------------------------------------


def test_odd_report_semidirect_case():
    rep = odd_structure_report(build_group("C:15"), 3)
    assert rep.case == "G=RP" and rep.ncq == 1
    assert not rep.has_violation()


def test_odd_report_dihedral_case():
    rep = odd_structure_report(build_group("D:18"), 3)
    assert rep.case == "G=RD" and rep.ncq == 2
    assert rep.r_order == 1 and rep.p_order == 9
    assert not rep.has_violation()
    rep2 = odd_structure_report(build_group("S:4"), 3)
    assert rep2.case == "G=RD"
    assert rep2.quotient == "dihedral of order 6"
    assert not rep2.has_violation()


def test_odd_report_almost_simple_case():
    rep = odd_structure_report(build_group("PSL2:7"), 3)
    assert rep.case == "G/R almost simple"
    assert rep.quotient == "isomorphic-to PSL(2,7)"
    assert not rep.has_violation()


def test_odd_report_preconditions():
    with pytest.raises(PreconditionFailed):
        odd_structure_report(build_group("A:6"), 3)
    with pytest.raises(PreconditionFailed):
        odd_structure_report(build_group("C:6"), 2)
    with pytest.raises(PreconditionFailed):
        odd_structure_report(build_group("C:6"), 9)


def test_even_report_case1():
    rep = even_structure_report(build_group("INV:3:8:cyclic"))
    assert rep.case == "1:G=RP"
    assert rep.r_order == 3 and rep.p_order == 8
    assert not rep.has_violation()


def test_even_report_case2a():
    rep = even_structure_report(build_group("DELPERM:5:A4"))
    assert rep.case == "2a:G=R.A4"
    assert rep.r_order == 125
    assert len(rep.chief_factors) == 1
    cf = rep.chief_factors[0]
    assert cf["dim3"] == "verified"
    assert set(cf["klein_fixed_dims"]) == {0}
    assert not rep.has_violation()


def test_even_report_case2b_traces():
    rep = even_structure_report(build_group("DELPERM:5:S4:sign"))
    assert rep.case == "2b:G=R.S4"
    assert rep.chief_factors[0]["order4_traces"] == [1]
    assert not rep.has_violation()


def test_even_report_case2c():
    rep = even_structure_report(build_group("A:5"))
    assert rep.case == "2c:nonsolvable"
    assert rep.quotient == "consistent-with PSL(2,5)"
    assert not rep.has_violation()


def test_even_report_preconditions():
    with pytest.raises(PreconditionFailed):
        even_structure_report(build_group("Q:8"))
    with pytest.raises(PreconditionFailed):
        even_structure_report(build_group("C:8"))  # cyclic Sylow branch


# -- per-claim audit ----------------------------------------------------


def audit_map(spec, p):
    return dict(theorem_audit(build_group(spec), p))


def test_audit_d18():
    m = audit_map("D:18", 3)
    assert m["two-cases-odd"] == "pass"
    assert m["basic1"] == "pass"
    assert m["solvable-core"] == "pass"
    assert m["for-odd-odd"] == "not-applicable"  # even order
    assert m["nontrivial-center-2"] == "not-applicable"


def test_audit_odd_order_group():
    m = audit_map("C:15", 3)
    assert m["for-odd-odd"] == "pass"
    assert m["basic1"] == "not-applicable"  # N = C
    assert m["two-cases-odd"] == "pass"


def test_audit_p2_centers():
    m = audit_map("INV:3:8:cyclic", 2)
    assert m["nontrivial-center-2"] == "pass"
    assert m["restrictions-trivial-center-1"] == "not-applicable"
    m2 = audit_map("DELPERM:5:S4:sign", 2)
    assert m2["restrictions-trivial-center-1"] == "pass"
    assert m2["nontrivial-center-2"] == "not-applicable"
    assert m2["two-cases-odd"] == "not-applicable"


def test_audit_negative_group_all_na_or_honest():
    m = audit_map("Q:8", 2)
    assert m["nontrivial-center-2"] == "not-applicable"
    assert m["restrictions-trivial-center-1"] == "not-applicable"
