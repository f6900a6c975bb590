import pytest

from foamcat import foamcore as fc
from foamcat import labeled as lb
from foamcat.rings import khovanov_algebra

from helpers import (
    bn_cap,
    bn_circle,
    bn_circles,
    bn_cup,
    bn_datum,
    theta_labeled,
    two_vertex_labeled,
)


@pytest.fixture(scope="module")
def bn():
    return bn_datum()


@pytest.fixture(scope="module")
def gl2():
    return lb.builtin_datum("glN", N=2)


@pytest.fixture(scope="module")
def gl3():
    return lb.builtin_datum("glN", N=3)


def test_builtin_weights(bn, gl2, gl3):
    assert gl2.weight_facet(1) == -1
    assert gl2.weight_facet(2) == 0
    assert gl3.weight_vertex(1, 1, 1, 1) == -3
    assert bn.weight_facet("*") == -1


def test_check_datum(gl2, gl3):
    assert not lb.check_datum(gl2)
    assert not lb.check_datum(gl3)


def test_labeled_web_validation(bn, gl2):
    circle = bn_circle()
    assert not lb.validate_labeled_web(circle, bn)
    th = theta_labeled(1, 1)
    assert not lb.validate_labeled_web(th, gl2)
    bad = lb.make_labeled_web(fc.theta_web(), {"a": 1, "b": 1, "c": 3})
    assert lb.validate_labeled_web(bad, gl2)


def test_identity_cfoam_valid(bn, gl2):
    circle = bn_circle()
    idc = lb.labeled_identity_foam(circle, bn)
    assert not lb.validate_labeled_foam(idc, bn)
    th = theta_labeled()
    idt = lb.labeled_identity_foam(th, gl2)
    assert not lb.validate_labeled_foam(idt, gl2)


def test_degree_identity_zero(bn, gl2, gl3):
    assert lb.foam_degree(lb.labeled_identity_foam(bn_circle(), bn), bn) == 0
    assert lb.foam_degree(lb.labeled_identity_foam(theta_labeled(1, 1), gl2), gl2) == 0
    assert lb.foam_degree(lb.labeled_identity_foam(theta_labeled(1, 2), gl3), gl3) == 0


def test_degree_disk_and_closed_facets(gl2, gl3):
    # undecorated 1-labeled disk (cup over a 1-labeled circle): alpha(1)*chi
    web = lb.make_labeled_web(fc.circle_web(), {"c": 1})
    skel = fc.nilvalent_foam(fc.EMPTY_WEB, web.web, [(0, [("t", "c")])])
    disk = lb.make_labeled_foam(skel, {0: 1}, (((1), ((0, (0,)),)),))
    assert lb.foam_degree(disk, gl2) == -1
    # closed genus-g facet labeled k: -k(N-k)(2-2g)
    for N, k, g in ((2, 1, 0), (3, 1, 2), (3, 2, 1)):
        datum = lb.builtin_datum("glN", N=N)
        closed = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=[(0, g, [])])
        lf = lb.make_labeled_foam(closed, {0: k}, ((1, ((0, (0,) * k),)),))
        assert lb.foam_degree(lf, datum) == -k * (N - k) * (2 - 2 * g)


def test_bn_degree_is_negative_euler(bn):
    # undecorated nilvalent foams are graded by minus their euler total
    sphere = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=[(0, 0, [])])
    lf = lb.make_labeled_foam(sphere, {0: "*"}, ((1, ((0, 0),)),))
    assert lb.foam_degree(lf, bn) == -2
    torus = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=[(0, 1, [])])
    lt = lb.make_labeled_foam(torus, {0: "*"}, ((1, ((0, 0),)),))
    assert lb.foam_degree(lt, bn) == 0


def test_two_vertex_foam_valid(gl3):
    lf = two_vertex_labeled(gl3, 1, 1, 1)
    report = lb.validate_labeled_foam(lf, gl3)
    assert not report, report


def test_two_vertex_foam_degree(gl3):
    lf = two_vertex_labeled(gl3, 1, 1, 1)
    d = lb.foam_degree(lf, gl3)
    assert isinstance(d, int)


def test_flow_violation_detected(gl2):
    lf = two_vertex_labeled(gl2, 1, 1, 1)
    labels = dict(lf.labels)
    labels["f14"] = 5  # breaks every seam equation touching f14
    broken = lb.LabeledFoam(lf.skeleton, tuple(sorted(labels.items())), lf.decoration, lf.loop_orders)
    assert lb.validate_labeled_foam(broken, gl2)


def test_compose_dotted_cap_with_cup(bn):
    circle = bn_circle()
    cup = bn_cup(bn, circle)  # undecorated disk
    cap_x = bn_cap(bn, circle, {"c": 1})  # disk dotted by x
    sphere = lb.compose_labeled(cap_x, cup, bn)
    assert len(sphere.terms) == 1
    coeff, lf = sphere.terms[0]
    assert coeff == 1
    ((c, tensor),) = lf.decoration
    assert dict(tensor) == {0: 1}  # the single facet carries x


def test_compose_with_identity_keeps_decorations(bn):
    circle = bn_circle()
    cup_x = bn_cup(bn, circle, {"c": 1})
    idv = lb.identity_vector(circle, bn)
    assert lb.compose_labeled(idv, cup_x, bn) == cup_x


def test_bilinearity(bn):
    circle = bn_circle()
    cup = bn_cup(bn, circle)
    cap = bn_cap(bn, circle)
    doubled = lb.scale_vector(2, cup)
    lhs = lb.compose_labeled(cap, doubled, bn)
    rhs = lb.scale_vector(2, lb.compose_labeled(cap, cup, bn))
    assert lhs == rhs


def test_x_squared_vanishes(bn):
    circle = bn_circle()
    cup_x = bn_cup(bn, circle, {"c": 1})
    cap_x = bn_cap(bn, circle, {"c": 1})
    sphere_xx = lb.compose_labeled(cap_x, cup_x, bn)
    assert sphere_xx.terms == ()


def test_degree_additive_under_composition(bn):
    circle = bn_circle()
    cup = bn_cup(bn, circle)
    cap_x = bn_cap(bn, circle, {"c": 1})
    d_cup = lb.vector_degree(cup, bn)
    d_cap = lb.vector_degree(cap_x, bn)
    comp = lb.compose_labeled(cap_x, cup, bn)
    assert lb.vector_degree(comp, bn) == d_cup + d_cap


def test_reverse_involution(bn):
    circle = bn_circle()
    cup_x = bn_cup(bn, circle, {"c": 1})
    rev = lb.reverse_labeled(cup_x, bn)
    assert rev.source == circle and rev.target == lb.EMPTY_LWEB
    assert lb.reverse_labeled(rev, bn) == cup_x


def test_bend_roundtrip(bn):
    circle = bn_circle()
    idv = lb.identity_vector(circle, bn)
    bent = lb.bend_to_target(idv)
    assert bent.source == lb.EMPTY_LWEB
    assert len(bent.target.web.loops) == 2


def test_disjoint_union_degree_additive(bn):
    c1, c2 = bn_circle("a"), bn_circle("b")
    u = bn_cup(bn, c1)
    v = bn_cup(bn, c2, {"b": 1})
    uv = lb.disjoint_union_vectors(u, v)
    assert lb.vector_degree(uv, bn) == lb.vector_degree(u, bn) + lb.vector_degree(v, bn)


def test_identity_on_two_circles(bn):
    cc = bn_circles(2)
    idv = lb.identity_vector(cc, bn)
    cup = bn_cup(bn, cc, {"c0": 1})
    assert lb.compose_labeled(idv, cup, bn) == cup
