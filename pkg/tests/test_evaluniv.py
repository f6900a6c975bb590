import random

import pytest

from foamcat import evaluniv as ev
from foamcat import foamcore as fc
from foamcat import labeled as lb
from foamcat.rings import khovanov_algebra, kron, mat_mul, trivial_algebra, validate_frobenius

from helpers import bn_cap, bn_circle, bn_circles, bn_cup, bn_surface


@pytest.fixture(scope="module")
def E():
    return ev.barnatan_evaluator(khovanov_algebra())


def closed_sphere(E, dec):
    skel = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=[(0, 0, [])])
    lf = lb.make_labeled_foam(skel, {0: "*"}, ((1, ((0, dec),)),))
    return lb.foam_vector(lb.EMPTY_LWEB, lb.EMPTY_LWEB, [(1, lf)])


def closed_genus(E, g):
    skel = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=[(0, g, [])])
    lf = lb.make_labeled_foam(skel, {0: "*"}, ((1, ((0, 0),)),))
    return lb.foam_vector(lb.EMPTY_LWEB, lb.EMPTY_LWEB, [(1, lf)])


def test_eval_closed_surfaces(E):
    assert E.evaluate(closed_sphere(E, 0)) == 0
    assert E.evaluate(closed_sphere(E, 1)) == 1
    assert E.evaluate(closed_genus(E, 1)) == 2
    assert E.evaluate(closed_genus(E, 2)) == 0


def test_eval_empty_is_one(E):
    empty = lb.foam_vector(
        lb.EMPTY_LWEB, lb.EMPTY_LWEB, [(1, lb.make_labeled_foam(fc.EMPTY_FOAM, {}, ((1, ()),)))]
    )
    assert E.evaluate(empty) == 1


def test_multiplicative_and_involutive(E):
    rng = random.Random(5)
    samples = [ev.random_closed_bn(E, rng) for _ in range(25)]
    assert not ev.check_multiplicative(E, samples)
    assert not ev.check_involutive(E, samples)


def test_trace_pair_values(E):
    circle = bn_circle("c0")
    cup1 = bn_cup(E.datum, circle)
    capx = bn_cap(E.datum, circle, {"c0": 1})
    assert ev.trace_pair(cup1, capx, E) == 1
    # cyclicity: <sigma, tau> = <tau, sigma>
    assert ev.trace_pair(capx, cup1, E) == 1


def test_trace_cyclicity_random(E):
    rng = random.Random(9)
    circle = bn_circle("c0")
    for _ in range(30):
        decorated = {"c0": rng.randrange(2)}
        sigma = bn_cup(E.datum, circle, decorated)
        tau = bn_cap(E.datum, circle, {"c0": rng.randrange(2)})
        assert ev.trace_pair(sigma, tau, E) == ev.trace_pair(tau, sigma, E)


def test_state_space_circle(E):
    space = ev.state_space(bn_circle("c0"), E)
    assert space.size == 2
    assert space.gram == ((0, 1), (1, 0))
    assert space.rank == 2 and not space.radical and space.unimodular
    assert space.degrees == (-1, 1)


def test_state_space_empty(E):
    space = ev.state_space(lb.EMPTY_LWEB, E)
    assert space.size == 1 and space.gram == ((1,),)


def test_state_space_kron_structure(E):
    base = [[0, 1], [1, 0]]
    expect = base
    for n in (1, 2, 3):
        space = ev.state_space(bn_circles(n), E)
        assert space.size == 2**n
        assert [list(r) for r in space.gram] == expect
        assert space.unimodular and not space.radical
        expect = kron(expect, base)


def test_property_F_and_A(E):
    for n in (0, 1, 2):
        w = bn_circles(n)
        assert ev.check_property_F(ev.state_space(w, E))
        assert not ev.check_property_A(w, E)


def test_degenerate_evaluator_fails_F():
    datum = ev.barnatan_evaluator(khovanov_algebra()).datum
    dead = ev.Evaluator(
        datum=datum,
        evaluate=lambda vec: 0 if vec.terms else 0,
        generators=lambda w: ev.bn_generators(w, datum),
        graded=False,
        name="zero",
    )
    # zero evaluation except on the empty foam: take literally zero here
    space = ev.state_space(bn_circle("c0"), dead)
    assert not space.unimodular
    assert not ev.check_property_F(space)
    assert len(space.radical) == 2
    # radical elements pair to zero with every generator by construction
    for v in space.radical:
        for row in space.gram:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_induced_map_identity(E):
    circle = bn_circle("c0")
    space = ev.state_space(circle, E)
    idv = lb.identity_vector(circle, E.datum)
    m = ev.induced_map(idv, space, space, E)
    assert m == [[1, 0], [0, 1]]


def test_induced_map_cap_then_cup(E):
    circle = bn_circle("c0")
    space = ev.state_space(circle, E)
    cap1 = bn_cap(E.datum, circle)
    cup1 = bn_cup(E.datum, circle)
    phi = lb.compose_labeled(cup1, cap1, E.datum)
    m = ev.induced_map(phi, space, space, E)
    assert m == [[0, 1], [0, 0]]


def test_induced_map_handle(E):
    circle = bn_circle("c0")
    space = ev.state_space(circle, E)
    m = ev.induced_map(ev.handle_vector(E), space, space, E)
    assert m == [[0, 0], [2, 0]]


def test_induced_map_functorial(E):
    circle = bn_circle("c0")
    space = ev.state_space(circle, E)
    h = ev.handle_vector(E)
    cupcap = lb.compose_labeled(bn_cup(E.datum, circle), bn_cap(E.datum, circle), E.datum)
    for phi, psi in ((h, cupcap), (cupcap, h), (h, h)):
        lhs = ev.induced_map(lb.compose_labeled(psi, phi, E.datum), space, space, E)
        rhs = mat_mul(ev.induced_map(psi, space, space, E), ev.induced_map(phi, space, space, E))
        assert lhs == rhs


def test_strong_monoidality_product_family(E):
    a, b = bn_circle("a0"), bn_circle("b0")
    ab = lb.disjoint_union_labeled_web(a, b)
    za, zb, zab = (ev.state_space(w, E) for w in (a, b, ab))
    # product generators map bijectively onto the union's family
    pairs = [
        lb.disjoint_union_vectors(ga, gb) for ga in za.generators for gb in zb.generators
    ]
    assert len(pairs) == zab.size
    for pair, gen in zip(pairs, zab.generators):
        assert lb.vectors_isomorphic(pair, gen, E.datum)
    assert [list(r) for r in zab.gram] == kron([list(r) for r in za.gram], [list(r) for r in zb.gram])


def test_I1_equals_I2_on_family(E):
    """The kernel computed from plain pairings agrees with the kernel of
    pairings composed through closed endomorphisms."""
    w = bn_circle("c0")
    space = ev.state_space(w, E)
    import foamcat.rings as rings

    k1 = rings.integer_kernel([list(r) for r in space.gram])
    # scale every pairing by eval of a closed endomorphism (a dotted sphere)
    scaled = [[x * 1 for x in row] for row in space.gram]
    stacked = [list(r) for r in space.gram] + scaled
    k2 = rings.integer_kernel(stacked)
    assert sorted(map(tuple, k1)) == sorted(map(tuple, k2))


def test_faithfulness_surrogate(E):
    circle = bn_circle("c0")
    space = ev.state_space(circle, E)
    # the zero vector induces the zero map and all triple pairings vanish
    zero = lb.zero_vector(circle, circle)
    m = ev.induced_map(zero, space, space, E)
    assert all(all(x == 0 for x in row) for row in m)
    for d in space.duals:
        for g in space.generators:
            chain = lb.compose_labeled(zero, g, E.datum)
            assert E.evaluate(lb.compose_labeled(d, chain, E.datum)) == 0


def test_extract_frobenius_khovanov(E):
    A = ev.extract_frobenius(E)
    assert A.rank == 2
    assert A.degree == 2 and A.shift == 1
    assert A.degrees == (0, 2)
    # multiplication table matches x^2 = 0 in the cup basis
    assert A.mul_basis(0, 0) == {0: 1}
    assert A.mul_basis(0, 1) == {1: 1}
    assert A.mul_basis(1, 1) == {}
    assert A.counit == {0: 0, 1: 1}
    assert validate_frobenius(A).ok


def test_extract_frobenius_trivial():
    E = ev.barnatan_evaluator(trivial_algebra())
    A = ev.extract_frobenius(E)
    assert A.rank == 1 and A.degree == 0 and A.shift == 0
    assert validate_frobenius(A).ok


def test_graded_eval_degree_zero_only(E):
    # homogeneous closed foams of nonzero degree evaluate to zero
    assert lb.vector_degree(closed_sphere(E, 1), E.datum) == 0
    assert lb.vector_degree(closed_sphere(E, 0), E.datum) == -2
    assert E.evaluate(closed_sphere(E, 0)) == 0
    assert lb.vector_degree(closed_genus(E, 2), E.datum) == 2
    assert E.evaluate(closed_genus(E, 2)) == 0
