import random

import pytest

from foamcat.foamcore import (
    EMPTY_FOAM,
    EMPTY_WEB,
    FoamError,
    boundary,
    circle_web,
    circles_web,
    compose,
    compose_with_info,
    disjoint_union,
    disjoint_union_web,
    euler,
    identity_foam,
    iso_check,
    make_web,
    middle_web_euler,
    mirror_foam,
    mirror_web,
    nilvalent_foam,
    reverse_foam,
    reverse_web,
    theta_web,
    validate_foam,
    validate_web,
    vertex_kind,
    web_is_nilvalent,
    web_is_trivalent,
)


def cup(target=None):
    target = target or circle_web()
    loop = target.loops[0]
    return nilvalent_foam(EMPTY_WEB, target, [(0, [("t", loop)])])


def cap(source=None):
    source = source or circle_web()
    loop = source.loops[0]
    return nilvalent_foam(source, EMPTY_WEB, [(0, [("s", loop)])])


def pants(source, target):
    """Two circles merging into one."""
    refs = [("s", e) for e in source.loops] + [("t", e) for e in target.loops]
    return nilvalent_foam(source, target, [(0, refs)])


def test_webs_basic():
    th = theta_web()
    assert not validate_web(th)
    assert web_is_trivalent(th)
    assert not web_is_nilvalent(th)
    assert vertex_kind(th, "p") == "split"
    assert vertex_kind(th, "m") == "merge"
    assert web_is_nilvalent(circles_web(3))


def test_reverse_mirror_web_involutions():
    th = theta_web()
    assert reverse_web(reverse_web(th)) == th
    assert mirror_web(mirror_web(th)) == th
    # split vertices become merge vertices under reversal
    assert vertex_kind(reverse_web(th), "p") == "merge"


def test_disjoint_union_web_unit_and_counts():
    th = theta_web()
    assert disjoint_union_web(th, EMPTY_WEB) == th
    assert disjoint_union_web(EMPTY_WEB, th) == th
    u = disjoint_union_web(th, circle_web())
    assert len(u.edge_ids) == 4
    assert len(u.vertices) == 2


def test_identity_foam_circle_is_annulus():
    w = circle_web()
    ann = identity_foam(w)
    assert not validate_foam(ann)
    assert len(ann.facets) == 1
    f, g, words = ann.facets[0]
    assert g == 0 and len(words) == 2
    assert euler(ann)[1] == 0


def test_identity_foam_theta():
    th = theta_web()
    idf = identity_foam(th)
    assert not validate_foam(idf)
    assert len(idf.facets) == 3
    assert len(idf.seam_arcs) == 2
    assert euler(idf)[1] == 5
    assert boundary(idf) == disjoint_union_web(th, reverse_web(th))


def test_identity_foam_empty():
    assert identity_foam(EMPTY_WEB) == EMPTY_FOAM


def test_sphere_from_cup_and_cap():
    w = circle_web()
    sphere, info = compose_with_info(cap(w), cup(w))
    assert not validate_foam(sphere)
    assert len(sphere.facets) == 1
    _, g, words = sphere.facets[0]
    assert g == 0 and len(words) == 0
    assert euler(sphere)[1] == 2


def test_torus_from_two_annuli():
    cc = circles_web(2)
    bottom = nilvalent_foam(EMPTY_WEB, cc, [(0, [("t", e) for e in cc.loops])])
    top = nilvalent_foam(cc, EMPTY_WEB, [(0, [("s", e) for e in cc.loops])])
    torus = compose(top, bottom)
    assert len(torus.facets) == 1
    _, g, words = torus.facets[0]
    assert g == 1 and len(words) == 0
    assert euler(torus)[1] == 0


def test_annulus_composition():
    w = circle_web()
    ann = identity_foam(w)
    twice = compose(ann, ann)
    assert iso_check(twice, ann, fix_boundary=True)
    assert euler(twice)[1] == 0


def test_boundary_of_composition_exact():
    w = circle_web()
    f = compose(cap(w), cup(w))
    assert boundary(f) == EMPTY_WEB
    g = compose(cup(w), cap(w))  # circle -> circle through the empty web
    assert boundary(g) == disjoint_union_web(w, reverse_web(w))


def test_identity_unit_laws_trivalent():
    th = theta_web()
    idf = identity_foam(th)
    assert iso_check(compose(idf, idf), idf, fix_boundary=True)


def test_compose_rejects_mismatch():
    w1, w2 = circle_web("a"), circle_web("b")
    with pytest.raises(FoamError):
        compose(cap(w2), cup(w1))


def test_euler_gluing_identity_random_nilvalent():
    rng = random.Random(7)
    for _ in range(60):
        f1, f2 = _random_composable_pair(rng)
        total1 = euler(f1)[1]
        total2 = euler(f2)[1]
        comp = compose(f2, f1)
        assert not validate_foam(comp), validate_foam(comp)
        assert euler(comp)[1] == total1 + total2 - middle_web_euler(f1.target)


def test_step_order_independence():
    rng = random.Random(3)
    for _ in range(10):
        f1, f2 = _random_composable_pair(rng, max_circles=4, max_genus=1)
        results = [compose(f2, f1, rng=random.Random(seed)) for seed in range(10)]
        assert all(r == results[0] for r in results[1:])


def _random_surface(rng, source, target, max_genus=2):
    refs = [("s", e) for e in source.loops] + [("t", e) for e in target.loops]
    rng.shuffle(refs)
    k = rng.randint(1, max(1, len(refs))) if refs else rng.randint(1, 2)
    facets = []
    groups = [[] for _ in range(k)]
    for i, r in enumerate(refs):
        groups[i % k].append(r)
    for grp in groups:
        facets.append((rng.randint(0, max_genus), grp))
    return nilvalent_foam(source, target, facets)


def _random_composable_pair(rng, max_circles=3, max_genus=2):
    a = circles_web(rng.randint(0, max_circles), "a")
    b = circles_web(rng.randint(1, max_circles), "b")
    c = circles_web(rng.randint(0, max_circles), "c")
    return _random_surface(rng, a, b, max_genus), _random_surface(rng, b, c, max_genus)


def test_associativity_random_nilvalent():
    rng = random.Random(11)
    for _ in range(40):
        a = circles_web(rng.randint(0, 2), "a")
        b = circles_web(rng.randint(1, 3), "b")
        c = circles_web(rng.randint(1, 3), "c")
        d = circles_web(rng.randint(0, 2), "d")
        f = _random_surface(rng, a, b)
        g = _random_surface(rng, b, c)
        h = _random_surface(rng, c, d)
        left = compose(h, compose(g, f))
        right = compose(compose(h, g), f)
        assert iso_check(left, right, fix_boundary=True)


def test_reverse_and_mirror_involutions_foam():
    th = theta_web()
    idf = identity_foam(th)
    assert reverse_foam(reverse_foam(idf)) == idf
    assert mirror_foam(mirror_foam(idf)) == idf
    ann = identity_foam(circle_web())
    assert mirror_foam(ann) == ann  # no cyclic orders present
    rev = reverse_foam(idf)
    assert not validate_foam(rev)
    assert rev.source == idf.target and rev.target == idf.source


def test_reverse_commutes_with_disjoint_union():
    a = identity_foam(circle_web("a"))
    b = identity_foam(theta_web())
    lhs = reverse_foam(disjoint_union(a, b))
    rhs = disjoint_union(reverse_foam(a), reverse_foam(b))
    assert lhs == rhs


def test_disjoint_union_unit():
    f = identity_foam(circle_web())
    assert disjoint_union(f, EMPTY_FOAM) == f
    assert disjoint_union(EMPTY_FOAM, f) == f


def test_iso_check_negative():
    w = circle_web()
    ann = identity_foam(w)
    torus_side = nilvalent_foam(EMPTY_WEB, w, [(1, [("t", w.loops[0])])])
    cupf = cup(w)
    assert iso_check(torus_side, cupf) is None  # genus differs
    assert iso_check(ann, ann) is not None


def test_iso_check_self_identity():
    th = theta_web()
    idf = identity_foam(th)
    m = iso_check(idf, idf, fix_boundary=True)
    assert m is not None
    assert all(k == v for k, v in m["facets"].items())


def test_trivalent_composition_theta_stack():
    th = theta_web()
    idf = identity_foam(th)
    stack = compose(compose(idf, idf), idf)
    assert not validate_foam(stack)
    assert iso_check(stack, idf, fix_boundary=True)
    # euler bookkeeping across a trivalent gluing
    assert euler(compose(idf, idf))[1] == 2 * euler(idf)[1] - middle_web_euler(th)
