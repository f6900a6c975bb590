"""Shared constructors for the test suite."""

from foamcat import foamcore as fc
from foamcat import labeled as lb
from foamcat.rings import khovanov_algebra


def bn_datum():
    return lb.builtin_datum("barnatan", algebra=khovanov_algebra())


def bn_circle(name="c"):
    return lb.make_labeled_web(fc.circle_web(name), {name: "*"})


def bn_circles(n, prefix="c"):
    web = fc.circles_web(n, prefix)
    return lb.make_labeled_web(web, {e: "*" for e in web.loops})


def bn_cup(datum, target, decorations=None):
    """Disjoint decorated disks, one per circle of `target`."""
    decorations = decorations or {}
    spec = []
    labels = {}
    tensor = []
    for i, e in enumerate(target.web.loops):
        spec.append((0, [("t", e)]))
        labels[i] = "*"
        tensor.append((i, decorations.get(e, 0)))
    skel = fc.nilvalent_foam(fc.EMPTY_WEB, target.web, spec)
    lf = lb.make_labeled_foam(skel, labels, ((1, tuple(tensor)),))
    return lb.foam_vector(lb.EMPTY_LWEB, target, [(1, lf)])


def bn_cap(datum, source, decorations=None):
    return lb.reverse_labeled(bn_cup(datum, source, decorations), datum)


def bn_surface(source, target, facet_spec, decorations=None, genus=None):
    """facet_spec: list of lists of (side, loop); decorations per facet."""
    decorations = decorations or {}
    genus = genus or {}
    spec = [(genus.get(i, 0), refs) for i, refs in enumerate(facet_spec)]
    skel = fc.nilvalent_foam(source.web, target.web, spec)
    labels = {i: "*" for i in range(len(facet_spec))}
    tensor = tuple((i, decorations.get(i, 0)) for i in range(len(facet_spec)))
    lf = lb.make_labeled_foam(skel, labels, ((1, tensor),))
    return lb.foam_vector(source, target, [(1, lf)])


def theta_labeled(k=1, l=1):
    web = fc.theta_web()
    return lb.make_labeled_web(web, {"a": k, "b": l, "c": k + l})


def two_vertex_closed_foam():
    """A closed trivalent foam with two internal vertices, four seams and
    six bigon facets; the smallest vertex-bearing example."""
    s = lambda i: ("e", f"s{i}")
    words = {
        "f12": [((s(1)), 1), ((s(2)), -1)],
        "f34": [((s(3)), -1), ((s(4)), 1)],
        "f13": [((s(1)), 1), ((s(3)), 1)],
        "f14": [((s(1)), -1), ((s(4)), -1)],
        "f23": [((s(2)), 1), ((s(3)), 1)],
        "f24": [((s(2)), 1), ((s(4)), 1)],
    }
    facets = [(name, 0, [fc.make_cyc_word(wd)]) for name, wd in words.items()]
    seam_arcs = [
        ("s1", ("v", "u"), ("v", "w")),
        ("s2", ("v", "u"), ("v", "w")),
        ("s3", ("v", "w"), ("v", "u")),
        ("s4", ("v", "w"), ("v", "u")),
    ]
    seam_orders = [
        ("s1", ("f13", "f12", "f14")),
        ("s2", ("f23", "f24", "f12")),
        ("s3", ("f13", "f23", "f34")),
        ("s4", ("f34", "f24", "f14")),
    ]
    return fc.make_foam(
        fc.EMPTY_WEB,
        fc.EMPTY_WEB,
        vertices=["u", "w"],
        seam_arcs=seam_arcs,
        seam_orders=seam_orders,
        facets=facets,
    )


def two_vertex_labeled(datum, a=1, b=1, c=1):
    skel = two_vertex_closed_foam()
    labels = {
        "f13": a,
        "f23": b,
        "f24": c,
        "f12": b + c,
        "f34": a + b,
        "f14": a + b + c,
    }
    dec = lb.unit_decoration(datum, labels, labels.keys())
    return lb.make_labeled_foam(skel, labels, dec)
