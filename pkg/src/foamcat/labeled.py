"""Labeled and decorated webs and foams.

A labeling datum names the allowed facet labels, a commutative decoration
algebra per label and, in the graded case, integer weights for facets,
seams and vertices. Labeled foams carry one label per facet and a formal
linear combination of pure decoration tensors (one algebra basis monomial
per facet within each tensor).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import foamcore as fc
from .rings import ZZ, PolyRing, SymPoly
from .util import sort_key, ssorted


class LabelError(ValueError):
    pass


# ---------------------------------------------------------------------------
# decoration algebras


class FrobeniusDecorations:
    """Decorations drawn from a based Frobenius algebra; monomials are
    basis positions."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.ring = algebra.ring

    def one(self):
        return dict(self.algebra.unit)

    def mul(self, m1, m2):
        return self.algebra.mul_basis(m1, m2)

    def iota(self, m):
        return self.algebra.involve_vec({m: self.ring.one})

    def deg(self, m):
        return self.algebra.degrees[m]

    def monomials(self):
        return tuple(range(self.algebra.rank))

    def format(self, m):
        return self.algebra.basis[m]


class SymmetricDecorations:
    """Free polynomials on elementary symmetric generators e_1..e_n;
    monomials are exponent tuples, deg(e_i) = 2i."""

    def __init__(self, n, ring=ZZ):
        self.n = n
        self.ring = ring
        self.poly_ring = SymPoly.ring(n)

    def one(self):
        return {(0,) * self.n: self.ring.one}

    def mul(self, m1, m2):
        return {tuple(a + b for a, b in zip(m1, m2)): self.ring.one}

    def iota(self, m):
        return {m: self.ring.one}

    def deg(self, m):
        return self.poly_ring.monomial_degree(m)

    def monomials(self):
        return None  # infinite

    def format(self, m):
        return self.poly_ring.format_element(self.poly_ring.monomial(m))


# ---------------------------------------------------------------------------
# labeling data


@dataclass
class LabelingDatum:
    name: str
    valency: str  # 'trivalent' or 'nilvalent'
    ring: object
    dec: object  # label -> decoration algebra
    add: object = None  # trivalent: semigroup operation
    labels: tuple = None  # finite label set, or None for naturals
    alpha_facet: object = None
    alpha_seam: object = None  # (k, l) -> int, refined order (k, l, k+l)
    alpha_vertex: object = None  # (i, k, l, h) -> int with i in (1, 2)
    graded: bool = False
    involutive: bool = True

    _dec_cache: dict = field(default_factory=dict, repr=False)

    def dec_algebra(self, label):
        if label not in self._dec_cache:
            self._dec_cache[label] = self.dec(label)
        return self._dec_cache[label]

    def weight_facet(self, k):
        return self.alpha_facet(k)

    def weight_seam(self, k, l):
        return self.alpha_seam(k, l)

    def weight_vertex(self, i, k, l, h):
        return self.alpha_vertex(i, k, l, h)


def builtin_datum(kind, *, algebra=None, N=None):
    """Built-in labeling data: 'barnatan', 'glN', 'glN_equivariant'."""
    if kind == "barnatan":
        if algebra is None:
            raise LabelError("barnatan datum needs a Frobenius algebra")
        from .rings import validate_frobenius

        rep = validate_frobenius(algebra)
        if not rep.ok:
            raise LabelError("invalid Frobenius algebra: " + "; ".join(rep.violations[:3]))
        dec = FrobeniusDecorations(algebra)
        return LabelingDatum(
            name=f"barnatan({algebra.name})",
            valency="nilvalent",
            ring=algebra.ring,
            dec=lambda label: dec,
            labels=("*",),
            alpha_facet=lambda k: -algebra.shift,
            graded=True,
            involutive=True,
        )
    if kind == "glN":
        if not N or N < 1:
            raise LabelError("glN datum needs N >= 1")
        return LabelingDatum(
            name=f"gl{N}",
            valency="trivalent",
            ring=ZZ,
            dec=lambda label: SymmetricDecorations(label),
            add=lambda a, b: a + b,
            labels=None,
            alpha_facet=lambda k: -k * (N - k),
            alpha_seam=lambda k, l: -((k + l) * (N - k - l) + k * l),
            alpha_vertex=lambda i, k, l, h: -((k + l + h) * (N - k - l - h) + k * l + l * h + k * h),
            graded=True,
        )
    if kind == "glN_equivariant":
        if not N or N < 1:
            raise LabelError("equivariant datum needs N >= 1")
        ground = PolyRing(tuple(f"a{i}" for i in range(1, N + 1)), tuple(2 * i for i in range(1, N + 1)))
        return LabelingDatum(
            name=f"gl{N}_equivariant",
            valency="trivalent",
            ring=ground,
            dec=lambda label: SymmetricDecorations(label, ring=ground),
            add=lambda a, b: a + b,
            labels=None,
            alpha_facet=lambda k: -k * (N - k),
            alpha_seam=lambda k, l: -((k + l) * (N - k - l) + k * l),
            alpha_vertex=lambda i, k, l, h: -((k + l + h) * (N - k - l - h) + k * l + l * h + k * h),
            graded=True,
        )
    raise LabelError(f"unknown datum kind {kind!r}")


def check_datum(datum, samples=None):
    """Semigroup associativity and identity-foam weight compatibility on
    sample labels; returns a list of violations."""
    bad = []
    if datum.valency == "nilvalent":
        return bad
    labels = samples or (0, 1, 2, 3)
    for a in labels:
        for b in labels:
            for c in labels:
                if datum.add(datum.add(a, b), c) != datum.add(a, datum.add(b, c)):
                    bad.append(f"semigroup not associative at ({a},{b},{c})")
    if datum.graded:
        for k in labels:
            for l in labels:
                s = datum.add(k, l)
                lhs = datum.weight_facet(k) + datum.weight_facet(l) + datum.weight_facet(s)
                rhs = datum.weight_seam(k, l) + datum.weight_seam(l, k)
                if lhs != rhs:
                    bad.append(f"weights incompatible with identity foams at ({k},{l})")
    return bad


# ---------------------------------------------------------------------------
# labeled webs


@dataclass(frozen=True)
class LabeledWeb:
    web: fc.ClosedWeb
    labels: tuple  # ((edge, label), ...) sorted

    def label_map(self):
        return dict(self.labels)

    def is_empty(self):
        return self.web.is_empty()


EMPTY_LWEB = LabeledWeb(fc.EMPTY_WEB, ())


def make_labeled_web(web, labels):
    items = tuple(sorted(((e, l) for e, l in dict(labels).items()), key=lambda x: sort_key(x[0])))
    return LabeledWeb(web, items)


def labeled_circles(labels, prefix="c"):
    web = fc.circles_web(len(labels), prefix)
    return make_labeled_web(web, {e: l for e, l in zip(web.loops, labels)})


def web_flow_order(web, v):
    """Refined total order (e1, e2, e3) at a trivalent web vertex: the
    cyclic order rotated so the odd-oriented edge comes last."""
    amap = web.arc_map()
    order = web.order_map()[v]
    kind = fc.vertex_kind(web, v)
    # for a split both compatible edges leave v; the odd one arrives
    odd = [e for e in order if (amap[e][0] == v) != (kind == "split")]
    if len(odd) != 1:
        raise fc.FoamError(f"vertex {v!r} is not trivalent-orientable")
    i = order.index(odd[0])
    rotated = order[i + 1 :] + order[: i + 1]
    return rotated


def validate_labeled_web(lweb, datum):
    bad = [f"web: {m}" for m in fc.validate_web(lweb.web)]
    lmap = lweb.label_map()
    missing = set(lweb.web.edge_ids) - set(lmap)
    if missing:
        bad.append(f"unlabeled edges: {ssorted(missing)}")
        return bad
    if datum.valency == "nilvalent":
        if not fc.web_is_nilvalent(lweb.web):
            bad.append("nilvalent datum requires a web without vertices")
        if datum.labels is not None:
            for e, l in lweb.labels:
                if l not in datum.labels:
                    bad.append(f"edge {e!r} carries unknown label {l!r}")
        return bad
    if not fc.web_is_trivalent(lweb.web):
        bad.append("trivalent datum requires a trivalent web")
        return bad
    for v in lweb.web.vertices:
        e1, e2, e3 = web_flow_order(lweb.web, v)
        if datum.add(lmap[e1], lmap[e2]) != lmap[e3]:
            bad.append(f"flow condition fails at vertex {v!r}: {lmap[e1]}+{lmap[e2]} != {lmap[e3]}")
    return bad


def reverse_labeled_web(lweb):
    return LabeledWeb(fc.reverse_web(lweb.web), lweb.labels)


def disjoint_union_labeled_web(a, b):
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    labels = {(0, e): l for e, l in a.labels}
    labels.update({(1, e): l for e, l in b.labels})
    return make_labeled_web(fc.disjoint_union_web(a.web, b.web), labels)


# ---------------------------------------------------------------------------
# labeled foams


@dataclass(frozen=True)
class LabeledFoam:
    """Skeleton plus facet labels, decoration and loop-seam flow orders.

    decoration: ((coeff, ((facet, monomial), ...)), ...) - a formal
    ring-linear combination of pure tensors. loop_orders supplies the
    refined total order (f1, f2, f3) for every loop seam; arc seams get
    theirs from traversal signs.
    """

    skeleton: fc.Foam
    labels: tuple
    decoration: tuple
    loop_orders: tuple = ()

    def label_map(self):
        return dict(self.labels)

    def loop_order_map(self):
        return dict(self.loop_orders)


def make_labeled_foam(skeleton, labels, decoration, loop_orders=()):
    lmap = dict(labels)
    dec = normalize_decoration(decoration)
    items = tuple(sorted(lmap.items(), key=lambda x: sort_key(x[0])))
    lorders = tuple(sorted(((s, tuple(o)) for s, o in dict(loop_orders).items()), key=lambda x: sort_key(x[0])))
    return LabeledFoam(skeleton, items, dec, lorders)


def _coeff_add(a, b):
    """Add ring coefficients without a ring handle; integers or the
    canonical polynomial tuples both support this."""
    if a is None:
        return b
    if isinstance(a, tuple) or isinstance(b, tuple):
        from .rings import _poly_normalize

        return _poly_normalize(list(a) + list(b))
    return a + b


def normalize_decoration(decoration):
    acc = {}
    for coeff, tensor in decoration:
        key = tuple(sorted(dict(tensor).items(), key=lambda x: sort_key(x[0])))
        acc[key] = _coeff_add(acc.get(key), coeff)
    out = []
    for key in sorted(acc, key=sort_key):
        c = acc[key]
        if c == 0 or c == ():
            continue
        out.append((c, key))
    return tuple(out)


def unit_decoration(datum, labels, facets):
    """The decoration '1 on every facet', expanded over basis monomials."""
    lmap = dict(labels)
    tensors = [(datum.ring.one, ())]
    for f in ssorted(facets):
        alg = datum.dec_algebra(lmap[f])
        new = []
        for coeff, tensor in tensors:
            for mono, c in alg.one().items():
                new.append((datum.ring.mul(coeff, c), tensor + ((f, mono),)))
        tensors = new
    return tuple(tensors)


def labeled_identity_foam(lweb, datum):
    """Identity foam with inherited labels and the unit decoration."""
    skel = fc.identity_foam(lweb.web)
    lmap = lweb.label_map()
    labels = {("f", e): lmap[e] for e in lweb.web.edge_ids}
    dec = unit_decoration(datum, labels, labels.keys())
    return make_labeled_foam(skel, labels, dec)


def seam_flow_orders(foam):
    """Refined total order (f1, f2, f3) for every arc seam, from signs."""
    adjacency = fc._facet_adjacency(foam)
    orders = {}
    omap = foam.seam_order_map()
    for s, _, _ in foam.seam_arcs:
        traversals = adjacency.get(("e", s), ())
        neg = [f for f, sign in traversals if sign == -1]
        if len(neg) != 1:
            raise fc.FoamError(f"seam {s!r} lacks the 2+1 orientation pattern")
        cyc = omap[s]
        i = cyc.index(neg[0])
        orders[s] = cyc[i + 1 :] + cyc[: i + 1]
    return orders


def _vertex_configuration(foam, lmap, datum, v):
    """Find the label configuration at an internal vertex.

    Returns (config_index, (k, l, h)) or raises LabelError. The refined
    orders of the four adjacent seams must match one of the two allowed
    patterns exactly.
    """
    flow = seam_flow_orders(foam)
    arcs = {s: (a, b) for s, a, b in foam.seam_arcs}
    at_v = [s for s, (a, b) in arcs.items() if ("v", v) in (a, b)]
    ins = [s for s in at_v if arcs[s][1] == ("v", v)]
    outs = [s for s in at_v if arcs[s][0] == ("v", v)]
    if len(ins) != 2 or len(outs) != 2:
        raise LabelError(f"vertex {v!r} must have two incoming and two outgoing seams")
    adjacency = fc._facet_adjacency(foam)
    facets_of = {s: tuple(f for f, _ in adjacency[("e", s)]) for s in at_v}
    pairmap = {}
    for s in at_v:
        for f in facets_of[s]:
            pairmap.setdefault(f, set()).add(s)
    seam_pair_to_facet = {}
    for f, ss in pairmap.items():
        ss = ss & set(at_v)
        if len(ss) == 2:
            seam_pair_to_facet[frozenset(ss)] = f

    def facet(e, ep):
        return seam_pair_to_facet.get(frozenset((e, ep)))

    for e1, e2 in permutations(ins):
        for e3, e4 in permutations(outs):
            for config in (1, 2):
                if config == 1:
                    f1, f2, f3 = facet(e1, e4), facet(e1, e3), facet(e2, e3)
                else:
                    f1, f2, f3 = facet(e2, e3), facet(e1, e3), facet(e1, e4)
                f4, f5, f6 = facet(e1, e2), facet(e3, e4), facet(e2, e4)
                if None in (f1, f2, f3, f4, f5, f6):
                    continue
                if config == 1:
                    want = {e1: (f1, f2, f4), e2: (f4, f3, f6), e3: (f2, f3, f5), e4: (f1, f5, f6)}
                else:
                    want = {e1: (f2, f3, f4), e2: (f1, f4, f6), e3: (f1, f2, f5), e4: (f5, f3, f6)}
                if all(flow[e] == w for e, w in want.items()):
                    return config, (lmap[f1], lmap[f2], lmap[f3])
    raise LabelError(f"no admissible label configuration at vertex {v!r}")


def validate_labeled_foam(lfoam, datum):
    """Seam flow, vertex configurations, decoration shape; list of
    violations (report style, does not raise)."""
    bad = [m for m in fc.validate_foam(lfoam.skeleton)]
    foam = lfoam.skeleton
    lmap = lfoam.label_map()
    missing = {f for f, _, _ in foam.facets} - set(lmap)
    if missing:
        bad.append(f"unlabeled facets: {ssorted(missing)}")
        return bad
    if datum.labels is not None:
        for f, l in lfoam.labels:
            if l not in datum.labels:
                bad.append(f"facet {f!r} carries unknown label {l!r}")

    # decorations mention exactly the facets, with monomials in Dec(label)
    for coeff, tensor in lfoam.decoration:
        tmap = dict(tensor)
        if set(tmap) != {f for f, _, _ in foam.facets}:
            bad.append("decoration tensor does not assign one monomial per facet")

    if datum.valency == "nilvalent":
        if not fc.foam_is_nilvalent(foam):
            bad.append("nilvalent datum requires a foam without seams and vertices")
        return bad

    try:
        flow = seam_flow_orders(foam)
    except fc.FoamError as e:
        bad.append(str(e))
        return bad
    omap = foam.seam_order_map()
    lorders = lfoam.loop_order_map()
    for s in foam.seam_loops:
        if s not in lorders:
            bad.append(f"loop seam {s!r} has no declared flow order")
            continue
        if not fc._is_rotation(lorders[s], omap[s]):
            bad.append(f"declared flow order of loop seam {s!r} is not a rotation of its cyclic order")
            continue
        flow[s] = tuple(lorders[s])
    for s, (f1, f2, f3) in flow.items():
        if datum.add(lmap[f1], lmap[f2]) != lmap[f3]:
            bad.append(f"seam {s!r}: flow {lmap[f1]}+{lmap[f2]} != {lmap[f3]}")
    for v in foam.vertices:
        try:
            _vertex_configuration(foam, lmap, datum, v)
        except LabelError as e:
            bad.append(str(e))
    return bad


def boundary_labels(lfoam, side):
    """The labels induced on the source ('s') or target ('t') web."""
    foam = lfoam.skeleton
    lmap = lfoam.label_map()
    adjacency = fc._facet_adjacency(foam)
    web = foam.source if side == "s" else foam.target
    out = {}
    for e in web.edge_ids:
        traversals = adjacency.get(("b", side, e), ())
        if len(traversals) != 1:
            raise LabelError(f"boundary edge {e!r} not traversed exactly once")
        out[e] = lmap[traversals[0][0]]
    return out


def foam_degree(lfoam, datum):
    """The graded degree: decoration degree plus weighted Euler counts."""
    if not datum.graded:
        raise LabelError("datum carries no grading")
    foam = lfoam.skeleton
    lmap = lfoam.label_map()
    table, _ = fc.euler(foam)

    degs = set()
    for coeff, tensor in lfoam.decoration:
        d = datum.ring.element_degree(coeff)
        if d is None:
            raise LabelError("decoration coefficient is not homogeneous")
        for f, mono in tensor:
            d += datum.dec_algebra(lmap[f]).deg(mono)
        degs.add(d)
    if len(degs) > 1:
        raise LabelError("decoration is not homogeneous")
    dec_deg = degs.pop() if degs else 0

    total = dec_deg
    for f, g, ws in foam.facets:
        total += datum.weight_facet(lmap[f]) * table[("facet", f)]
    if datum.valency == "trivalent" and (foam.seam_arcs or foam.seam_loops):
        flow = seam_flow_orders(foam)
        flow.update({s: tuple(o) for s, o in lfoam.loop_orders})
        for s in foam.seam_ids:
            f1, f2, _ = flow[s]
            total -= datum.weight_seam(lmap[f1], lmap[f2]) * table[("seam", s)]
        for v in foam.vertices:
            config, (k, l, h) = _vertex_configuration(foam, lmap, datum, v)
            total += datum.weight_vertex(config, k, l, h) * table[("vertex", v)]
    return total


# ---------------------------------------------------------------------------
# composition of labeled foams


def compose_labeled_foam(g, f, datum, rng=None):
    """Compose labeled foams f then g; labels are inherited, decorations
    multiply across merged facet classes."""
    skel, info = fc.compose_with_info(g.skeleton, f.skeleton, rng=rng)
    fmaps = info["facet_class"]
    lmap_f, lmap_g = f.label_map(), g.label_map()
    labels = {}
    for (i, old), new in fmaps.items():
        l = (lmap_f if i == 1 else lmap_g)[old]
        if new in labels and labels[new] != l:
            raise LabelError(f"glued facets carry distinct labels at {new!r}")
        labels[new] = l

    constituents = {}
    for (i, old), new in fmaps.items():
        constituents.setdefault(new, []).append((i, old))

    ring = datum.ring
    out_tensors = []
    for cf, tf in f.decoration:
        for cg, tg in g.decoration:
            coeff = ring.mul(cf, cg)
            if ring.is_zero(coeff):
                continue
            by_old = {(1, fid): mono for fid, mono in tf}
            by_old.update({(2, fid): mono for fid, mono in tg})
            partial = [(coeff, ())]
            for new in ssorted(constituents):
                alg = datum.dec_algebra(labels[new])
                monos = [by_old[m] for m in constituents[new]]
                prod = {monos[0]: ring.one}
                for m in monos[1:]:
                    nxt = {}
                    for mono, c in prod.items():
                        for mono2, c2 in alg.mul(mono, m).items():
                            key = mono2
                            cur = nxt.get(key, ring.zero)
                            s = ring.add(cur, ring.mul(c, c2))
                            if ring.is_zero(s):
                                nxt.pop(key, None)
                            else:
                                nxt[key] = s
                    prod = nxt
                partial = [
                    (ring.mul(c0, c1), tensor + ((new, mono),))
                    for c0, tensor in partial
                    for mono, c1 in prod.items()
                ]
                if not partial:
                    break
            out_tensors.extend(partial)

    # loop-seam flow orders: surviving loops keep theirs (facets mapped);
    # new loop seams inherit the sign-refined order of their constituents
    lorders = {}
    seam_map = info["seam_map"]
    for tag, lf in ((1, f), (2, g)):
        for s, o in lf.loop_orders:
            new = seam_map.get((tag, s))
            if new is not None:
                lorders[new] = tuple(fmaps[(tag, x)] for x in o)
    if info["new_loop_constituents"]:
        flows = {1: seam_flow_orders(f.skeleton), 2: seam_flow_orders(g.skeleton)}
        for new, constituents in info["new_loop_constituents"].items():
            mapped = {
                tuple(fmaps[(tag, x)] for x in flows[tag][s]) for tag, s in constituents
            }
            if len(mapped) != 1:
                raise LabelError(f"flow orders around new loop seam {new!r} disagree")
            lorders[new] = mapped.pop()

    return make_labeled_foam(skel, labels, tuple(out_tensors), lorders)

# ---------------------------------------------------------------------------
# formal linear combinations of labeled foams


@dataclass(frozen=True)
class FoamVector:
    """A formal ring-linear combination of labeled foams sharing the same
    labeled source and target webs. Terms are kept with single pure
    decoration tensors and unit inner coefficients; identical-as-data
    summands are merged (isomorphic-but-distinct data is not)."""

    source: LabeledWeb
    target: LabeledWeb
    terms: tuple  # ((coeff, LabeledFoam), ...)


def foam_vector(source, target, terms):
    acc = {}
    for coeff, lfoam in terms:
        if lfoam.skeleton.source != source.web or lfoam.skeleton.target != target.web:
            raise LabelError("foam boundary does not match the stated webs")
        for c, tensor in lfoam.decoration:
            single = LabeledFoam(lfoam.skeleton, lfoam.labels, ((_unit_like(c), tensor),), lfoam.loop_orders)
            total = _coeff_mul(coeff, c)
            acc[single] = _coeff_add(acc.get(single), total)
    out = []
    for single in sorted(acc, key=lambda lf: sort_key((lf.labels, lf.decoration, lf.loop_orders, lf.skeleton.facets))):
        c = acc[single]
        if c == 0 or c == ():
            continue
        out.append((c, single))
    return FoamVector(source, target, tuple(out))


def _unit_like(c):
    """The multiplicative unit in the coefficient's ring representation."""
    if isinstance(c, tuple):
        if not c:
            return ()
        exps, _ = c[0]
        return (((0,) * len(exps), 1),)
    return 1


def _coeff_mul(a, b):
    if isinstance(a, tuple) or isinstance(b, tuple):
        out = []
        for ea, ca in a:
            for eb, cb in b:
                out.append((tuple(x + y for x, y in zip(ea, eb)), ca * cb))
        from .rings import _poly_normalize

        return _poly_normalize(out)
    return a * b


def vector_from_foam(lfoam, coeff=1):
    src = make_labeled_web(lfoam.skeleton.source, boundary_labels(lfoam, "s"))
    tgt = make_labeled_web(lfoam.skeleton.target, boundary_labels(lfoam, "t"))
    return foam_vector(src, tgt, [(coeff, lfoam)])


def identity_vector(lweb, datum):
    return vector_from_foam(labeled_identity_foam(lweb, datum))


def add_vectors(u, v):
    if u.source != v.source or u.target != v.target:
        raise LabelError("cannot add foam vectors with different boundaries")
    return foam_vector(u.source, u.target, u.terms + v.terms)


def scale_vector(c, u):
    return foam_vector(u.source, u.target, tuple((_coeff_mul(c, c0), lf) for c0, lf in u.terms))


def zero_vector(source, target):
    return FoamVector(source, target, ())


def compose_labeled(g, f, datum, rng=None):
    """Bilinear composition of foam vectors f then g."""
    if f.target != g.source:
        raise LabelError("middle labeled webs do not agree")
    terms = []
    for cf, lf in f.terms:
        for cg, lg in g.terms:
            terms.append((_coeff_mul(cf, cg), compose_labeled_foam(lg, lf, datum, rng=rng)))
    return foam_vector(f.source, g.target, terms)


def disjoint_union_labeled_foam(a, b):
    if a.skeleton.is_empty():
        return b
    if b.skeleton.is_empty():
        return a
    skel = fc.disjoint_union(a.skeleton, b.skeleton)
    labels = {(0, f): l for f, l in a.labels}
    labels.update({(1, f): l for f, l in b.labels})
    dec = []
    for ca, ta in a.decoration:
        for cb, tb in b.decoration:
            tensor = tuple(((0, f), m) for f, m in ta) + tuple(((1, f), m) for f, m in tb)
            dec.append((_coeff_mul(ca, cb), tensor))
    lorders = {(0, s): tuple((0, x) for x in o) for s, o in a.loop_orders}
    lorders.update({(1, s): tuple((1, x) for x in o) for s, o in b.loop_orders})
    return make_labeled_foam(skel, labels, dec, lorders)


def disjoint_union_vectors(u, v):
    terms = []
    for cu, lu in u.terms:
        for cv, lv in v.terms:
            terms.append((_coeff_mul(cu, cv), disjoint_union_labeled_foam(lu, lv)))
    return foam_vector(
        disjoint_union_labeled_web(u.source, v.source),
        disjoint_union_labeled_web(u.target, v.target),
        terms,
    )


def reverse_labeled_foam(lfoam, datum):
    """Skeleton reversal with the involution applied to decorations."""
    skel = fc.reverse_foam(lfoam.skeleton)
    ring = datum.ring
    lmap = lfoam.label_map()
    tensors = []
    for coeff, tensor in lfoam.decoration:
        partial = [(ring.involve(coeff), ())]
        for f, mono in tensor:
            alg = datum.dec_algebra(lmap[f])
            partial = [
                (ring.mul(c0, c1), t + ((f, m2),))
                for c0, t in partial
                for m2, c1 in alg.iota(mono).items()
            ]
        tensors.extend(partial)
    return make_labeled_foam(skel, lfoam.labels, tensors, lfoam.loop_orders)


def reverse_labeled(u, datum):
    """The involution FoamVector(W1 -> W2) -> FoamVector(W2 -> W1)."""
    terms = [(datum.ring.involve(c), reverse_labeled_foam(lf, datum)) for c, lf in u.terms]
    return foam_vector(reverse_labeled_web(u.target), reverse_labeled_web(u.source), terms)


def bend_to_target(u):
    """View FoamVector(W1 -> W2) as FoamVector(empty -> W2 + W1^r)."""
    tgt = disjoint_union_labeled_web(u.target, reverse_labeled_web(u.source))
    terms = []
    for c, lf in u.terms:
        skel = fc.bend_to_target(lf.skeleton)
        terms.append((c, LabeledFoam(skel, lf.labels, lf.decoration, lf.loop_orders)))
    return foam_vector(EMPTY_LWEB, tgt, terms)


def bend_to_source(u):
    """View FoamVector(W1 -> W2) as FoamVector(W1 + W2^r -> empty)."""
    src = disjoint_union_labeled_web(u.source, reverse_labeled_web(u.target))
    terms = []
    for c, lf in u.terms:
        skel = fc.bend_to_source(lf.skeleton)
        terms.append((c, LabeledFoam(skel, lf.labels, lf.decoration, lf.loop_orders)))
    return foam_vector(src, EMPTY_LWEB, terms)


def vector_degree(u, datum):
    degs = set()
    for c, lf in u.terms:
        d = datum.ring.element_degree(c)
        if d is None:
            raise LabelError("coefficient is not homogeneous")
        degs.add(d + foam_degree(lf, datum))
    if len(degs) > 1:
        raise LabelError("foam vector is not homogeneous")
    return degs.pop() if degs else None


def labeled_iso_check(a, b, datum, fix_boundary=True):
    """Isomorphism of single labeled foams: skeleton iso respecting facet
    labels, with matching decorations and loop orders under the map."""
    colors = (a.label_map(), b.label_map())
    m = fc.iso_check(a.skeleton, b.skeleton, fix_boundary=fix_boundary, facet_colors=colors)
    if m is None:
        return None
    fmap = m["facets"]
    mapped_dec = normalize_decoration(
        tuple((c, tuple((fmap[f], mono) for f, mono in tensor)) for c, tensor in a.decoration)
    )
    if mapped_dec != b.decoration:
        return None
    smap = m["seams"]
    mapped_orders = {smap[s]: tuple(fmap[f] for f in o) for s, o in a.loop_orders}
    if mapped_orders != b.loop_order_map():
        return None
    return m


def vectors_isomorphic(u, v, datum, fix_boundary=True):
    """FoamVector equality up to a term-by-term isomorphism matching."""
    if len(u.terms) != len(v.terms):
        return False
    unused = list(range(len(v.terms)))
    for c, lf in u.terms:
        found = None
        for idx in unused:
            c2, lf2 = v.terms[idx]
            if c == c2 and labeled_iso_check(lf, lf2, datum, fix_boundary=fix_boundary):
                found = idx
                break
        if found is None:
            return False
        unused.remove(found)
    return True
