"""Unlabeled combinatorial webs and foams.

A web is an oriented graph with cyclic orderings at vertices. A foam is a
2-complex presented combinatorially: facets carry a genus and cyclic
boundary words over seams and boundary edges, seams carry a cyclic order
of their adjacent facets. Foams are morphisms between closed webs; gluing
two foams along their shared middle web is the composition algorithm.

Cell identifiers are arbitrary hashable values (ints, strings, nested
tuples); all derived structures are kept in canonical sorted form so that
equality of webs and foams is plain structural equality.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .util import UnionFind, sort_key, ssorted


class FoamError(ValueError):
    pass


# ---------------------------------------------------------------------------
# closed webs


@dataclass(frozen=True)
class ClosedWeb:
    """Oriented loops and arcs with cyclic vertex orderings."""

    loops: tuple
    arcs: tuple  # ((id, source_vertex, target_vertex), ...)
    orders: tuple  # ((vertex, (edge, edge, ...)), ...) read cyclically

    @property
    def vertices(self):
        return tuple(v for v, _ in self.orders)

    @property
    def arc_ids(self):
        return tuple(a for a, _, _ in self.arcs)

    @property
    def edge_ids(self):
        return self.loops + self.arc_ids

    def arc_map(self):
        return {a: (s, t) for a, s, t in self.arcs}

    def order_map(self):
        return dict(self.orders)

    def is_empty(self):
        return not self.loops and not self.arcs and not self.orders


EMPTY_WEB = ClosedWeb((), (), ())


def make_web(loops=(), arcs=(), orders=()):
    return ClosedWeb(
        tuple(ssorted(loops)),
        tuple(sorted(arcs, key=lambda a: sort_key(a[0]))),
        tuple(sorted(((v, tuple(es)) for v, es in orders), key=lambda o: sort_key(o[0]))),
    )


def circle_web(loop_id="c"):
    return make_web(loops=[loop_id])


def circles_web(n, prefix="c"):
    return make_web(loops=[f"{prefix}{i}" for i in range(n)])


def theta_web():
    """Two trivalent vertices joined by three parallel arcs."""
    return make_web(
        arcs=[("a", "p", "m"), ("b", "p", "m"), ("c", "m", "p")],
        orders=[("p", ("a", "b", "c")), ("m", ("a", "b", "c"))],
    )


def validate_web(web):
    """Structural checks; returns a list of violations (empty when valid)."""
    bad = []
    seen = set()
    for e in web.edge_ids:
        if e in seen:
            bad.append(f"duplicate edge id {e!r}")
        seen.add(e)
    vs = set(web.vertices)
    if len(vs) != len(web.orders):
        bad.append("duplicate vertex in cyclic orders")
    adj = {v: [] for v in vs}
    for a, s, t in web.arcs:
        if s == t:
            bad.append(f"arc {a!r} has equal endpoints")
        for v in (s, t):
            if v not in vs:
                bad.append(f"arc {a!r} endpoint {v!r} has no cyclic order")
            else:
                adj[v].append(a)
    for v, order in web.orders:
        if sorted(order, key=sort_key) != ssorted(adj.get(v, [])):
            bad.append(f"cyclic order at {v!r} does not list the adjacent arcs")
    return bad


def web_is_nilvalent(web):
    return not web.orders and not web.arcs


def web_is_trivalent(web):
    amap = web.arc_map()
    for v, order in web.orders:
        if len(order) != 3:
            return False
        sources = sum(1 for e in order if amap[e][0] == v)
        if sources not in (1, 2):
            return False
    return True


def vertex_kind(web, v):
    """'split' if two adjacent arcs leave v, 'merge' if two arrive."""
    amap = web.arc_map()
    order = web.order_map()[v]
    sources = sum(1 for e in order if amap[e][0] == v)
    if sources == 2:
        return "split"
    if sources == 1:
        return "merge"
    raise FoamError(f"vertex {v!r} is not trivalent-orientable")


def reverse_web(web):
    return ClosedWeb(web.loops, tuple((a, t, s) for a, s, t in web.arcs), web.orders)


def mirror_web(web):
    return ClosedWeb(
        web.loops,
        web.arcs,
        tuple((v, tuple(reversed(order))) for v, order in web.orders),
    )


def disjoint_union_web(w1, w2):
    if w1.is_empty():
        return w2
    if w2.is_empty():
        return w1

    def tag(i, x):
        return (i, x)

    return make_web(
        loops=[tag(0, e) for e in w1.loops] + [tag(1, e) for e in w2.loops],
        arcs=[(tag(0, a), tag(0, s), tag(0, t)) for a, s, t in w1.arcs]
        + [(tag(1, a), tag(1, s), tag(1, t)) for a, s, t in w2.arcs],
        orders=[(tag(0, v), tuple(tag(0, e) for e in o)) for v, o in w1.orders]
        + [(tag(1, v), tuple(tag(1, e) for e in o)) for v, o in w2.orders],
    )


# ---------------------------------------------------------------------------
# cyclic words

# A letter is ('e', seam_id) or ('b', side, edge_id) with side 's'/'t'.
# A word is ('loop', letter) or ('cyc', ((letter, sign), ...)) stored in the
# lexicographically minimal rotation; signs are +1/-1 and always kept.


def make_loop_word(letter):
    return ("loop", letter)


def make_cyc_word(steps):
    steps = tuple((letter, sign) for letter, sign in steps)
    if not steps:
        raise FoamError("empty cyclic word")
    best = min(
        (steps[i:] + steps[:i] for i in range(len(steps))),
        key=lambda rot: sort_key(rot),
    )
    return ("cyc", best)


def word_letters(word):
    if word[0] == "loop":
        return (word[1],)
    return tuple(letter for letter, _ in word[1])


def word_steps(word):
    if word[0] == "loop":
        raise FoamError("loop words have no steps")
    return word[1]


# ---------------------------------------------------------------------------
# foams


@dataclass(frozen=True)
class Foam:
    """A combinatorial foam between two closed webs.

    Boundary cells are referenced through the webs: a boundary edge is
    ('b', 't', e) for e in `target` or ('b', 's', e) for e in `source`,
    the source-side copy carrying the reversed orientation. Seam-arc
    endpoints are ('v', internal_vertex) or ('b', side, web_vertex).
    """

    source: ClosedWeb
    target: ClosedWeb
    vertices: tuple
    seam_loops: tuple
    seam_arcs: tuple  # ((id, src_ref, tgt_ref), ...)
    seam_orders: tuple  # ((seam_id, (facet, facet, facet)), ...)
    facets: tuple  # ((id, genus, frozenset_of_words), ...)

    @property
    def seam_ids(self):
        return self.seam_loops + tuple(s for s, _, _ in self.seam_arcs)

    def seam_arc_map(self):
        return {s: (a, b) for s, a, b in self.seam_arcs}

    def seam_order_map(self):
        return dict(self.seam_orders)

    def facet_map(self):
        return {f: (g, ws) for f, g, ws in self.facets}

    def is_empty(self):
        return not self.facets and self.source.is_empty() and self.target.is_empty()


def make_foam(source, target, vertices=(), seam_loops=(), seam_arcs=(), seam_orders=(), facets=()):
    return Foam(
        source,
        target,
        tuple(ssorted(vertices)),
        tuple(ssorted(seam_loops)),
        tuple(sorted(seam_arcs, key=lambda a: sort_key(a[0]))),
        tuple(sorted(((s, tuple(o)) for s, o in seam_orders), key=lambda x: sort_key(x[0]))),
        tuple(
            sorted(
                ((f, g, frozenset(ws)) for f, g, ws in facets),
                key=lambda x: sort_key(x[0]),
            )
        ),
    )


EMPTY_FOAM = make_foam(EMPTY_WEB, EMPTY_WEB)


def boundary(foam):
    """The boundary web: target disjoint-union reversed source."""
    return disjoint_union_web(foam.target, reverse_web(foam.source))


def boundary_edge_refs(foam):
    return tuple(("b", "t", e) for e in foam.target.edge_ids) + tuple(
        ("b", "s", e) for e in foam.source.edge_ids
    )


def boundary_arc_endpoints(foam, ref):
    """(tail, head) vertex refs of a boundary arc, source side reversed."""
    _, side, e = ref
    web = foam.target if side == "t" else foam.source
    s, t = web.arc_map()[e]
    if side == "s":
        s, t = t, s
    return (("b", side, s), ("b", side, t))


def letter_kind(foam, letter):
    if letter[0] == "e":
        return "loop" if letter[1] in foam.seam_loops else "arc"
    _, side, e = letter
    web = foam.target if side == "t" else foam.source
    return "loop" if e in web.loops else "arc"


def letter_endpoints(foam, letter):
    if letter[0] == "e":
        return foam.seam_arc_map()[letter[1]]
    return boundary_arc_endpoints(foam, letter)


def step_endpoints(foam, letter, sign):
    a, b = letter_endpoints(foam, letter)
    return (a, b) if sign == 1 else (b, a)


def foam_is_nilvalent(foam):
    return (
        not foam.vertices
        and not foam.seam_loops
        and not foam.seam_arcs
        and web_is_nilvalent(foam.source)
        and web_is_nilvalent(foam.target)
    )


def foam_is_trivalent(foam):
    if not web_is_trivalent(foam.source) or not web_is_trivalent(foam.target):
        return False
    adjacency = _facet_adjacency(foam)
    for s in foam.seam_ids:
        if len(adjacency.get(("e", s), ())) != 3:
            return False
    return all(not v for v in _link_violations(foam))


def _facet_adjacency(foam):
    """letter -> tuple of (facet, sign or None) traversals, in facet order."""
    adj = {}
    for f, _, words in foam.facets:
        for w in words:
            if w[0] == "loop":
                adj.setdefault(w[1], []).append((f, None))
            else:
                for letter, sign in w[1]:
                    adj.setdefault(letter, []).append((f, sign))
    return {k: tuple(v) for k, v in adj.items()}


def _link_violations(foam):
    """Tetrahedron-link condition at internal vertices; yields messages."""
    seam_at = {}
    for s, a, b in foam.seam_arcs:
        for ref in (a, b):
            if ref[0] == "v":
                seam_at.setdefault(ref[1], []).append(s)
    # facets traversing each vertex: via junctions of their words
    facets_at = {}
    for f, _, words in foam.facets:
        for w in words:
            if w[0] != "cyc":
                continue
            steps = w[1]
            for i in range(len(steps)):
                letter, sign = steps[i]
                head = step_endpoints(foam, letter, sign)[1]
                if head[0] == "v":
                    facets_at.setdefault(head[1], []).append(f)
    adjacency = _facet_adjacency(foam)
    for v in foam.vertices:
        seams = seam_at.get(v, [])
        if len(seams) != 4:
            yield f"internal vertex {v!r} has {len(seams)} adjacent seams, expected 4"
            continue
        local_facets = facets_at.get(v, [])
        if len(set(local_facets)) != 6 or len(local_facets) != 6:
            yield f"link of {v!r} does not have 6 facets"
            continue
        pair_count = {}
        for f in set(local_facets):
            touching = tuple(s for s in seams if any(fac == f for fac, _ in adjacency.get(("e", s), ())))
            if len(touching) != 2:
                yield f"facet {f!r} does not span exactly 2 seams at {v!r}"
                break
            pair_count[frozenset(touching)] = pair_count.get(frozenset(touching), 0) + 1
        else:
            if len(pair_count) != 6 or any(c != 1 for c in pair_count.values()):
                yield f"link of {v!r} is not a tetrahedron 1-skeleton"


def validate_foam(foam):
    """Full validity check; returns list of violations."""
    bad = []
    bad.extend(f"source web: {m}" for m in validate_web(foam.source))
    bad.extend(f"target web: {m}" for m in validate_web(foam.target))

    seam_ids = foam.seam_ids
    if len(set(seam_ids)) != len(seam_ids):
        bad.append("duplicate seam id")
    if len({f for f, _, _ in foam.facets}) != len(foam.facets):
        bad.append("duplicate facet id")
    vset = set(foam.vertices)
    brefs = set(boundary_edge_refs(foam))
    bvrefs = {("b", "t", v) for v in foam.target.vertices} | {("b", "s", v) for v in foam.source.vertices}

    for s, a, b in foam.seam_arcs:
        if a == b:
            bad.append(f"seam arc {s!r} has equal endpoints")
        for ref in (a, b):
            if ref[0] == "v":
                if ref[1] not in vset:
                    bad.append(f"seam arc {s!r} endpoint {ref!r} unknown")
            elif ref not in bvrefs:
                bad.append(f"seam arc {s!r} endpoint {ref!r} unknown")

    # each boundary vertex adjacent to exactly one seam
    bv_seams = {}
    for s, a, b in foam.seam_arcs:
        for ref in (a, b):
            if ref[0] == "b":
                bv_seams.setdefault(ref, []).append(s)
    for ref in bvrefs:
        if len(bv_seams.get(ref, [])) != 1:
            bad.append(f"boundary vertex {ref!r} is adjacent to {len(bv_seams.get(ref, []))} seams, expected 1")

    # word well-formedness, per-facet traversal uniqueness
    for f, g, words in foam.facets:
        if g < 0:
            bad.append(f"facet {f!r} has negative genus")
        used_cells = set()
        for w in words:
            if w[0] == "loop":
                letter = w[1]
                if letter[0] == "e":
                    if letter[1] not in foam.seam_loops:
                        bad.append(f"facet {f!r}: loop word letter {letter!r} is not a loop seam")
                elif letter not in brefs or letter_kind(foam, letter) != "loop":
                    bad.append(f"facet {f!r}: loop word letter {letter!r} is not a boundary loop")
                if letter in used_cells:
                    bad.append(f"facet {f!r} traverses {letter!r} twice")
                used_cells.add(letter)
                continue
            steps = w[1]
            junctions = []
            ok = True
            for letter, sign in steps:
                if letter[0] == "e":
                    if letter[1] not in {s for s, _, _ in foam.seam_arcs}:
                        bad.append(f"facet {f!r}: letter {letter!r} is not an arc seam")
                        ok = False
                        break
                else:
                    if letter not in brefs or letter_kind(foam, letter) != "arc":
                        bad.append(f"facet {f!r}: letter {letter!r} is not a boundary arc")
                        ok = False
                        break
                    if sign != 1:
                        bad.append(f"facet {f!r}: boundary arc {letter!r} traversed with negative sign")
                if letter in used_cells:
                    bad.append(f"facet {f!r} traverses {letter!r} twice")
                used_cells.add(letter)
            if not ok:
                continue
            for i in range(len(steps)):
                letter, sign = steps[i]
                nletter, nsign = steps[(i + 1) % len(steps)]
                head = step_endpoints(foam, letter, sign)[1]
                tail = step_endpoints(foam, nletter, nsign)[0]
                if head != tail:
                    bad.append(f"facet {f!r}: word not composable at {letter!r} -> {nletter!r}")
                junctions.append(head)
            if len(set(junctions)) != len(junctions):
                bad.append(f"facet {f!r}: word re-visits a vertex")
            for j in junctions:
                if j in used_cells:
                    bad.append(f"facet {f!r} traverses vertex {j!r} twice")
                used_cells.add(j)

    adjacency = _facet_adjacency(foam)

    # boundary edges traversed exactly once globally
    for ref in brefs:
        n = len(adjacency.get(ref, ()))
        if n != 1:
            bad.append(f"boundary edge {ref!r} traversed {n} times, expected 1")

    # seam orders present exactly for seams, listing adjacent facets
    order_map = foam.seam_order_map()
    if set(order_map) != set(seam_ids):
        bad.append("seam cyclic orders do not match the seam set")
    for s in seam_ids:
        facets_here = [f for f, _ in adjacency.get(("e", s), ())]
        if sorted(order_map.get(s, ()), key=sort_key) != ssorted(facets_here):
            bad.append(f"cyclic order of seam {s!r} does not list its adjacent facets")

    # valency
    nil = foam_is_nilvalent(foam)
    if not nil:
        for s in seam_ids:
            if len(adjacency.get(("e", s), ())) != 3:
                bad.append(f"seam {s!r} adjacent to {len(adjacency.get(('e', s), ()))} facets, expected 3")
        for s, _, _ in foam.seam_arcs:
            signs = [sign for _, sign in adjacency.get(("e", s), ())]
            if sorted(signs) != [-1, 1, 1]:
                bad.append(f"seam {s!r}: orientation must be induced by exactly two facets")
        bad.extend(_link_violations(foam))
        bad.extend(_boundary_order_violations(foam, adjacency))
    return bad


def _boundary_order_violations(foam, adjacency):
    """Web cyclic orders must match the facet order around the seam at
    each boundary vertex, through the edge<->facet bijection."""
    order_map = foam.seam_order_map()
    bv_seam = {}
    for s, a, b in foam.seam_arcs:
        for ref in (a, b):
            if ref[0] == "b":
                bv_seam[ref] = s
    for side, web in (("t", foam.target), ("s", foam.source)):
        for v, order in web.orders:
            ref = ("b", side, v)
            s = bv_seam.get(ref)
            if s is None:
                continue  # reported elsewhere
            facet_of_edge = []
            ok = True
            for e in order:
                traversals = adjacency.get(("b", side, e), ())
                if len(traversals) != 1:
                    ok = False
                    break
                facet_of_edge.append(traversals[0][0])
            if not ok:
                continue
            seam_cycle = order_map.get(s, ())
            if not _is_rotation(tuple(facet_of_edge), seam_cycle):
                yield f"cyclic order at boundary vertex {ref!r} disagrees with seam {s!r}"


def _is_rotation(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(b[i:] + b[:i] == a for i in range(len(b)))


# ---------------------------------------------------------------------------
# elementary constructions


def identity_foam(web):
    """The identity foam on a closed web: a sheet of facets, one per edge."""
    amap = web.arc_map()
    seam_arcs = []
    for v in web.vertices:
        kind = vertex_kind(web, v)
        if kind == "merge":  # target copy is the merge end
            seam_arcs.append((("sv", v), ("b", "t", v), ("b", "s", v)))
        else:
            seam_arcs.append((("sv", v), ("b", "s", v), ("b", "t", v)))
    facets = []
    for e in web.loops:
        facets.append(
            (("f", e), 0, [make_loop_word(("b", "t", e)), make_loop_word(("b", "s", e))])
        )
    for e, v, vp in ((a, s, t) for a, s, t in web.arcs):
        kinds = {u: vertex_kind(web, u) for u in (v, vp)}
        sign_out = {u: (1 if kinds[u] == "merge" else -1) for u in (v, vp)}
        # path: t-copy of e (v -> vp), seam at vp down to source side,
        # s-copy of e backwards (vp -> v), seam at v back up
        word = make_cyc_word(
            [
                (("b", "t", e), 1),
                (("e", ("sv", vp)), sign_out[vp]),
                (("b", "s", e), 1),
                (("e", ("sv", v)), -sign_out[v]),
            ]
        )
        facets.append((("f", e), 0, [word]))
    seam_orders = []
    omap = web.order_map()
    for v in web.vertices:
        seam_orders.append(((("sv", v)), tuple(("f", e) for e in omap[v])))
    return make_foam(web, web, seam_arcs=seam_arcs, seam_orders=seam_orders, facets=facets)


def nilvalent_foam(source, target, facet_spec):
    """Decorated-surface style foam: facet_spec is ((genus, loop_refs), ...)
    with loop_refs like ('t', loop_id) or ('s', loop_id)."""
    facets = []
    for i, (genus, refs) in enumerate(facet_spec):
        words = [make_loop_word(("b", side, e)) for side, e in refs]
        facets.append((i, genus, words))
    return make_foam(source, target, facets=facets)


def reverse_foam(foam):
    """Orientation reversal; swaps the roles of source and target."""

    def flip_ref(ref):
        if ref[0] == "b":
            return ("b", "t" if ref[1] == "s" else "s", ref[2])
        return ref

    def flip_letter(letter):
        if letter[0] == "b":
            return ("b", "t" if letter[1] == "s" else "s", letter[2])
        return letter

    def flip_word(w):
        if w[0] == "loop":
            return make_loop_word(flip_letter(w[1]))
        return make_cyc_word([(flip_letter(letter), sign) for letter, sign in reversed(w[1])])

    return make_foam(
        foam.target,
        foam.source,
        vertices=foam.vertices,
        seam_loops=foam.seam_loops,
        seam_arcs=[(s, flip_ref(b), flip_ref(a)) for s, a, b in foam.seam_arcs],
        seam_orders=foam.seam_orders,
        facets=[(f, g, [flip_word(w) for w in ws]) for f, g, ws in foam.facets],
    )


def mirror_foam(foam):
    """Reverse every cyclic ordering (of facets around seams, and of the
    boundary webs' vertex orders)."""
    return make_foam(
        mirror_web(foam.source),
        mirror_web(foam.target),
        vertices=foam.vertices,
        seam_loops=foam.seam_loops,
        seam_arcs=foam.seam_arcs,
        seam_orders=[(s, tuple(reversed(o))) for s, o in foam.seam_orders],
        facets=foam.facets,
    )


def disjoint_union(f1, f2):
    if f1.is_empty():
        return f2
    if f2.is_empty():
        return f1

    # boundary tags must mirror disjoint_union_web, which keeps ids when
    # one side of the union is the empty web
    tag_src = not f1.source.is_empty() and not f2.source.is_empty()
    tag_tgt = not f1.target.is_empty() and not f2.target.is_empty()

    def tag_bd(i, side, x):
        if (side == "s" and tag_src) or (side == "t" and tag_tgt):
            return (i, x)
        return x

    def tag_ref(i, ref):
        if ref[0] == "b":
            return ("b", ref[1], tag_bd(i, ref[1], ref[2]))
        return ("v", (i, ref[1]))

    def tag_letter(i, letter):
        if letter[0] == "b":
            return ("b", letter[1], tag_bd(i, letter[1], letter[2]))
        return ("e", (i, letter[1]))

    def tag_word(i, w):
        if w[0] == "loop":
            return make_loop_word(tag_letter(i, w[1]))
        return make_cyc_word([(tag_letter(i, letter), sign) for letter, sign in w[1]])

    vertices, seam_loops, seam_arcs, seam_orders, facets = [], [], [], [], []
    for i, f in ((0, f1), (1, f2)):
        vertices += [(i, v) for v in f.vertices]
        seam_loops += [(i, s) for s in f.seam_loops]
        seam_arcs += [((i, s), tag_ref(i, a), tag_ref(i, b)) for s, a, b in f.seam_arcs]
        seam_orders += [((i, s), tuple((i, x) for x in o)) for s, o in f.seam_orders]
        facets += [((i, fa), g, [tag_word(i, w) for w in ws]) for fa, g, ws in f.facets]
    return make_foam(
        disjoint_union_web(f1.source, f2.source),
        disjoint_union_web(f1.target, f2.target),
        vertices=vertices,
        seam_loops=seam_loops,
        seam_arcs=seam_arcs,
        seam_orders=seam_orders,
        facets=facets,
    )


def euler(foam):
    """Euler characteristics of the internal cells plus facets.

    Facets count 2 - n - 2g, arc seams 1, loop seams 0, internal vertices 1.
    The total is additive over gluing once the middle web's cells
    (vertices and arcs at 1, loops at 0) are subtracted.
    """
    table = {}
    for f, g, ws in foam.facets:
        table[("facet", f)] = 2 - len(ws) - 2 * g
    for s in foam.seam_loops:
        table[("seam", s)] = 0
    for s, _, _ in foam.seam_arcs:
        table[("seam", s)] = 1
    for v in foam.vertices:
        table[("vertex", v)] = 1
    return table, sum(table.values())


def middle_web_euler(web):
    """Vertices and arcs count 1, loops count 0."""
    return len(web.vertices) + len(web.arcs)


# ---------------------------------------------------------------------------
# composition


def compose(f2, f1, rng=None):
    """Glue f1: W1 -> W2 with f2: W2 -> W3 along the shared middle web.

    The middle web must be the identical web object on both sides. The
    optional rng only affects the order in which grafting and splitting
    steps are applied; the result is independent of it up to nothing at
    all (the output is deterministic data either way).
    """
    return compose_with_info(f2, f1, rng=rng)[0]


def compose_with_info(f2, f1, rng=None):
    """Composition returning (foam, info); info['facet_class'] maps the
    tagged input facets (1, f) / (2, f) to facets of the composite."""
    if f1.target != f2.source:
        raise FoamError("boundary mismatch: target web of the first foam must be the source web of the second")
    if foam_is_nilvalent(f1) != foam_is_nilvalent(f2):
        raise FoamError("mixed valency")
    middle = f1.target
    mverts = set(middle.vertices)
    mloops = set(middle.loops)
    marcs = set(middle.arc_ids)

    # --- seams adjacent to middle vertices
    seam_end_at = {}  # middle vertex -> {1: tagged seam, 2: tagged seam}
    for i, f in ((1, f1), (2, f2)):
        side = "t" if i == 1 else "s"
        for s, a, b in f.seam_arcs:
            for ref in (a, b):
                if ref[0] == "b" and ref[1] == side and ref[2] in mverts:
                    slot = seam_end_at.setdefault(ref[2], {})
                    if i in slot:
                        raise FoamError(f"middle vertex {ref[2]!r} has two seams on one side")
                    slot[i] = (i, s)
    for v in mverts:
        if len(seam_end_at.get(v, {})) != 2:
            raise FoamError(f"middle vertex {v!r} must have one adjacent seam on each side")

    def tag_ref(i, ref):
        if ref[0] == "v":
            return ("v", (i, ref[1]))
        if i == 1 and ref[1] == "t" and ref[2] in mverts:
            return ("mv", ref[2])
        if i == 2 and ref[1] == "s" and ref[2] in mverts:
            return ("mv", ref[2])
        return ref

    seam_data = {}  # tagged seam arc -> (src_ref, tgt_ref), middles marked
    for i, f in ((1, f1), (2, f2)):
        for s, a, b in f.seam_arcs:
            seam_data[(i, s)] = (tag_ref(i, a), tag_ref(i, b))

    seam_adj = {}  # tagged seam -> ((middle vertex, partner seam), ...)
    for v in ssorted(mverts):
        s1, s2 = seam_end_at[v][1], seam_end_at[v][2]
        seam_adj.setdefault(s1, []).append((v, s2))
        seam_adj.setdefault(s2, []).append((v, s1))

    # --- maximal paths of seams through middle vertices
    path_of_seam = {}
    path_seams = {}
    new_arcs = {}
    new_loops = []
    visited = set()
    for s0 in ssorted(seam_adj):
        if s0 in visited:
            continue
        comp = {s0}
        stack = [s0]
        while stack:
            s = stack.pop()
            for _, o in seam_adj[s]:
                if o not in comp:
                    comp.add(o)
                    stack.append(o)
        visited |= comp
        ends = [s for s in ssorted(comp) if len(seam_adj[s]) == 1]
        if not ends:
            mids = ssorted({v for s in comp for v, _ in seam_adj[s]})
            pid = ("ncyc", tuple(mids))
            new_loops.append(pid)
            for s in comp:
                path_of_seam[s] = pid
            path_seams[pid] = frozenset(comp)
            continue
        if len(ends) != 2:
            raise FoamError("branching middle path")
        order = [ends[0]]
        junctions = []
        prev_v = None
        cur = ends[0]
        while True:
            nxts = [(v, o) for v, o in seam_adj[cur] if v != prev_v]
            if not nxts:
                break
            v, o = nxts[0]
            junctions.append(v)
            order.append(o)
            prev_v, cur = v, o
        dirs = []
        enters, exits = [], []
        for k, s in enumerate(order):
            a, b = seam_data[s]
            if k == 0:
                exit_ = ("mv", junctions[0])
                enter = a if b == exit_ else b
                if (enter, exit_) not in ((a, b), (b, a)):
                    raise FoamError("middle path assembly failed")
            elif k < len(junctions):
                enter, exit_ = ("mv", junctions[k - 1]), ("mv", junctions[k])
            else:
                enter = ("mv", junctions[k - 1])
                exit_ = b if a == enter else a
            enters.append(enter)
            exits.append(exit_)
            dirs.append((enter, exit_) == (a, b))
        if len(set(dirs)) != 1:
            raise FoamError("inconsistently oriented seams along a middle path")
        pid = ("npath", tuple(ssorted(junctions)))
        # orient the new arc by the common direction of its constituents
        new_arcs[pid] = (enters[0], exits[-1]) if dirs[0] else (exits[-1], enters[0])
        for s in comp:
            path_of_seam[s] = pid
        path_seams[pid] = frozenset(comp)

    surviving = {s for s in seam_data if s not in seam_adj}

    # --- facet classes: glued along shared middle boundary edges
    uf = UnionFind()
    middle_traversals = {}
    for i, f in ((1, f1), (2, f2)):
        side = "t" if i == 1 else "s"
        for fa, _, ws in f.facets:
            uf.find((i, fa))
            for w in ws:
                for letter in word_letters(w):
                    if letter[0] == "b" and letter[1] == side and (letter[2] in mloops or letter[2] in marcs):
                        middle_traversals.setdefault(letter[2], []).append((i, fa))
    for e, fs in middle_traversals.items():
        if len(fs) != 2:
            raise FoamError(f"middle edge {e!r} traversed {len(fs)} times")
        uf.union(fs[0], fs[1])

    def translate_step(i, letter, sign):
        if letter[0] == "e":
            return ("e", (i, letter[1])), sign
        if i == 1 and letter[1] == "t" and letter[2] in marcs:
            return ("mid", letter[2]), sign
        if i == 2 and letter[1] == "s" and letter[2] in marcs:
            # the source-side copy carries the reversed middle orientation
            return ("mid", letter[2]), -sign
        return letter, sign

    classes = {}
    for i, f in ((1, f1), (2, f2)):
        for fa, g, ws in f.facets:
            rep = uf.find((i, fa))
            entry = classes.setdefault(
                rep, {"members": [], "loopw": [], "cycw": [], "g": 0, "n": 0, "count": [0, 0]}
            )
            entry["members"].append((i, fa))
            entry["g"] += g
            entry["n"] += len(ws)
            entry["count"][i - 1] += 1
            for w in ws:
                if w[0] == "loop":
                    letter = w[1]
                    if letter[0] == "b" and ((i == 1 and letter[1] == "t") or (i == 2 and letter[1] == "s")) and letter[2] in mloops:
                        entry["loopw"].append(("mid", letter[2]))
                    else:
                        entry["loopw"].append(letter)
                else:
                    entry["cycw"].append([translate_step(i, letter, sign) for letter, sign in w[1]])

    def step_head(letter, sign):
        if letter[0] == "e":
            a, b = seam_data[letter[1]]
        else:
            _, side, e = letter
            web = f2.target if side == "t" else f1.source
            s, t = web.arc_map()[e]
            if side == "s":
                s, t = t, s
            a, b = ("b", side, s), ("b", side, t)
        return b if sign == 1 else a

    import random as _random

    chooser = rng if rng is not None else _random.Random(0)

    new_facets = []
    facet_class = {}
    info_counts = {}
    for rep in ssorted(classes):
        entry = classes[rep]
        cyc_words = [list(w) for w in entry["cycw"]]
        g_plus = n_minus = n_plus = 0

        # (a) remove matched pairs of middle-loop words
        loop_words = []
        mid_loop_count = {}
        for letter in entry["loopw"]:
            if letter[0] == "mid":
                mid_loop_count[letter[1]] = mid_loop_count.get(letter[1], 0) + 1
            else:
                loop_words.append(letter)
        for e in ssorted(mid_loop_count):
            if mid_loop_count[e] != 2:
                raise FoamError(f"middle loop {e!r} appears {mid_loop_count[e]} times in a facet class")
            g_plus += 1

        # (b1)/(b2): remove doubly-traversed middle arcs, grafting or
        # splitting; the order of these steps does not affect the result
        while True:
            occ = {}
            for wi, w in enumerate(cyc_words):
                for pos, (letter, sign) in enumerate(w):
                    if letter[0] == "mid":
                        occ.setdefault(letter[1], []).append((wi, pos, sign))
            if not occ:
                break
            candidates = ssorted(occ)
            e = candidates[chooser.randrange(len(candidates))] if len(candidates) > 1 else candidates[0]
            places = occ[e]
            if len(places) != 2:
                raise FoamError(f"middle arc {e!r} appears {len(places)} times in a facet class")
            (w1i, p1, s1), (w2i, p2, s2) = places
            if s1 + s2 != 0:
                raise FoamError(f"middle arc {e!r} not traversed in opposite orientations")
            if w1i != w2i:
                a = cyc_words[w1i]
                b = cyc_words[w2i]
                merged = (a[p1 + 1 :] + a[:p1]) + (b[p2 + 1 :] + b[:p2])
                for wi in sorted((w1i, w2i), reverse=True):
                    cyc_words.pop(wi)
                cyc_words.append(merged)
                n_minus += 1
            else:
                w = cyc_words.pop(w1i)
                q1, q2 = sorted((p1, p2))
                seg1 = w[q1 + 1 : q2]
                seg2 = w[q2 + 1 :] + w[:q1]
                if not seg1 or not seg2:
                    raise FoamError("splitting a middle arc produced an empty word")
                cyc_words.extend([seg1, seg2])
                n_plus += 1

        # (c) contract maximal seam runs through middle vertices
        final_cycs = []
        for w in cyc_words:
            n = len(w)
            midj = [step_head(*w[i])[0] == "mv" for i in range(n)]
            if all(midj):
                pid = path_of_seam.get(w[0][0][1]) if w[0][0][0] == "e" else None
                if pid is None or {l[1] for l, _ in w} != set(path_seams[pid]):
                    raise FoamError("closed middle word does not match one middle cycle")
                if len({sign for _, sign in w}) != 1:
                    raise FoamError("closed middle word traversed incoherently")
                loop_words.append(("e", pid))
                continue
            if not any(midj):
                final_cycs.append(w)
                continue
            start = next(i for i in range(n) if not midj[i - 1])
            out = []
            idx = start
            steps_done = 0
            while steps_done < n:
                letter, sign = w[idx]
                if letter[0] == "e" and letter[1] in path_of_seam:
                    run = [(letter, sign)]
                    while midj[idx]:
                        idx = (idx + 1) % n
                        steps_done += 1
                        run.append(w[idx])
                    pid = path_of_seam[run[0][0][1]]
                    if {l[1] for l, _ in run} != set(path_seams[pid]):
                        raise FoamError("middle run does not cover its full path")
                    signs = {sgn for _, sgn in run}
                    if len(signs) != 1:
                        raise FoamError("middle run traversed incoherently")
                    out.append((("e", pid), signs.pop()))
                else:
                    out.append((letter, sign))
                idx = (idx + 1) % n
                steps_done += 1
            final_cycs.append(out)

        genus = entry["g"] + n_minus + g_plus + 1 - entry["count"][0] - entry["count"][1]
        nb = entry["n"] - 2 * g_plus - n_minus + n_plus
        words = [make_loop_word(l) for l in loop_words] + [make_cyc_word(w) for w in final_cycs]
        if genus < 0:
            raise FoamError("negative genus in glued facet")
        if nb != len(words):
            raise FoamError("boundary count mismatch in glued facet")
        new_facets.append((rep, genus, words))
        for m in entry["members"]:
            facet_class[m] = rep
        info_counts[rep] = {"g_plus": g_plus, "n_minus": n_minus, "n_plus": n_plus}

    # --- seam cyclic orders
    def map_facet(i, fa):
        return uf.find((i, fa))

    seam_orders = []
    order_by_path = {}
    for i, f in ((1, f1), (2, f2)):
        omap = f.seam_order_map()
        for s in f.seam_loops:
            seam_orders.append(((i, s), tuple(map_facet(i, x) for x in omap[s])))
        for s, _, _ in f.seam_arcs:
            ts = (i, s)
            triple = tuple(map_facet(i, x) for x in omap[s])
            pid = path_of_seam.get(ts)
            if pid is None:
                seam_orders.append((ts, triple))
            elif pid in order_by_path:
                if not _is_rotation(order_by_path[pid], triple):
                    raise FoamError(f"cyclic orderings around new seam {pid!r} disagree")
            else:
                order_by_path[pid] = triple
    seam_orders.extend(ssorted(order_by_path.items()))

    raw = make_foam(
        f1.source,
        f2.target,
        vertices=[(1, v) for v in f1.vertices] + [(2, v) for v in f2.vertices],
        seam_loops=[(i, s) for i, f in ((1, f1), (2, f2)) for s in f.seam_loops] + new_loops,
        seam_arcs=[(ts, *seam_data[ts]) for ts in ssorted(surviving)]
        + [(pid, a, b) for pid, (a, b) in ssorted(new_arcs.items())],
        seam_orders=seam_orders,
        facets=new_facets,
    )
    foam, relabel = _relabel_canonical(raw)
    info = {
        "facet_class": {m: relabel["facet"][rep] for m, rep in facet_class.items()},
        "counts": {relabel["facet"][rep]: c for rep, c in info_counts.items()},
        "middle_euler": middle_web_euler(middle),
        "seam_map": dict(relabel["seam"]),
        "new_loop_constituents": {
            relabel["seam"][pid]: tuple(ssorted(path_seams[pid])) for pid in new_loops
        },
    }
    return foam, info


def _relabel_canonical(foam):
    vmap = {v: n for n, v in enumerate(ssorted(foam.vertices))}
    smap = {s: n for n, s in enumerate(ssorted(foam.seam_ids))}
    fmap = {f: n for n, f in enumerate(ssorted(x for x, _, _ in foam.facets))}

    def ref(r):
        return ("v", vmap[r[1]]) if r[0] == "v" else r

    def letter(l):
        return ("e", smap[l[1]]) if l[0] == "e" else l

    def word(w):
        if w[0] == "loop":
            return make_loop_word(letter(w[1]))
        return make_cyc_word([(letter(l), sign) for l, sign in w[1]])

    out = make_foam(
        foam.source,
        foam.target,
        vertices=list(vmap.values()),
        seam_loops=[smap[s] for s in foam.seam_loops],
        seam_arcs=[(smap[s], ref(a), ref(b)) for s, a, b in foam.seam_arcs],
        seam_orders=[(smap[s], tuple(fmap[f] for f in o)) for s, o in foam.seam_orders],
        facets=[(fmap[f], g, [word(w) for w in ws]) for f, g, ws in foam.facets],
    )
    return out, {"vertex": vmap, "seam": smap, "facet": fmap}

# ---------------------------------------------------------------------------
# isomorphism oracle


def _max_backtrack():
    try:
        return int(os.environ.get("FOAMCAT_MAX_BACKTRACK", "500000"))
    except ValueError:
        return 500000


class _IsoBudget(Exception):
    pass


def _word_shape(foam, w):
    if w[0] == "loop":
        letter = w[1]
        return ("loop", "e" if letter[0] == "e" else ("b", letter[1]))
    sorts = []
    for letter, sign in w[1]:
        sorts.append(("e", sign) if letter[0] == "e" else ("b", letter[1], sign))
    return ("cyc", len(sorts), tuple(sorted(sorts, key=sort_key)))


def _facet_signature(foam, f, genus, words, color):
    shapes = tuple(sorted((_word_shape(foam, w) for w in words), key=sort_key))
    return (genus, len(words), shapes, color)


def iso_check(f1, f2, fix_boundary=False, facet_colors=None):
    """Search for an isomorphism of combinatorial foams.

    Returns a dict of cell bijections, or None. The bijection preserves
    the loop/arc partitions, orientations, genus, boundary words up to
    rotation, cyclic orderings, and the source/target sides; with
    fix_boundary=True it is required to restrict to the identity on the
    boundary webs (the right notion of equality for parallel morphisms).
    """
    c1 = facet_colors[0] if facet_colors else {}
    c2 = facet_colors[1] if facet_colors else {}
    if fix_boundary and (f1.source != f2.source or f1.target != f2.target):
        return None
    if len(f1.facets) != len(f2.facets) or len(f1.seam_arcs) != len(f2.seam_arcs):
        return None
    if len(f1.seam_loops) != len(f2.seam_loops) or len(f1.vertices) != len(f2.vertices):
        return None
    if len(f1.source.edge_ids) != len(f2.source.edge_ids) or len(f1.target.edge_ids) != len(f2.target.edge_ids):
        return None

    sigs1 = {f: _facet_signature(f1, f, g, ws, c1.get(f)) for f, g, ws in f1.facets}
    sigs2 = {f: _facet_signature(f2, f, g, ws, c2.get(f)) for f, g, ws in f2.facets}
    if sorted(sigs1.values(), key=sort_key) != sorted(sigs2.values(), key=sort_key):
        return None

    words1 = {f: ssorted(ws) for f, _, ws in f1.facets}
    words2 = {f: ssorted(ws) for f, _, ws in f2.facets}
    cands = {
        f: tuple(g for g in sigs2 if sigs2[g] == sigs1[f])
        for f in sigs1
    }
    order = sorted(cands, key=lambda f: (len(cands[f]), sort_key(f)))
    budget = [_max_backtrack()]

    arcs1, arcs2 = f1.seam_arc_map(), f2.seam_arc_map()
    loops1, loops2 = set(f1.seam_loops), set(f2.seam_loops)

    def letter_images(letter, state):
        if letter[0] == "e":
            return state["seams"].get(letter[1])
        return state["bedges"].get((letter[1], letter[2]))

    def bind_letter(a, b, state):
        """Attempt to record letter a of f1 -> letter b of f2."""
        if (a[0] == "e") != (b[0] == "e"):
            return False
        if a[0] == "e":
            sa, sb = a[1], b[1]
            if (sa in loops1) != (sb in loops2):
                return False
            cur = state["seams"].get(sa)
            if cur is not None:
                return cur == sb
            if sb in state["seams_used"]:
                return False
            state["seams"][sa] = sb
            state["seams_used"].add(sb)
            state["trail"].append(("seam", sa, sb))
            return True
        if a[1] != b[1]:  # side must match
            return False
        ka, kb = (a[1], a[2]), (b[1], b[2])
        web1 = f1.target if a[1] == "t" else f1.source
        web2 = f2.target if b[1] == "t" else f2.source
        if (a[2] in web1.loops) != (b[2] in web2.loops):
            return False
        cur = state["bedges"].get(ka)
        if cur is not None:
            return cur == kb
        if fix_boundary and ka != kb:
            return False
        if kb in state["bedges_used"]:
            return False
        state["bedges"][ka] = kb
        state["bedges_used"].add(kb)
        state["trail"].append(("bedge", ka, kb))
        return True

    def undo_to(state, mark):
        while len(state["trail"]) > mark:
            kind, a, b = state["trail"].pop()
            if kind == "seam":
                del state["seams"][a]
                state["seams_used"].discard(b)
            else:
                del state["bedges"][a]
                state["bedges_used"].discard(b)

    def match_words(ws1, ws2, state):
        """Bijection between the word lists with letter binding; generator
        of successes (state mutated; caller undoes via trail marks)."""
        if not ws1:
            yield True
            return
        w = ws1[0]
        rest = ws1[1:]
        for j, w2 in enumerate(ws2):
            if _word_shape(f1, w) != _word_shape(f2, w2):
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise _IsoBudget()
            mark = len(state["trail"])
            if w[0] == "loop":
                if bind_letter(w[1], w2[1], state):
                    yield from match_words(rest, ws2[:j] + ws2[j + 1 :], state)
                undo_to(state, mark)
                continue
            steps1, steps2 = w[1], w2[1]
            n = len(steps2)
            for rot in range(n):
                ok = True
                mark2 = len(state["trail"])
                for k in range(n):
                    (la, sa) = steps1[k]
                    (lb, sb) = steps2[(rot + k) % n]
                    if sa != sb or not bind_letter(la, lb, state):
                        ok = False
                        break
                if ok:
                    yield from match_words(rest, ws2[:j] + ws2[j + 1 :], state)
                undo_to(state, mark2)
            undo_to(state, mark)

    def assign(idx, state):
        if idx == len(order):
            yield dict(state["facets"]), dict(state["seams"]), dict(state["bedges"])
            return
        f = order[idx]
        for g in cands[f]:
            if g in state["facets_used"]:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise _IsoBudget()
            state["facets"][f] = g
            state["facets_used"].add(g)
            mark = len(state["trail"])
            for _ in match_words(words1[f], words2[g], state):
                yield from assign(idx + 1, state)
            undo_to(state, mark)
            del state["facets"][f]
            state["facets_used"].discard(g)

    state = {
        "facets": {},
        "facets_used": set(),
        "seams": {},
        "seams_used": set(),
        "bedges": {},
        "bedges_used": set(),
        "trail": [],
    }
    if fix_boundary:
        for e in f1.target.edge_ids:
            state["bedges"][("t", e)] = ("t", e)
            state["bedges_used"].add(("t", e))
        for e in f1.source.edge_ids:
            state["bedges"][("s", e)] = ("s", e)
            state["bedges_used"].add(("s", e))

    try:
        for fmap, smap, bemap in assign(0, state):
            full = _complete_iso(f1, f2, fmap, smap, bemap, fix_boundary)
            if full is not None:
                return full
    except _IsoBudget:
        raise FoamError("iso_check exceeded FOAMCAT_MAX_BACKTRACK")
    return None


def _complete_iso(f1, f2, fmap, smap, bemap, fix_boundary):
    """Check global conditions and derive the vertex maps."""
    if len(smap) != len(f1.seam_ids) or len(fmap) != len(f1.facets):
        return None
    if len(bemap) != len(f1.source.edge_ids) + len(f1.target.edge_ids):
        return None

    arcs1, arcs2 = f1.seam_arc_map(), f2.seam_arc_map()
    vmap = {}
    bvmap = {}

    def bind_ref(a, b):
        if a[0] != b[0]:
            return False
        if a[0] == "v":
            if vmap.get(a[1], b[1]) != b[1]:
                return False
            vmap[a[1]] = b[1]
            return True
        if a[1] != b[1]:
            return False
        key = (a[1], a[2])
        val = (b[1], b[2])
        if bvmap.get(key, val) != val:
            return False
        if fix_boundary and key != val:
            return False
        bvmap[key] = val
        return True

    for s, a, b in f1.seam_arcs:
        s2 = smap.get(s)
        if s2 is None or s2 not in arcs2:
            return None
        a2, b2 = arcs2[s2]
        if not bind_ref(a, a2) or not bind_ref(b, b2):
            return None
    if len(set(vmap.values())) != len(vmap) or len(set(bvmap.values())) != len(bvmap):
        return None
    if len(vmap) != len(f1.vertices):
        # vertices not touched by any seam cannot exist in valid foams
        if f1.vertices or f2.vertices:
            return None

    # seam cyclic orders
    o2 = f2.seam_order_map()
    for s, triple in f1.seam_orders:
        mapped = tuple(fmap[f] for f in triple)
        if not _is_rotation(mapped, o2[smap[s]]):
            return None

    # web structure: edges, orientations, vertex orders
    for (side, webs) in (("t", (f1.target, f2.target)), ("s", (f1.source, f2.source))):
        w1, w2 = webs
        am1, am2 = w1.arc_map(), w2.arc_map()
        for e in w1.arc_ids:
            img = bemap.get((side, e))
            if img is None or img[0] != side or img[1] not in am2:
                return None
            s1v, t1v = am1[e]
            s2v, t2v = am2[img[1]]
            if bvmap.get((side, s1v)) != (side, s2v) or bvmap.get((side, t1v)) != (side, t2v):
                return None
        for e in w1.loops:
            img = bemap.get((side, e))
            if img is None or img[0] != side or img[1] not in set(w2.loops):
                return None
        om2 = w2.order_map()
        for v, order in w1.orders:
            img = bvmap.get((side, v))
            if img is None:
                return None
            mapped = tuple(bemap[(side, e)][1] for e in order)
            if not _is_rotation(mapped, om2[img[1]]):
                return None

    return {
        "facets": fmap,
        "seams": smap,
        "vertices": vmap,
        "boundary_edges": bemap,
        "boundary_vertices": bvmap,
    }

# ---------------------------------------------------------------------------
# boundary repartition (bends)


def _dju_taggers(w1, w2):
    """How disjoint_union_web labels cells: no tags when a side is empty."""
    if w1.is_empty():
        return (lambda x: x, lambda x: x) if w2.is_empty() else (lambda x: x, lambda x: x)
    if w2.is_empty():
        return (lambda x: x, lambda x: x)
    return (lambda x: (0, x), lambda x: (1, x))


def bend_to_target(foam):
    """Reinterpret f: W1 -> W2 as a foam empty -> W2 + reverse(W1)."""
    new_target = disjoint_union_web(foam.target, reverse_web(foam.source))
    tag_t, tag_s = _dju_taggers(foam.target, reverse_web(foam.source))

    def ref(r):
        if r[0] != "b":
            return r
        _, side, x = r
        return ("b", "t", tag_t(x) if side == "t" else tag_s(x))

    def letter(l):
        return ref(l) if l[0] == "b" else l

    def word(w):
        if w[0] == "loop":
            return make_loop_word(letter(w[1]))
        return make_cyc_word([(letter(l), sign) for l, sign in w[1]])

    return make_foam(
        EMPTY_WEB,
        new_target,
        vertices=foam.vertices,
        seam_loops=foam.seam_loops,
        seam_arcs=[(s, ref(a), ref(b)) for s, a, b in foam.seam_arcs],
        seam_orders=foam.seam_orders,
        facets=[(f, g, [word(w) for w in ws]) for f, g, ws in foam.facets],
    )


def bend_to_source(foam):
    """Reinterpret f: W1 -> W2 as a foam W1 + reverse(W2) -> empty."""
    new_source = disjoint_union_web(foam.source, reverse_web(foam.target))
    tag_s, tag_t = _dju_taggers(foam.source, reverse_web(foam.target))

    def ref(r):
        if r[0] != "b":
            return r
        _, side, x = r
        return ("b", "s", tag_s(x) if side == "s" else tag_t(x))

    def letter(l):
        return ref(l) if l[0] == "b" else l

    def word(w):
        if w[0] == "loop":
            return make_loop_word(letter(w[1]))
        return make_cyc_word([(letter(l), sign) for l, sign in w[1]])

    return make_foam(
        new_source,
        EMPTY_WEB,
        vertices=foam.vertices,
        seam_loops=foam.seam_loops,
        seam_arcs=[(s, ref(a), ref(b)) for s, a, b in foam.seam_arcs],
        seam_orders=foam.seam_orders,
        facets=[(f, g, [word(w) for w in ws]) for f, g, ws in foam.facets],
    )
