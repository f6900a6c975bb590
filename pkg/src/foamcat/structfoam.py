"""Structural foams between internal-hom webs.

The closed web carrying 2-morphisms from S to T is obtained by gluing a
reversed copy of S to T along their shared boundary positions. All the
structural foams (identity cups, vertical and horizontal composition,
tensoring connectors) follow one pattern: sheets of facets parametrized
by the edges of the participating 1-morphisms, with seams joining the
paired split/merge vertex copies. This module builds those webs with an
atlas of their constituent atoms, the foams themselves, and the canonical
identifications between differently-presented hom webs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import foamcore as fc
from . import labeled as lb
from . import onemorph as om
from .util import UnionFind, sort_key, ssorted


class StructError(ValueError):
    pass


# ---------------------------------------------------------------------------
# hom webs with atlases


@dataclass(frozen=True)
class HomWeb:
    dmor: om.OneMorphism  # the reversed side
    cmor: om.OneMorphism
    lweb: lb.LabeledWeb
    atom_edge: tuple  # ((('d'|'c', class_rep), edge_id), ...)
    vertex_id: tuple  # ((('d'|'c', height), vertex_id), ...)

    def atom_map(self):
        return dict(self.atom_edge)

    def vertex_map(self):
        return dict(self.vertex_id)


_HOM_CACHE = {}


def hom_web(dmor, cmor):
    """The closed labeled web |Hom(dmor, cmor)| for parallel 1-morphisms,
    glued canonically from the reversed d-side and the c-side."""
    key = (dmor, cmor)
    if key in _HOM_CACHE:
        return _HOM_CACHE[key]
    if dmor.source != cmor.source or dmor.target != cmor.target:
        raise StructError("hom web needs parallel 1-morphisms")
    esd, esc = om.edge_structure(dmor), om.edge_structure(cmor)

    uf = UnionFind()
    slot_owner = {}
    for role, es in (("d", esd), ("c", esc)):
        for c in es.classes:
            atom = (role, c.rep)
            uf.find(atom)
            for slot in c.slots:
                if slot in slot_owner.get(role, {}):
                    raise StructError("duplicate slot")
                slot_owner.setdefault(role, {})[slot] = atom
    for slot, atom in slot_owner.get("d", {}).items():
        other = slot_owner.get("c", {}).get(slot)
        if other is None:
            raise StructError(f"slot {slot!r} unmatched between the two sides")
        uf.union(atom, other)

    classes = {}
    for role, es in (("d", esd), ("c", esc)):
        for c in es.classes:
            classes.setdefault(uf.find((role, c.rep)), []).append((role, c))

    def vert(role, height):
        return (role, height)

    loops, arcs, labels, atom_edge = [], [], {}, {}
    for rep in ssorted(classes):
        members = classes[rep]
        eid = tuple(sorted(((role, c.rep) for role, c in members), key=sort_key))
        label_set = {c.label for _, c in members}
        if len(label_set) != 1:
            raise StructError(f"glued edge {eid!r} has mixed labels")
        labels[eid] = label_set.pop()
        attach = []
        for role, c in members:
            for height, d in c.attach:
                if role == "d":
                    d = "out" if d == "in" else "in"
                attach.append((vert(role, height), d))
        for role, c in members:
            atom_edge[(role, c.rep)] = eid
        if not attach:
            loops.append(eid)
            continue
        tails = [v for v, d in attach if d == "out"]
        heads = [v for v, d in attach if d == "in"]
        if len(tails) != 1 or len(heads) != 1:
            raise StructError(f"glued arc {eid!r} lacks a single tail and head")
        arcs.append((eid, tails[0], heads[0]))

    orders = []
    vertex_id = []
    for role, mor, es in (("d", dmor, esd), ("c", cmor, esc)):
        pos_map = es.position_map()
        for height, gen in es.vertices:
            triple = tuple(atom_edge[(role, pos_map[p])] for p in om.vertex_positions(mor, height))
            orders.append((vert(role, height), triple))
            vertex_id.append(((role, height), vert(role, height)))

    web = fc.make_web(loops=loops, arcs=arcs, orders=orders)
    lweb = lb.make_labeled_web(web, labels)
    out = HomWeb(
        dmor,
        cmor,
        lweb,
        tuple(sorted(atom_edge.items(), key=lambda x: sort_key(x[0]))),
        tuple(sorted(vertex_id, key=lambda x: sort_key(x[0]))),
    )
    _HOM_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# class embeddings between edge structures


def class_embedding(es_from, es_to, posfun):
    """Map edge classes along a position transformation, asserting each
    class lands inside a single target class."""
    to_pos = es_to.position_map()
    from_members = {}
    for pos, rep in es_from.pos2class:
        from_members.setdefault(rep, []).append(pos)
    out = {}
    for rep, members in from_members.items():
        images = set()
        for pos in members:
            q = posfun(pos)
            if q is not None:
                images.add(to_pos[q])
        if len(images) != 1:
            raise StructError(f"class {rep!r} does not embed cleanly: {images!r}")
        out[rep] = images.pop()
    return out


def embed_bottom(es_x, es_comp, top_len):
    """X as the lower factor of a composite (heights unchanged)."""

    def posfun(pos):
        if pos[0] == "src":
            return pos
        if pos[0] == "tgt":
            if top_len == 0:
                return pos
            return ("p", len(es_x.morphism.basics), "S", pos[1])
        return pos

    return class_embedding(es_x, es_comp, posfun)


def embed_top(es_x, es_comp, bottom_len):
    """X as the upper factor of a composite (heights shifted up)."""

    def posfun(pos):
        if pos[0] == "tgt":
            return pos
        if pos[0] == "src":
            if bottom_len == 0:
                return pos
            return ("p", bottom_len - 1, "T", pos[1])
        _, i, side, p = pos
        return ("p", i + bottom_len, side, p)

    return class_embedding(es_x, es_comp, posfun)


def embed_padded(es_x, es_padded, left, height_shift=0, src_left=None, tgt_left=None):
    """X inside a word padded on the left by `left` strands at every
    height (and possibly composed above/below identity-like factors)."""
    src_left = left if src_left is None else src_left
    tgt_left = left if tgt_left is None else tgt_left

    def posfun(pos):
        if pos[0] == "src":
            return ("src", pos[1] + src_left)
        if pos[0] == "tgt":
            return ("tgt", pos[1] + tgt_left)
        _, i, side, p = pos
        return ("p", i + height_shift, side, p + left)

    return class_embedding(es_x, es_padded, posfun)


# ---------------------------------------------------------------------------
# the generic structural foam


@dataclass
class Placement:
    wkey: tuple  # ('s', i) or ('t',)
    role: str  # 'd' or 'c'
    edge_embed: dict = None  # class rep of the sheet -> class rep of the constituent
    vertex_embed: dict = None  # height -> height


@dataclass
class SheetSpec:
    morphism: om.OneMorphism
    slot_src: object
    slot_tgt: object
    placements: tuple  # two Placements


def structural_foam(webs, sheets, datum, name="structural"):
    """Build the foam whose facets are parametrized by the sheets' edges.

    webs maps placement keys to HomWeb objects; each sheet appears in
    exactly two of them (as the reversed 'd' copy or the plain 'c' copy)
    and contributes one facet per edge, one seam per vertex."""
    src_keys = ssorted(k for k in webs if k[0] == "s")
    tgt = webs[("t",)]

    nonempty_src = [k for k in src_keys if not webs[k].lweb.is_empty()]
    if len(src_keys) <= 1 or len(nonempty_src) <= 1:
        def src_tag(k, x):
            return x
    else:
        def src_tag(k, x):
            return (src_keys.index(k), x)

    def edge_ref(wkey, e):
        if wkey == ("t",):
            return ("b", "t", e)
        return ("b", "s", src_tag(wkey, e))

    def vert_ref(wkey, v):
        if wkey == ("t",):
            return ("b", "t", v)
        return ("b", "s", src_tag(wkey, v))

    source_lweb = lb.EMPTY_LWEB
    for k in src_keys:
        source_lweb = lb.disjoint_union_labeled_web(source_lweb, webs[k].lweb)
    target_lweb = tgt.lweb

    # per-(wkey) web data
    def web_of(wkey):
        return webs[wkey].lweb.web

    def arc_endpoints(wkey, e):
        s, t = web_of(wkey).arc_map()[e]
        if wkey != ("t",):
            s, t = t, s  # source-side copies are reversed in the boundary
        return (vert_ref(wkey, s), vert_ref(wkey, t))

    es_cache = {}

    def es_of(mor):
        if mor not in es_cache:
            es_cache[mor] = om.edge_structure(mor)
        return es_cache[mor]

    # seams
    seam_arcs = []
    seam_of_bvref = {}
    for sheet_idx, sheet in enumerate(sheets):
        es = es_of(sheet.morphism)
        for height, gen in es.vertices:
            sid = ("sv", sheet_idx, height)
            ends = []
            for pl in sheet.placements:
                h = pl.vertex_embed[height] if pl.vertex_embed else height
                wv = webs[pl.wkey].vertex_map()[(pl.role, h)]
                kind = fc.vertex_kind(web_of(pl.wkey), wv)
                if pl.wkey != ("t",):
                    kind = "merge" if kind == "split" else "split"
                ends.append((vert_ref(pl.wkey, wv), kind))
            kinds = sorted(k for _, k in ends)
            if kinds != ["merge", "split"]:
                raise StructError(f"seam {sid!r} does not join a merge to a split")
            merge_ref = next(r for r, k in ends if k == "merge")
            split_ref = next(r for r, k in ends if k == "split")
            seam_arcs.append((sid, merge_ref, split_ref))
            for r, _ in ends:
                if r in seam_of_bvref:
                    raise StructError(f"two seams at boundary vertex {r!r}")
                seam_of_bvref[r] = sid
    seam_ends = {sid: (a, b) for sid, a, b in seam_arcs}

    def glued(pl, rep):
        r = pl.edge_embed[rep] if pl.edge_embed else rep
        return webs[pl.wkey].atom_map()[(pl.role, r)]

    def bletter(wkey, e):
        if wkey == ("t",):
            return ("b", "t", e)
        return ("b", "s", src_tag(wkey, e))

    def cycle_word(arc_items):
        """Close boundary arcs into a single cyclic word through seams."""
        refs = {}
        for wkey, e in arc_items:
            refs[(wkey, e)] = arc_endpoints(wkey, e)
        start = min(refs, key=sort_key)
        steps = [(bletter(*start), 1)]
        used = {start}
        cur = refs[start][1]
        first_tail = refs[start][0]
        while True:
            sid = seam_of_bvref.get(cur)
            if sid is None:
                raise StructError(f"no seam at boundary vertex {cur!r}")
            a, b = seam_ends[sid]
            sign = 1 if cur == a else -1
            steps.append((("e", sid), sign))
            cur = b if cur == a else a
            if cur == first_tail and len(used) == len(arc_items):
                break
            nxt = [k for k, (ta, he) in refs.items() if ta == cur and k not in used]
            if len(nxt) != 1:
                raise StructError(f"cycle walk stuck at {cur!r}")
            k = nxt[0]
            used.add(k)
            steps.append((bletter(*k), 1))
            cur = refs[k][1]
        return fc.make_cyc_word(steps)

    facets = []
    labels = {}
    # sheet-internal facets
    for sheet_idx, sheet in enumerate(sheets):
        es = es_of(sheet.morphism)
        for c in es.classes:
            fid = None
            if c.kind == "iloop":
                fid = ("fl", sheet_idx, c.rep)
                words = [fc.make_loop_word(bletter(pl.wkey, glued(pl, c.rep))) for pl in sheet.placements]
                facets.append((fid, 0, words))
            elif c.kind == "iarc":
                fid = ("fa", sheet_idx, c.rep)
                items = []
                for pl in sheet.placements:
                    e = glued(pl, c.rep)
                    items.append((pl.wkey, e))
                facets.append((fid, 0, [cycle_word(items)]))
            if fid is not None:
                labels[fid] = c.label

    # boundary classes across sheets
    uf = UnionFind()
    slot_info = {}
    for sheet_idx, sheet in enumerate(sheets):
        es = es_of(sheet.morphism)
        for c in es.classes:
            if c.kind in ("iloop", "iarc"):
                continue
            node = (sheet_idx, c.rep)
            uf.find(node)
            for slot in c.slots:
                key = (sheet.slot_src if slot[0] == "src" else sheet.slot_tgt, slot[1])
                if key in slot_info:
                    uf.union(node, slot_info[key])
                else:
                    slot_info[key] = node
    pclasses = {}
    for sheet_idx, sheet in enumerate(sheets):
        es = es_of(sheet.morphism)
        for c in es.classes:
            if c.kind in ("iloop", "iarc"):
                continue
            pclasses.setdefault(uf.find((sheet_idx, c.rep)), []).append((sheet_idx, c))
    for rep in ssorted(pclasses):
        members = pclasses[rep]
        label_set = {c.label for _, c in members}
        if len(label_set) != 1:
            raise StructError("mixed labels in a glued boundary class")
        copies = set()
        for sheet_idx, c in members:
            for pl in sheets[sheet_idx].placements:
                copies.add((pl.wkey, glued(pl, c.rep)))
        loop_items = ssorted(k for k in copies if k[1] in set(web_of(k[0]).loops))
        arc_items = ssorted(k for k in copies if k[1] not in set(web_of(k[0]).loops))
        words = [fc.make_loop_word(bletter(wkey, e)) for wkey, e in loop_items]
        if arc_items:
            words.append(cycle_word(arc_items))
        fid = ("fp", rep)
        facets.append((fid, 0, words))
        labels[fid] = label_set.pop()

    # seam cyclic orders from the web order at either endpoint vertex
    facet_of_letter = {}
    for fid, _, words in facets:
        for w in words:
            for letter in fc.word_letters(w):
                if letter[0] == "b":
                    facet_of_letter[letter] = fid
    seam_orders = []
    for sid, a, b in seam_arcs:
        ref = a
        _, side, tagged = ref
        if side == "t":
            wkey, wv = ("t",), tagged
        else:
            if len(src_keys) <= 1 or len(nonempty_src) <= 1:
                wkey, wv = nonempty_src[0], tagged
            else:
                wkey, wv = src_keys[tagged[0]], tagged[1]
        order = web_of(wkey).order_map()[wv]
        triple = tuple(facet_of_letter[bletter(wkey, e)] for e in order)
        seam_orders.append((sid, triple))

    skel = fc.make_foam(
        source_lweb.web,
        target_lweb.web,
        seam_arcs=seam_arcs,
        seam_orders=seam_orders,
        facets=facets,
    )
    dec = lb.unit_decoration(datum, labels, labels.keys())
    lfoam = lb.make_labeled_foam(skel, labels, dec)
    report = lb.validate_labeled_foam(lfoam, datum)
    if report:
        raise StructError(f"{name} foam failed validation: {report[:3]}")
    return lb.foam_vector(source_lweb, target_lweb, [(1, lfoam)])

# ---------------------------------------------------------------------------
# the named structural foams


def cup_foam(S, datum):
    """The identity sheet: empty -> |Hom(S, S)|."""
    H = hom_web(S, S)
    sheet = SheetSpec(S, "lo", "hi", (Placement(("t",), "d"), Placement(("t",), "c")))
    return structural_foam({("t",): H}, [sheet], datum, name="cup")


def vert_foam(U, T, S, datum):
    """|Hom(T, U)| + |Hom(S, T)| -> |Hom(S, U)|."""
    webs = {("s", 0): hom_web(T, U), ("s", 1): hom_web(S, T), ("t",): hom_web(S, U)}
    sheets = [
        SheetSpec(U, "lo", "hi", (Placement(("s", 0), "c"), Placement(("t",), "c"))),
        SheetSpec(T, "lo", "hi", (Placement(("s", 0), "d"), Placement(("s", 1), "c"))),
        SheetSpec(S, "lo", "hi", (Placement(("s", 1), "d"), Placement(("t",), "d"))),
    ]
    return structural_foam(webs, sheets, datum, name="vert")


def hor_foam(Tp, Sp, T, S, datum):
    """|Hom(S', T')| + |Hom(S, T)| -> |Hom(S'S, T'T)|."""
    TT = om.compose_1mor(Tp, T)
    SS = om.compose_1mor(Sp, S)
    webs = {("s", 0): hom_web(Sp, Tp), ("s", 1): hom_web(S, T), ("t",): hom_web(SS, TT)}
    es = {m: om.edge_structure(m) for m in (Tp, Sp, T, S, TT, SS)}

    def bottom(x, comp):
        emb = embed_bottom(es[x], es[comp], len(comp.basics) - len(x.basics))
        vmap = {h: h for h, _ in es[x].vertices}
        return emb, vmap

    def top(x, comp):
        off = len(comp.basics) - len(x.basics)
        emb = embed_top(es[x], es[comp], off)
        vmap = {h: h + off for h, _ in es[x].vertices}
        return emb, vmap

    eT, vT = bottom(T, TT)
    eTp, vTp = top(Tp, TT)
    eS, vS = bottom(S, SS)
    eSp, vSp = top(Sp, SS)
    sheets = [
        SheetSpec(Tp, "mid", "hi", (Placement(("s", 0), "c"), Placement(("t",), "c", eTp, vTp))),
        SheetSpec(T, "lo", "mid", (Placement(("s", 1), "c"), Placement(("t",), "c", eT, vT))),
        SheetSpec(Sp, "mid", "hi", (Placement(("s", 0), "d"), Placement(("t",), "d", eSp, vSp))),
        SheetSpec(S, "lo", "mid", (Placement(("s", 1), "d"), Placement(("t",), "d", eS, vS))),
    ]
    return structural_foam(webs, sheets, datum, name="hor")


# ---------------------------------------------------------------------------
# canonical identifications between hom webs


def web_iso_from_maps(lwebA, lwebB, edge_map, vertex_map):
    """Validate that the given cell maps form an isomorphism of labeled
    webs (labels, kinds, orientations, cyclic orders)."""
    wA, wB = lwebA.web, lwebB.web
    la, lc = lwebA.label_map(), lwebB.label_map()
    if sorted(edge_map, key=sort_key) != ssorted(wA.edge_ids):
        raise StructError("edge map does not cover the web")
    if sorted(set(edge_map.values()), key=sort_key) != ssorted(wB.edge_ids):
        raise StructError("edge map is not onto the target web")
    loopsB = set(wB.loops)
    for e in wA.loops:
        if edge_map[e] not in loopsB:
            raise StructError(f"loop {e!r} maps to an arc")
    amA, amB = wA.arc_map(), wB.arc_map()
    for e, (s, t) in amA.items():
        s2, t2 = amB[edge_map[e]]
        if vertex_map[s] != s2 or vertex_map[t] != t2:
            raise StructError(f"arc {e!r} endpoints do not correspond")
    for e in wA.edge_ids:
        if la[e] != lc[edge_map[e]]:
            raise StructError(f"labels differ along {e!r}")
    omB = wB.order_map()
    for v, order in wA.orders:
        mapped = tuple(edge_map[e] for e in order)
        if not fc._is_rotation(mapped, omB[vertex_map[v]]):
            raise StructError(f"cyclic order at {v!r} not preserved")
    return {"edges": dict(edge_map), "vertices": dict(vertex_map)}


def iso_from_atom_map(homA, homB, atom_map, vertex_map):
    """The web isomorphism induced by a (partial) map of atoms: every
    edge of A must contain at least one mapped atom, and all its mapped
    atoms must land in one edge of B."""
    amA, amB = homA.atom_map(), homB.atom_map()
    edge_atoms = {}
    for atom, e in amA.items():
        edge_atoms.setdefault(e, []).append(atom)
    edge_map = {}
    for e, atoms in edge_atoms.items():
        images = {amB[atom_map[a]] for a in atoms if a in atom_map}
        if len(images) != 1:
            raise StructError(f"edge {e!r} has no unique image: {images!r}")
        edge_map[e] = images.pop()
    return web_iso_from_maps(homA.lweb, homB.lweb, edge_map, vertex_map)


def retarget_vector(vec, new_target, iso):
    """Rewrite target-boundary references of a foam vector along a web
    isomorphism onto the stated new target web."""
    emap, vmap = iso["edges"], iso["vertices"]
    terms = []
    for c, lf in vec.terms:
        skel = lf.skeleton

        def ref(r):
            if r[0] == "b" and r[1] == "t":
                return ("b", "t", vmap[r[2]])
            return r

        def letter(l):
            if l[0] == "b" and l[1] == "t":
                return ("b", "t", emap[l[2]])
            return l

        def word(w):
            if w[0] == "loop":
                return fc.make_loop_word(letter(w[1]))
            return fc.make_cyc_word([(letter(x), sg) for x, sg in w[1]])

        new_skel = fc.make_foam(
            skel.source,
            new_target.web,
            vertices=skel.vertices,
            seam_loops=skel.seam_loops,
            seam_arcs=[(s, ref(a), ref(b)) for s, a, b in skel.seam_arcs],
            seam_orders=skel.seam_orders,
            facets=[(f, g, [word(w) for w in ws]) for f, g, ws in skel.facets],
        )
        terms.append((c, lb.LabeledFoam(new_skel, lf.labels, lf.decoration, lf.loop_orders)))
    return lb.foam_vector(vec.source, new_target, terms)


def epsilon_view(S):
    """The identification |Hom(S,S)| = |Hom(id_t, S S*)|."""
    t = S.target
    idt = om.identity_1mor(t)
    Sstar = om.star_1mor(S)
    comp = om.compose_1mor(S, Sstar)
    A = hom_web(S, S)
    B = hom_web(idt, comp)
    esS = om.edge_structure(S)
    esStar = om.edge_structure(Sstar)
    esComp = om.edge_structure(comp)
    k = len(S.basics)
    starmap = om.star_class_map(S)
    up = embed_top(esS, esComp, k)
    down = embed_bottom(esStar, esComp, k)
    atom_map = {}
    for c in esS.classes:
        atom_map[("c", c.rep)] = ("c", up[c.rep])
        atom_map[("d", c.rep)] = ("c", down[starmap[c.rep]])
    vertex_map = {}
    for h, _ in esS.vertices:
        vertex_map[("c", h)] = ("c", h + k)
        vertex_map[("d", h)] = ("c", k - 1 - h)
    return B, iso_from_atom_map(A, B, atom_map, vertex_map)


def star_view(S, T):
    """The identification |Hom(S,T)| = |Hom(T*,S*)|."""
    A = hom_web(S, T)
    B = hom_web(om.star_1mor(T), om.star_1mor(S))
    smapS = om.star_class_map(S)
    smapT = om.star_class_map(T)
    atom_map = {}
    for c in om.edge_structure(S).classes:
        atom_map[("d", c.rep)] = ("c", smapS[c.rep])
    for c in om.edge_structure(T).classes:
        atom_map[("c", c.rep)] = ("d", smapT[c.rep])
    vertex_map = {}
    for h, _ in om.edge_structure(S).vertices:
        vertex_map[("d", h)] = ("c", len(S.basics) - 1 - h)
    for h, _ in om.edge_structure(T).vertices:
        vertex_map[("c", h)] = ("d", len(T.basics) - 1 - h)
    return B, iso_from_atom_map(A, B, atom_map, vertex_map)


def tensorator_views(S, T):
    """A = (t x T)(S x s') and B = (S x t')(s x T) decompose into the same
    S- and T-pieces; returns (A, B, iso |Hom(A,A)| -> |Hom(B,A)|)."""
    s, t = S.source, S.target
    sp, tp = T.source, T.target
    A = om.compose_1mor(om.boxtimes_left(t, T), om.boxtimes_right(S, sp))
    B = om.compose_1mor(om.boxtimes_right(S, tp), om.boxtimes_left(s, T))
    esA, esB = om.edge_structure(A), om.edge_structure(B)
    esS, esT = om.edge_structure(S), om.edge_structure(T)
    kS, kT = len(S.basics), len(T.basics)

    embA_S = embed_padded(esS, esA, 0, height_shift=0)
    embA_T = embed_padded(esT, esA, len(t), height_shift=kS, src_left=len(s), tgt_left=len(t))
    embB_T = embed_padded(esT, esB, len(s), height_shift=0, src_left=len(s), tgt_left=len(t))
    embB_S = embed_padded(esS, esB, 0, height_shift=kT)

    a_to_b = {}
    for rep, img in embA_S.items():
        a_to_b[img] = embB_S[rep]
    for rep, img in embA_T.items():
        a_to_b[img] = embB_T[rep]
    vmap_a_to_b = {}
    for h, _ in esS.vertices:
        vmap_a_to_b[h] = h + kT
    for h, _ in esT.vertices:
        vmap_a_to_b[h + kS] = h

    HA = hom_web(A, A)
    HB = hom_web(B, A)
    atom_map = {}
    for atom, _ in HA.atom_edge:
        role, rep = atom
        if role == "c":
            atom_map[atom] = ("c", rep)
        else:
            if rep not in a_to_b:
                raise StructError("edge of the interleaved word missed by the decomposition")
            atom_map[atom] = ("d", a_to_b[rep])
    vertex_map = {}
    for (role, h), _ in HA.vertex_id:
        vertex_map[(role, h)] = (role, h) if role == "c" else ("d", vmap_a_to_b[h])
    return A, B, iso_from_atom_map(HA, HB, atom_map, vertex_map)


def triangulator_views(s):
    """Z = (eta* x s)(s x eta') is canonically identified with id_s inside
    hom webs; returns (Z, iso_to_hom(Z,id), iso_to_hom(id,Z))."""
    ids = om.identity_1mor(s)
    eta_star = om.star_1mor(om.fold_cup_left(s))
    etap = om.fold_cup_right(s)
    Z = om.compose_1mor(om.boxtimes_right(eta_star, s), om.boxtimes_left(s, etap))
    if Z.source != tuple(s) or Z.target != tuple(s):
        raise StructError("zigzag word is not an endomorphism of s")
    esZ, esI = om.edge_structure(Z), om.edge_structure(ids)
    slot_to_class = {}
    for c in esZ.classes:
        for slot in c.slots:
            slot_to_class[slot] = c.rep
    id_to_z = {}
    for c in esI.classes:
        id_to_z[c.rep] = slot_to_class[c.slots[0]]

    A = hom_web(ids, ids)
    B1 = hom_web(Z, ids)
    atom_map = {}
    for c in esI.classes:
        atom_map[("c", c.rep)] = ("c", c.rep)
        atom_map[("d", c.rep)] = ("d", id_to_z[c.rep])
    iso1 = iso_from_atom_map(A, B1, atom_map, {})
    B2 = hom_web(ids, Z)
    atom_map2 = {}
    for c in esI.classes:
        atom_map2[("d", c.rep)] = ("d", c.rep)
        atom_map2[("c", c.rep)] = ("c", id_to_z[c.rep])
    iso2 = iso_from_atom_map(A, B2, atom_map2, {})
    return Z, (B1, iso1), (B2, iso2)


def boxtimes_views(x, S, T, side):
    """dju(|Hom(S,T)|, |Hom(id_x,id_x)|) = |Hom(xS, xT)| (or the right-
    handed version); returns (xS, xT, hom, edge/vertex maps from the
    disjoint union)."""
    idx = om.identity_1mor(x)
    if side == "left":
        XS, XT = om.boxtimes_left(x, S), om.boxtimes_left(x, T)
    else:
        XS, XT = om.boxtimes_right(S, x), om.boxtimes_right(T, x)
    H_ST = hom_web(S, T)
    H_xx = hom_web(idx, idx)
    H_big = hom_web(XS, XT)
    esS, esT = om.edge_structure(S), om.edge_structure(T)
    esXS, esXT = om.edge_structure(XS), om.edge_structure(XT)
    esI = om.edge_structure(idx)
    if side == "left":
        pad = len(x)
        embS = embed_padded(esS, esXS, pad)
        embT = embed_padded(esT, esXT, pad)

        def strand_class(es_big, p):
            return es_big.position_map()[("src", p)]
    else:
        embS = embed_padded(esS, esXS, 0)
        embT = embed_padded(esT, esXT, 0)

        def strand_class(es_big, p):
            return es_big.position_map()[("src", len(S.source) + p)]

    amST, amXX, amBig = H_ST.atom_map(), H_xx.atom_map(), H_big.atom_map()
    tag_st = (lambda e: (0, e)) if not (H_ST.lweb.is_empty() or H_xx.lweb.is_empty()) else (lambda e: e)
    tag_xx = (lambda e: (1, e)) if not (H_ST.lweb.is_empty() or H_xx.lweb.is_empty()) else (lambda e: e)

    edge_map = {}
    for atom, e in H_ST.atom_edge:
        role, rep = atom
        big_atom = (role, (embS if role == "d" else embT)[rep])
        target_edge = amBig[big_atom]
        prev = edge_map.get(tag_st(e))
        if prev is not None and prev != target_edge:
            raise StructError("inconsistent edge images in the tensor view")
        edge_map[tag_st(e)] = target_edge
    for atom, e in H_xx.atom_edge:
        role, rep = atom
        p = next(slot[1] for c in esI.classes if c.rep == rep for slot in c.slots[:1])
        big_cls = strand_class(esXS if role == "d" else esXT, p)
        target_edge = amBig[(role, big_cls)]
        prev = edge_map.get(tag_xx(e))
        if prev is not None and prev != target_edge:
            raise StructError("inconsistent edge images in the tensor view")
        edge_map[tag_xx(e)] = target_edge

    vertex_map = {}
    shift = 0
    for (role, h), v in H_ST.vertex_id:
        vertex_map[tag_st(v)] = H_big.vertex_map()[(role, h)]
    dju = lb.disjoint_union_labeled_web(H_ST.lweb, H_xx.lweb)
    iso = web_iso_from_maps(dju, H_big.lweb, edge_map, vertex_map)
    return XS, XT, H_big, dju, iso

# ---------------------------------------------------------------------------
# reshuffling nested disjoint unions


def resource_vector(vec, new_source, iso):
    """Rewrite source-boundary references along a web isomorphism."""
    emap, vmap = iso["edges"], iso["vertices"]
    terms = []
    for c, lf in vec.terms:
        skel = lf.skeleton

        def ref(r):
            if r[0] == "b" and r[1] == "s":
                return ("b", "s", vmap[r[2]])
            return r

        def letter(l):
            if l[0] == "b" and l[1] == "s":
                return ("b", "s", emap[l[2]])
            return l

        def word(w):
            if w[0] == "loop":
                return fc.make_loop_word(letter(w[1]))
            return fc.make_cyc_word([(letter(x), sg) for x, sg in w[1]])

        new_skel = fc.make_foam(
            new_source.web,
            skel.target,
            vertices=skel.vertices,
            seam_loops=skel.seam_loops,
            seam_arcs=[(s, ref(a), ref(b)) for s, a, b in skel.seam_arcs],
            seam_orders=skel.seam_orders,
            facets=[(f, g, [word(w) for w in ws]) for f, g, ws in skel.facets],
        )
        terms.append((c, lb.LabeledFoam(new_skel, lf.labels, lf.decoration, lf.loop_orders)))
    return lb.foam_vector(new_source, vec.target, terms)


def dju_expr(tree):
    """Evaluate a nested disjoint-union expression of labeled webs.

    tree is a LabeledWeb or a pair (left_tree, right_tree). Returns the
    total web and one id-tagging function per leaf, in left-to-right
    order."""
    if isinstance(tree, lb.LabeledWeb):
        return tree, [lambda x: x]
    left, right = tree
    lw, lfns = dju_expr(left)
    rw, rfns = dju_expr(right)
    total = lb.disjoint_union_labeled_web(lw, rw)
    if lw.is_empty():
        return total, [_compose_tag(lambda x: x, f) for f in lfns] + [_compose_tag(lambda x: x, f) for f in rfns]
    if rw.is_empty():
        return total, lfns + rfns
    return (
        total,
        [_compose_tag(lambda x: (0, x), f) for f in lfns]
        + [_compose_tag(lambda x: (1, x), f) for f in rfns],
    )


def _compose_tag(outer, inner):
    return lambda x: outer(inner(x))


def dju_reshuffle_iso(treeA, treeB, perm=None):
    """The canonical isomorphism between two nested disjoint unions of
    the same leaves; perm[k] names the B-leaf matching A-leaf k."""
    wA, fnsA = dju_expr(treeA)
    wB, fnsB = dju_expr(treeB)
    leavesA = _leaves(treeA)
    leavesB = _leaves(treeB)
    perm = perm or list(range(len(leavesA)))
    edge_map, vertex_map = {}, {}
    for k, leaf in enumerate(leavesA):
        other = leavesB[perm[k]]
        if leaf != other:
            raise StructError("reshuffle leaves do not match")
        for e in leaf.web.edge_ids:
            edge_map[fnsA[k](e)] = fnsB[perm[k]](e)
        for v in leaf.web.vertices:
            vertex_map[fnsA[k](v)] = fnsB[perm[k]](v)
    return wA, wB, web_iso_from_maps(wA, wB, edge_map, vertex_map)


def _leaves(tree):
    if isinstance(tree, lb.LabeledWeb):
        return [tree]
    return _leaves(tree[0]) + _leaves(tree[1])
