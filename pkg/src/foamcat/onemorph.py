"""Objects and 1-morphisms of the monoidal 2-category.

Objects are sequences of oriented labels; 1-morphisms are composable
words of basic webs, each a cap, cup, split or merge padded by objects
on both sides. The edge classification glues strand positions across
heights and drives both the closed-web extraction and the structural
foam constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import labeled as lb
from .util import UnionFind, sort_key, ssorted


class WebWordError(ValueError):
    pass


# ---------------------------------------------------------------------------
# objects

UP, DOWN = "u", "d"

EMPTY_OBJ = ()


def obj(*entries):
    """Build an object sequence from (label, 'u'/'d') pairs."""
    out = []
    for e in entries:
        label, d = e
        if d not in (UP, DOWN):
            raise WebWordError(f"bad orientation {d!r}")
        out.append((label, d))
    return tuple(out)


def hash_object(s):
    """Reverse the sequence and flip every orientation."""
    return tuple((x, UP if d == DOWN else DOWN) for x, d in reversed(s))


def boxtimes_obj(a, b):
    return tuple(a) + tuple(b)


# ---------------------------------------------------------------------------
# generators and basic webs

# generators: ('lcap', x), ('rcap', x), ('lcup', x), ('rcup', x),
#             ('split', x, y, x+y), ('merge', x, y, x+y)


def gen_source(gen):
    kind = gen[0]
    x = gen[1]
    if kind == "lcap":
        return ((x, DOWN), (x, UP))
    if kind == "rcap":
        return ((x, UP), (x, DOWN))
    if kind in ("lcup", "rcup"):
        return ()
    if kind == "split":
        return ((gen[3], UP),)
    if kind == "merge":
        return ((gen[1], UP), (gen[2], UP))
    raise WebWordError(f"unknown generator {gen!r}")


def gen_target(gen):
    kind = gen[0]
    x = gen[1]
    if kind == "lcup":
        return ((x, UP), (x, DOWN))
    if kind == "rcup":
        return ((x, DOWN), (x, UP))
    if kind in ("lcap", "rcap"):
        return ()
    if kind == "split":
        return ((gen[1], UP), (gen[2], UP))
    if kind == "merge":
        return ((gen[3], UP),)
    raise WebWordError(f"unknown generator {gen!r}")


_STAR = {"lcap": "rcup", "rcup": "lcap", "rcap": "lcup", "lcup": "rcap", "split": "merge", "merge": "split"}


def star_gen(gen):
    return (_STAR[gen[0]],) + gen[1:]


def basic_source(basic):
    o_l, gen, o_r = basic
    return boxtimes_obj(boxtimes_obj(o_l, gen_source(gen)), o_r)


def basic_target(basic):
    o_l, gen, o_r = basic
    return boxtimes_obj(boxtimes_obj(o_l, gen_target(gen)), o_r)


@dataclass(frozen=True)
class OneMorphism:
    source: tuple
    target: tuple
    basics: tuple  # ((o_l, gen, o_r), ...) from bottom to top

    def __len__(self):
        return len(self.basics)


def identity_1mor(s):
    return OneMorphism(tuple(s), tuple(s), ())


def make_1mor(basics, source=None):
    basics = tuple((tuple(o_l), tuple(gen), tuple(o_r)) for o_l, gen, o_r in basics)
    if not basics:
        if source is None:
            raise WebWordError("empty words need an explicit boundary object")
        return identity_1mor(source)
    src = basic_source(basics[0])
    cur = basic_target(basics[0])
    for b in basics[1:]:
        if basic_source(b) != cur:
            raise WebWordError("basic webs are not composable")
        cur = basic_target(b)
    if source is not None and tuple(source) != src:
        raise WebWordError("stated source does not match the word")
    return OneMorphism(src, cur, basics)


def compose_1mor(w2, w1):
    """w2 after w1 (concatenation of words)."""
    if w1.target != w2.source:
        raise WebWordError("1-morphisms are not composable")
    if not w1.basics:
        return w2
    if not w2.basics:
        return w1
    return OneMorphism(w1.source, w2.target, w1.basics + w2.basics)


def boxtimes_left(x, w):
    """The object x tensored on the left of a 1-morphism."""
    x = tuple(x)
    basics = tuple((boxtimes_obj(x, o_l), gen, o_r) for o_l, gen, o_r in w.basics)
    return OneMorphism(boxtimes_obj(x, w.source), boxtimes_obj(x, w.target), basics)


def boxtimes_right(w, x):
    x = tuple(x)
    basics = tuple((o_l, gen, boxtimes_obj(o_r, x)) for o_l, gen, o_r in w.basics)
    return OneMorphism(boxtimes_obj(w.source, x), boxtimes_obj(w.target, x), basics)


def star_1mor(w):
    """Reflection: star each generator, reverse the word order."""
    basics = tuple((o_l, star_gen(gen), o_r) for o_l, gen, o_r in reversed(w.basics))
    return OneMorphism(w.target, w.source, basics)


def generator_1mor(gen, o_l=(), o_r=()):
    return make_1mor([(o_l, gen, o_r)])


# ---------------------------------------------------------------------------
# folds and mates


def fold_cup_left(s):
    """lcup over an object: empty -> s + s#, built by induction."""
    s = tuple(s)
    if not s:
        return identity_1mor(EMPTY_OBJ)
    if len(s) == 1:
        (x, d) = s[0]
        gen = ("lcup", x) if d == UP else ("rcup", x)
        return generator_1mor(gen)
    head, rest = s[:1], s[1:]
    inner = fold_cup_left(rest)
    wrapped = boxtimes_right(boxtimes_left(head, inner), hash_object(head))
    return compose_1mor(wrapped, fold_cup_left(head))


def fold_cup_right(s):
    """rcup over an object: empty -> s# + s."""
    return fold_cup_left(hash_object(s))


def fold_cap_left(s):
    """lcap over an object: s# + s -> empty."""
    s = tuple(s)
    if not s:
        return identity_1mor(EMPTY_OBJ)
    if len(s) == 1:
        (x, d) = s[0]
        gen = ("lcap", x) if d == UP else ("rcap", x)
        return generator_1mor(gen)
    head, rest = s[:1], s[1:]
    inner = boxtimes_right(boxtimes_left(hash_object(rest), fold_cap_left(head)), rest)
    return compose_1mor(fold_cap_left(rest), inner)


def fold_cap_right(s):
    """rcap over an object: s + s# -> empty."""
    return fold_cap_left(hash_object(s))


def mate_right(w):
    """The right-mate t# -> s# of w: s -> t."""
    s, t = w.source, w.target
    top = boxtimes_right(fold_cap_left(t), hash_object(s))
    mid = boxtimes_right(boxtimes_left(hash_object(t), w), hash_object(s))
    bot = boxtimes_left(hash_object(t), fold_cup_left(s))
    return compose_1mor(top, compose_1mor(mid, bot))


def mate_left(w):
    """The left-mate t# -> s# of w: s -> t."""
    s, t = w.source, w.target
    top = boxtimes_left(hash_object(s), fold_cap_right(t))
    mid = boxtimes_right(boxtimes_left(hash_object(s), w), hash_object(t))
    bot = boxtimes_right(fold_cup_right(s), hash_object(t))
    return compose_1mor(top, compose_1mor(mid, bot))


def star_hash(w):
    """The bent reflection s# -> t# of w: s -> t (right-mate of star)."""
    return mate_right(star_1mor(w))


def internal_hom(s_mor, t_mor):
    """The closed word whose evaluation carries 2-morphisms from S to T."""
    if s_mor.source != t_mor.source or s_mor.target != t_mor.target:
        raise WebWordError("internal hom needs parallel 1-morphisms")
    s, t = s_mor.source, s_mor.target
    return compose_1mor(
        fold_cap_right(t),
        compose_1mor(
            boxtimes_right(t_mor, hash_object(t)),
            compose_1mor(
                boxtimes_left(s, star_hash(s_mor)),
                fold_cup_left(s),
            ),
        ),
    )


# ---------------------------------------------------------------------------
# edge classification


@dataclass(frozen=True)
class EdgeClass:
    rep: tuple
    kind: str  # 'iloop', 'iarc', 'barc', 'sturn', 'tturn', 'pass'
    label: object
    slots: tuple  # (('src', p) | ('tgt', p), ...)
    attach: tuple  # ((height, 'in'|'out'), ...) at split/merge vertices
    tail: object  # vertex height, or boundary slot, or None for loops
    head: object


@dataclass(frozen=True)
class EdgeStructure:
    morphism: OneMorphism
    classes: tuple  # EdgeClass, sorted by rep
    pos2class: tuple  # ((position, rep), ...)
    vertices: tuple  # ((height, gen), ...) for split/merge heights

    def class_map(self):
        return {c.rep: c for c in self.classes}

    def position_map(self):
        return dict(self.pos2class)


def _entry_at(w, posn):
    if posn[0] == "src":
        return w.source[posn[1] - 1]
    if posn[0] == "tgt":
        return w.target[posn[1] - 1]
    _, i, side, p = posn
    basic = w.basics[i]
    seq = basic_source(basic) if side == "S" else basic_target(basic)
    return seq[p - 1]


def edge_structure(w):
    uf = UnionFind()
    k = len(w.basics)
    positions = []
    for p in range(1, len(w.source) + 1):
        positions.append(("src", p))
    for p in range(1, len(w.target) + 1):
        positions.append(("tgt", p))
    for i, basic in enumerate(w.basics):
        for p in range(1, len(basic_source(basic)) + 1):
            positions.append(("p", i, "S", p))
        for p in range(1, len(basic_target(basic)) + 1):
            positions.append(("p", i, "T", p))
    for pos in positions:
        uf.find(pos)

    if k == 0:
        for p in range(1, len(w.source) + 1):
            uf.union(("src", p), ("tgt", p))
    else:
        for p in range(1, len(w.source) + 1):
            uf.union(("src", p), ("p", 0, "S", p))
        for p in range(1, len(w.target) + 1):
            uf.union(("tgt", p), ("p", k - 1, "T", p))
        for i in range(k - 1):
            for p in range(1, len(basic_target(w.basics[i])) + 1):
                uf.union(("p", i, "T", p), ("p", i + 1, "S", p))
    for i, (o_l, gen, o_r) in enumerate(w.basics):
        q = len(o_l)
        ns, nt = len(gen_source(gen)), len(gen_target(gen))
        kind = gen[0]
        if kind in ("lcap", "rcap"):
            uf.union(("p", i, "S", q + 1), ("p", i, "S", q + 2))
        if kind in ("lcup", "rcup"):
            uf.union(("p", i, "T", q + 1), ("p", i, "T", q + 2))
        for p in range(1, q + 1):
            uf.union(("p", i, "S", p), ("p", i, "T", p))
        for j in range(1, len(o_r) + 1):
            uf.union(("p", i, "S", q + ns + j), ("p", i, "T", q + nt + j))

    vertices = tuple((i, gen) for i, (o_l, gen, o_r) in enumerate(w.basics) if gen[0] in ("split", "merge"))

    classes = {}
    for pos in positions:
        classes.setdefault(uf.find(pos), []).append(pos)

    edge_classes = []
    pos2class = []
    for rep in ssorted(classes):
        members = classes[rep]
        slots = tuple(sorted((m for m in members if m[0] in ("src", "tgt")), key=sort_key))
        attach = []
        for m in members:
            if m[0] != "p":
                continue
            _, i, side, p = m
            o_l, gen, o_r = w.basics[i]
            if gen[0] not in ("split", "merge"):
                continue
            q = len(o_l)
            width = len(gen_source(gen)) if side == "S" else len(gen_target(gen))
            if q < p <= q + width:
                # in the target of the vertex: the edge leaves it
                attach.append((i, "out" if side == "T" else "in"))
        attach = tuple(sorted(attach, key=sort_key))
        labels = { _entry_at(w, m)[0] for m in members }
        if len(labels) != 1:
            raise WebWordError(f"edge {rep!r} has inconsistent labels {labels!r}")
        label = labels.pop()

        n_bd = len(slots)
        tail = head = None
        if n_bd == 0:
            kind = "iarc" if attach else "iloop"
            if attach:
                outs = [i for i, d in attach if d == "out"]
                ins = [i for i, d in attach if d == "in"]
                if len(outs) != 1 or len(ins) != 1:
                    raise WebWordError(f"internal arc {rep!r} lacks a single tail and head")
                tail, head = outs[0], ins[0]
        elif n_bd == 1:
            kind = "barc"
            if len(attach) != 1:
                raise WebWordError(f"boundary arc {rep!r} must meet exactly one vertex")
            slot = slots[0]
            x, d = _entry_at(w, slot)
            inward = (slot[0] == "src") == (d == UP)
            if inward:
                tail, head = slot, attach[0][0]
                if attach[0][1] != "in":
                    raise WebWordError(f"boundary arc {rep!r} flows inconsistently")
            else:
                tail, head = attach[0][0], slot
                if attach[0][1] != "out":
                    raise WebWordError(f"boundary arc {rep!r} flows inconsistently")
        else:
            sides = {m[0] for m in slots}
            if sides == {"src"}:
                kind = "sturn"
            elif sides == {"tgt"}:
                kind = "tturn"
            else:
                kind = "pass"
            inward = []
            outward = []
            for slot in slots:
                x, d = _entry_at(w, slot)
                if (slot[0] == "src") == (d == UP):
                    inward.append(slot)
                else:
                    outward.append(slot)
            if len(inward) != 1 or len(outward) != 1:
                raise WebWordError(f"edge {rep!r} flows inconsistently at the boundary")
            tail, head = inward[0], outward[0]
        edge_classes.append(EdgeClass(rep, kind, label, slots, attach, tail, head))
        for m in members:
            pos2class.append((m, rep))

    return EdgeStructure(w, tuple(edge_classes), tuple(sorted(pos2class, key=lambda x: sort_key(x[0]))), vertices)


def vertex_positions(w, i):
    """The three generator strand positions of the split/merge at height i,
    in the cyclic order (x-strand, y-strand, sum-strand)."""
    o_l, gen, o_r = w.basics[i]
    q = len(o_l)
    if gen[0] == "split":
        return (("p", i, "T", q + 1), ("p", i, "T", q + 2), ("p", i, "S", q + 1))
    if gen[0] == "merge":
        return (("p", i, "S", q + 1), ("p", i, "S", q + 2), ("p", i, "T", q + 1))
    raise WebWordError(f"height {i} is not a vertex")


def abs_web(w):
    """The combinatorial closed labeled web of an endomorphism of the
    empty object."""
    if w.source != EMPTY_OBJ or w.target != EMPTY_OBJ:
        raise WebWordError("only endomorphisms of the empty object define closed webs")
    es = edge_structure(w)
    from . import foamcore as fc

    loops, arcs, labels = [], [], {}
    reps = [c.rep for c in es.classes]
    eid = {rep: n for n, rep in enumerate(ssorted(reps))}
    for c in es.classes:
        labels[eid[c.rep]] = c.label
        if c.kind == "iloop":
            loops.append(eid[c.rep])
        elif c.kind == "iarc":
            arcs.append((eid[c.rep], c.tail, c.head))
        else:
            raise WebWordError("a closed word cannot have boundary edges")
    pos_map = es.position_map()
    orders = []
    for i, gen in es.vertices:
        triple = tuple(eid[pos_map[p]] for p in vertex_positions(w, i))
        orders.append((i, triple))
    web = fc.make_web(loops=loops, arcs=arcs, orders=orders)
    return lb.make_labeled_web(web, labels)


def star_class_map(w):
    """Canonical bijection of edge classes E(W) -> E(W*)."""
    k = len(w.basics)
    sw = star_1mor(w)
    es, es2 = edge_structure(w), edge_structure(sw)
    pos2, pos1 = es2.position_map(), es.position_map()

    def star_pos(pos):
        if pos[0] == "src":
            return ("tgt", pos[1])
        if pos[0] == "tgt":
            return ("src", pos[1])
        _, i, side, p = pos
        return ("p", k - 1 - i, "T" if side == "S" else "S", p)

    out = {}
    for c in es.classes:
        out[c.rep] = pos2[star_pos(c.rep)]
    return out
