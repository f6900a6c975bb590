"""Randomized verification suites for the category and duality axioms.

Foam-level checks compare the underlying labeled foams up to isomorphism
and run for both nilvalent and trivalent labeling data (no evaluation is
needed); matrix-level checks run under an evaluator with generator
families and compare coordinate vectors exactly.
"""

from __future__ import annotations

import random

from . import evaluniv as ev
from . import foamcore as fc
from . import labeled as lb
from . import onemorph as om
from . import structfoam as sf
from .twocat import TwoCategory, TwoMorphism
from .util import ssorted


# ---------------------------------------------------------------------------
# randomized webs and 2-morphisms


def random_object(rng, datum, max_len=2):
    if datum.valency == "nilvalent":
        labels = list(datum.labels)
    else:
        labels = [1, 2]
    n = rng.randint(0, max_len)
    return tuple((rng.choice(labels), rng.choice("ud")) for _ in range(n))


def _applicable_basics(obj, datum, rng):
    """Basic webs that can be stacked on top of the given object."""
    out = []
    if datum.valency == "nilvalent":
        labels = list(datum.labels)
    else:
        labels = [1, 2]
    for p in range(len(obj) + 1):
        o_l, o_r = obj[:p], obj[p:]
        for x in labels:
            out.append((o_l, ("lcup", x), o_r))
            out.append((o_l, ("rcup", x), o_r))
    for p in range(len(obj) - 1):
        o_l, o_r = obj[:p], obj[p + 2 :]
        (x1, d1), (x2, d2) = obj[p], obj[p + 1]
        if x1 == x2 and (d1, d2) == ("d", "u"):
            out.append((o_l, ("lcap", x1), o_r))
        if x1 == x2 and (d1, d2) == ("u", "d"):
            out.append((o_l, ("rcap", x1), o_r))
        if datum.valency == "trivalent" and (d1, d2) == ("u", "u"):
            out.append((o_l, ("merge", x1, x2, datum.add(x1, x2)), o_r))
    if datum.valency == "trivalent":
        for p in range(len(obj)):
            x, d = obj[p]
            if d == "u":
                for a in labels:
                    b = x - a
                    if b in labels or (b > 0 and datum.labels is None):
                        out.append((obj[:p], ("split", a, b, x), obj[p + 1 :]))
    return out


def random_1mor(rng, datum, source=None, length=2, max_len=2):
    source = random_object(rng, datum, max_len) if source is None else tuple(source)
    basics = []
    cur = source
    for _ in range(length):
        options = _applicable_basics(cur, datum, rng)
        options = [b for b in options if len(om.basic_target(b)) <= max_len + 2]
        if not options:
            break
        b = options[rng.randrange(len(options))]
        basics.append(b)
        cur = om.basic_target(b)
    return om.make_1mor(basics, source=source) if basics else om.identity_1mor(source)


def bubble_insertion(rng, datum, S):
    """A 1-morphism parallel to S, obtained by inserting a cup-cap pair."""
    if datum.valency == "nilvalent":
        labels = list(datum.labels)
    else:
        labels = [1, 2]
    x = rng.choice(labels)
    h = rng.randint(0, len(S.basics))
    o = S.source if h == 0 else om.basic_target(S.basics[h - 1])
    p = rng.randint(0, len(o))
    kind = rng.choice([("lcup", "rcap"), ("rcup", "lcap")])
    b1 = (o[:p], (kind[0], x), o[p:])
    b2 = (o[:p], (kind[1], x), o[p:])
    basics = S.basics[:h] + (b1, b2) + S.basics[h:]
    return om.make_1mor(basics, source=S.source)


def random_parallel_pair(rng, datum, length=2, max_len=2):
    S = random_1mor(rng, datum, length=length, max_len=max_len)
    if rng.random() < 0.4:
        return S, bubble_insertion(rng, datum, S)
    return S, S


def random_2mor(rng, C, S, T, span=2):
    space, shift = C.two_hom(S, T)
    return TwoMorphism(S, T, tuple(rng.randint(-span, span) for _ in range(space.size)), shift)


# ---------------------------------------------------------------------------
# foam-level suites


def _iso(datum, u, v, fix_boundary=True):
    return lb.vectors_isomorphic(u, v, datum, fix_boundary=fix_boundary)


def check_vertical_laws_foam(datum, rng, instances=10):
    """Unit and associativity of vertical composition as foam identities."""
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, datum)
        _, U = random_parallel_pair(rng, datum)
        U = T if U.source != S.source or U.target != S.target else U
        _, V = random_parallel_pair(rng, datum)
        V = S if V.source != S.source or V.target != S.target else V
        h = lambda a, b: sf.hom_web(a, b).lweb
        # unit law
        cup = sf.cup_foam(S, datum)
        vrt = sf.vert_foam(U, S, S, datum)
        lhs = lb.compose_labeled(vrt, lb.disjoint_union_vectors(lb.identity_vector(h(S, U), datum), cup), datum)
        if not _iso(datum, lhs, lb.identity_vector(h(S, U), datum)):
            failures.append(f"vertical unit fails at instance {n}")
        # associativity
        left1 = lb.disjoint_union_vectors(sf.vert_foam(V, U, T, datum), lb.identity_vector(h(S, T), datum))
        left = lb.compose_labeled(sf.vert_foam(V, T, S, datum), left1, datum)
        right1 = lb.disjoint_union_vectors(lb.identity_vector(h(U, V), datum), sf.vert_foam(U, T, S, datum))
        right = lb.compose_labeled(sf.vert_foam(V, U, S, datum), right1, datum)
        _, _, iso = sf.dju_reshuffle_iso(((h(U, V), h(T, U)), h(S, T)), (h(U, V), (h(T, U), h(S, T))))
        if not _iso(datum, sf.resource_vector(left, right.source, iso), right):
            failures.append(f"vertical associativity fails at instance {n}")
    return failures


def check_horizontal_laws_foam(datum, rng, instances=10):
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, datum)
        t = S.target
        Sp = random_1mor(rng, datum, source=t)
        Tp = Sp
        h = lambda a, b: sf.hom_web(a, b).lweb
        idt = om.identity_1mor(t)
        # right unit
        lhs = lb.compose_labeled(
            sf.hor_foam(Tp, Sp, idt, idt, datum),
            lb.disjoint_union_vectors(lb.identity_vector(h(Sp, Tp), datum), sf.cup_foam(idt, datum)),
            datum,
        )
        if not _iso(datum, lhs, lb.identity_vector(h(Sp, Tp), datum)):
            failures.append(f"horizontal unit fails at instance {n}")
        # associativity
        u = Sp.target
        Spp = random_1mor(rng, datum, source=u)
        left = lb.compose_labeled(
            sf.hor_foam(om.compose_1mor(Spp, Tp), om.compose_1mor(Spp, Sp), T, S, datum),
            lb.disjoint_union_vectors(
                sf.hor_foam(Spp, Spp, Tp, Sp, datum), lb.identity_vector(h(S, T), datum)
            ),
            datum,
        )
        right = lb.compose_labeled(
            sf.hor_foam(Spp, Spp, om.compose_1mor(Tp, T), om.compose_1mor(Sp, S), datum),
            lb.disjoint_union_vectors(
                lb.identity_vector(h(Spp, Spp), datum), sf.hor_foam(Tp, Sp, T, S, datum)
            ),
            datum,
        )
        _, _, iso = sf.dju_reshuffle_iso(
            ((h(Spp, Spp), h(Sp, Tp)), h(S, T)), (h(Spp, Spp), (h(Sp, Tp), h(S, T)))
        )
        if not _iso(datum, sf.resource_vector(left, right.source, iso), right):
            failures.append(f"horizontal associativity fails at instance {n}")
    return failures


def check_interchange_foam(datum, rng, instances=10):
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, datum)
        U = T
        Sp = random_1mor(rng, datum, source=S.target)
        Tp, Up = Sp, Sp
        h = lambda a, b: sf.hom_web(a, b).lweb
        SpS, TpT, UpU = (om.compose_1mor(a, b) for a, b in ((Sp, S), (Tp, T), (Up, U)))
        LHS = lb.compose_labeled(
            sf.vert_foam(UpU, TpT, SpS, datum),
            lb.disjoint_union_vectors(sf.hor_foam(Up, Tp, U, T, datum), sf.hor_foam(Tp, Sp, T, S, datum)),
            datum,
        )
        RHS = lb.compose_labeled(
            sf.hor_foam(Up, Sp, U, S, datum),
            lb.disjoint_union_vectors(sf.vert_foam(Up, Tp, Sp, datum), sf.vert_foam(U, T, S, datum)),
            datum,
        )
        _, _, iso = sf.dju_reshuffle_iso(
            ((h(Tp, Up), h(T, U)), (h(Sp, Tp), h(S, T))),
            ((h(Sp, Tp), h(Tp, Up)), (h(S, T), h(T, U))),
            perm=[1, 3, 0, 2],
        )
        if not _iso(datum, sf.resource_vector(LHS, RHS.source, iso), RHS):
            failures.append(f"interchange fails at instance {n}")
    return failures


def check_monoidal_foam(datum, rng, instances=8):
    """The disjoint-union decompositions behind the semistrict clauses."""
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, datum)
        U = T
        x = random_object(rng, datum, 1)
        idx = om.identity_1mor(x)

        def dju3(a, b, c=None):
            out = lb.disjoint_union_vectors(a, b)
            return out if c is None else lb.disjoint_union_vectors(out, c)

        cases = [
            (
                "cup of a padded word",
                sf.cup_foam(om.boxtimes_left(x, S), datum),
                dju3(sf.cup_foam(S, datum), sf.cup_foam(idx, datum)),
            ),
            (
                "cup of a right-padded word",
                sf.cup_foam(om.boxtimes_right(S, x), datum),
                dju3(sf.cup_foam(S, datum), sf.cup_foam(idx, datum)),
            ),
            (
                "vert of padded words",
                sf.vert_foam(om.boxtimes_left(x, U), om.boxtimes_left(x, T), om.boxtimes_left(x, S), datum),
                dju3(sf.vert_foam(U, T, S, datum), sf.vert_foam(idx, idx, idx, datum)),
            ),
            (
                "hor of padded words",
                sf.hor_foam(
                    om.boxtimes_left(x, om.identity_1mor(S.target)),
                    om.boxtimes_left(x, om.identity_1mor(S.target)),
                    om.boxtimes_left(x, T),
                    om.boxtimes_left(x, S),
                    datum,
                ),
                dju3(
                    sf.hor_foam(om.identity_1mor(S.target), om.identity_1mor(S.target), T, S, datum),
                    sf.hor_foam(idx, idx, idx, idx, datum),
                ),
            ),
        ]
        if S.source == S.target:
            Tten = random_1mor(rng, datum, source=random_object(rng, datum, 1))
            A = om.compose_1mor(om.boxtimes_left(S.target, Tten), om.boxtimes_right(S, Tten.source))
            cases.append(
                (
                    "cup of an interleaved pair",
                    sf.cup_foam(A, datum),
                    dju3(sf.cup_foam(Tten, datum), sf.cup_foam(S, datum)),
                )
            )
        for name, lhs, rhs in cases:
            if not _iso(datum, lhs, rhs, fix_boundary=False):
                failures.append(f"{name} decomposition fails at instance {n}")
    return failures

# ---------------------------------------------------------------------------
# matrix-level suites (need an evaluator with generator families)


def check_category_laws_matrix(C, rng, instances=10):
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, C.datum)
        alpha = random_2mor(rng, C, S, T)
        beta = random_2mor(rng, C, T, S)
        gamma = random_2mor(rng, C, S, T)
        # vertical unit + associativity
        if C.vcompose(alpha, C.identity(S)) != alpha or C.vcompose(C.identity(T), alpha) != alpha:
            failures.append(f"vertical unit fails at instance {n}")
        lhs = C.vcompose(gamma, C.vcompose(beta, alpha))
        rhs = C.vcompose(C.vcompose(gamma, beta), alpha)
        if lhs != rhs:
            failures.append(f"vertical associativity fails at instance {n}")
        # horizontal: units and associativity through identity 2-morphisms
        ids = om.identity_1mor(S.source)
        idt = om.identity_1mor(S.target)
        if C.hcompose(alpha, C.identity(ids)) != alpha:
            failures.append(f"horizontal right unit fails at instance {n}")
        if C.hcompose(C.identity(idt), alpha) != alpha:
            failures.append(f"horizontal left unit fails at instance {n}")
        Sp = random_1mor(rng, C.datum, source=S.target)
        Spp = random_1mor(rng, C.datum, source=Sp.target)
        a2 = random_2mor(rng, C, Sp, Sp)
        a3 = random_2mor(rng, C, Spp, Spp)
        if C.hcompose(a3, C.hcompose(a2, alpha)) != C.hcompose(C.hcompose(a3, a2), alpha):
            failures.append(f"horizontal associativity fails at instance {n}")
    return failures


def check_interchange_matrix(C, rng, instances=10):
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, C.datum)
        Sp = random_1mor(rng, C.datum, source=S.target)
        sigma = random_2mor(rng, C, S, T)
        theta = random_2mor(rng, C, T, S)
        sigmap = random_2mor(rng, C, Sp, Sp)
        thetap = random_2mor(rng, C, Sp, Sp)
        lhs = C.vcompose(C.hcompose(thetap, theta), C.hcompose(sigmap, sigma))
        rhs = C.hcompose(C.vcompose(thetap, sigmap), C.vcompose(theta, sigma))
        if lhs != rhs:
            failures.append(f"interchange fails at instance {n}")
    return failures


def check_semistrict_matrix(C, rng, instances=6):
    """The eight clauses of the semistrict monoidal structure."""
    failures = []

    def note(cond, msg, n):
        if not cond:
            failures.append(f"{msg} at instance {n}")

    for n in range(instances):
        S, T = random_parallel_pair(rng, C.datum)
        x = random_object(rng, C.datum, 1)
        y = random_object(rng, C.datum, 1)
        alpha = random_2mor(rng, C, S, T)
        beta = random_2mor(rng, C, T, S)

        # (i) 2-functoriality of x (x) - and - (x) x
        note(
            om.boxtimes_left(x, om.compose_1mor(om.star_1mor(S), S))
            == om.compose_1mor(om.boxtimes_left(x, om.star_1mor(S)), om.boxtimes_left(x, S)),
            "(i) composition of 1-morphisms",
            n,
        )
        note(C.boxtimes(x, C.identity(S)) == C.identity(om.boxtimes_left(x, S)), "(i) identity 2-morphisms", n)
        note(
            C.boxtimes(x, C.vcompose(beta, alpha))
            == C.vcompose(C.boxtimes(x, beta), C.boxtimes(x, alpha)),
            "(i) vertical functoriality",
            n,
        )
        Sp = random_1mor(rng, C.datum, source=S.target)
        ap = random_2mor(rng, C, Sp, Sp)
        note(
            C.boxtimes(x, C.hcompose(ap, alpha))
            == C.hcompose(C.boxtimes(x, ap), C.boxtimes(x, alpha)),
            "(i) horizontal functoriality",
            n,
        )

        # (ii) the empty object is a strict unit
        note(C.boxtimes((), alpha) == alpha, "(ii) empty unit (left)", n)
        note(C.boxtimes((), alpha, side="right") == alpha, "(ii) empty unit (right)", n)

        # (iii) associativity of the object action
        lhs = C.boxtimes(x, C.boxtimes(y, alpha))
        rhs = C.boxtimes(om.boxtimes_obj(x, y), alpha)
        note(lhs == rhs, "(iii) left-left association", n)
        mid = C.boxtimes(x, C.boxtimes(y, alpha, side="right"))
        mid2 = C.boxtimes(y, C.boxtimes(x, alpha), side="right")
        note(mid == mid2, "(iii) mixed association", n)
        rr = C.boxtimes(om.boxtimes_obj(x, y), alpha, side="right")
        rr2 = C.boxtimes(y, C.boxtimes(x, alpha, side="right"), side="right")
        note(rr == rr2, "(iii) right-right association", n)

        # (iv) tensorator versus padding
        Tm = random_1mor(rng, C.datum)
        Um = random_1mor(rng, C.datum)
        note(
            C.tensorator(om.boxtimes_left(x, Tm), Um) == C.boxtimes(x, C.tensorator(Tm, Um)),
            "(iv) left padding",
            n,
        )
        note(
            C.tensorator(om.boxtimes_right(Tm, x), Um)
            == C.tensorator(Tm, om.boxtimes_left(x, Um)),
            "(iv) middle padding",
            n,
        )
        note(
            C.tensorator(Tm, om.boxtimes_right(Um, y)) == C.boxtimes(y, C.tensorator(Tm, Um), side="right"),
            "(iv) right padding",
            n,
        )

        # (v) tensorator with identities
        note(C.tensorator(om.identity_1mor(x), Tm) == C.identity(om.boxtimes_left(x, Tm)), "(v) left", n)
        note(C.tensorator(Tm, om.identity_1mor(y)) == C.identity(om.boxtimes_right(Tm, y)), "(v) right", n)

        # (vi) naturality in the second slot
        s, t = S.source, S.target
        Tn, Tn2 = random_parallel_pair(rng, C.datum)
        sp, tp = Tn.source, Tn.target
        sig = random_2mor(rng, C, Tn, Tn2)
        lhs = C.vcompose(
            C.tensorator(S, Tn2),
            C.hcompose(C.identity(om.boxtimes_right(S, tp)), C.boxtimes(s, sig)),
        )
        rhs = C.vcompose(
            C.hcompose(C.boxtimes(t, sig), C.identity(om.boxtimes_right(S, sp))),
            C.tensorator(S, Tn),
        )
        note(lhs == rhs, "(vi) tensorator naturality (second slot)", n)

        # (vii) naturality in the first slot
        S1, S2 = random_parallel_pair(rng, C.datum)
        sig1 = random_2mor(rng, C, S1, S2)
        lhs = C.vcompose(
            C.tensorator(S2, Tn),
            C.hcompose(C.boxtimes(tp, sig1, side="right"), C.identity(om.boxtimes_left(S1.source, Tn))),
        )
        rhs = C.vcompose(
            C.hcompose(C.identity(om.boxtimes_left(S1.target, Tn)), C.boxtimes(sp, sig1, side="right")),
            C.tensorator(S1, Tn),
        )
        note(lhs == rhs, "(vii) tensorator naturality (first slot)", n)

        # (viii) tensorator under composition
        Tq = random_1mor(rng, C.datum, source=Tn.target)
        lhs = C.tensorator(S, om.compose_1mor(Tq, Tn))
        rhs = C.vcompose(
            C.hcompose(C.identity(om.boxtimes_left(t, Tq)), C.tensorator(S, Tn)),
            C.hcompose(C.tensorator(S, Tq), C.identity(om.boxtimes_left(s, Tn))),
        )
        note(lhs == rhs, "(viii) second slot composition", n)
        Sq = random_1mor(rng, C.datum, source=S.target)
        lhs = C.tensorator(om.compose_1mor(Sq, S), Tn)
        rhs = C.vcompose(
            C.hcompose(C.tensorator(Sq, Tn), C.identity(om.boxtimes_right(S, sp))),
            C.hcompose(C.identity(om.boxtimes_right(Sq, tp)), C.tensorator(S, Tn)),
        )
        note(lhs == rhs, "(viii) first slot composition", n)
    return failures


def check_duality_matrix(C, rng, instances=6):
    failures = []

    def note(cond, msg, n):
        if not cond:
            failures.append(f"{msg} at instance {n}")

    for n in range(instances):
        S, T = random_parallel_pair(rng, C.datum)
        alpha = random_2mor(rng, C, S, T)
        beta = random_2mor(rng, C, T, S)
        Sstar = om.star_1mor(S)

        # the star functor
        note(C.star(C.star(alpha)) == alpha, "star involution", n)
        note(C.star(C.identity(S)) == C.identity(Sstar), "star of identities", n)
        note(
            C.star(C.vcompose(beta, alpha)) == C.vcompose(C.star(alpha), C.star(beta)),
            "star reverses vertical composition",
            n,
        )
        Sp = random_1mor(rng, C.datum, source=S.target)
        ap = random_2mor(rng, C, Sp, Sp)
        note(
            C.star(C.hcompose(ap, alpha)) == C.hcompose(C.star(alpha), C.star(ap)),
            "star reverses horizontal composition",
            n,
        )

        # (ii) the epsilon equations
        eps_S, eps_T = C.epsilon(S), C.epsilon(T)
        lhs = C.vcompose(C.hcompose(alpha, C.identity(Sstar)), eps_S)
        rhs = C.vcompose(C.hcompose(C.identity(T), C.star(alpha)), eps_T)
        note(lhs == rhs, "epsilon naturality", n)

        eps_Ss = C.epsilon(Sstar)
        zig1 = C.vcompose(C.hchain(C.identity(S), C.star(eps_Ss)), C.hchain(eps_S, C.identity(S)))
        note(zig1 == C.identity(S), "zig-zag (left adjoint)", n)
        zig2 = C.vcompose(C.hchain(C.star(eps_S), C.identity(Sstar)), C.hchain(C.identity(Sstar), eps_Ss))
        note(zig2 == C.identity(Sstar), "zig-zag (right adjoint)", n)

        U = random_1mor(rng, C.datum, length=1)
        Uto = om.compose_1mor(S, om.identity_1mor(S.source))
        V = random_1mor(rng, C.datum, source=random_object(rng, C.datum, 1))
        W = random_1mor(rng, C.datum, source=V.target)
        lhs = C.vcompose(
            C.hchain(C.identity(W), C.epsilon(V), C.identity(om.star_1mor(W))),
            C.epsilon(W),
        )
        note(lhs == C.epsilon(om.compose_1mor(W, V)), "epsilon of a composite", n)

        # (iii) compatibility with padding
        x = random_object(rng, C.datum, 1)
        y = random_object(rng, C.datum, 1)
        padded = om.boxtimes_right(om.boxtimes_left(x, S), y)
        note(om.star_1mor(padded) == om.boxtimes_right(om.boxtimes_left(x, Sstar), y), "star of padded words", n)
        note(
            C.epsilon(padded) == C.boxtimes(y, C.boxtimes(x, C.epsilon(S)), side="right"),
            "epsilon of padded words",
            n,
        )

        # hash duality
        s = random_object(rng, C.datum, 2)
        t = random_object(rng, C.datum, 2)
        note(om.hash_object(om.hash_object(s)) == s, "hash involution", n)
        note(
            om.fold_cup_left(om.boxtimes_obj(s, t))
            == om.compose_1mor(
                om.boxtimes_right(om.boxtimes_left(s, om.fold_cup_left(t)), om.hash_object(s)),
                om.fold_cup_left(s),
            ),
            "nested folds",
            n,
        )
        tri, tri_inv = C.triangulator(s)
        note(C.vcompose(tri, tri_inv) == C.identity(om.identity_1mor(s)), "triangulator right inverse", n)
        note(C.vcompose(tri_inv, tri) == C.identity(C.zigzag_word(s)), "triangulator left inverse", n)
    return failures


def check_swallowtail(C, s):
    """Clause (2)(iv): the triangulators cancel against the tensorator."""
    s = tuple(s)
    eta = om.fold_cup_left(s)
    eta_star = om.star_1mor(eta)
    sh = om.hash_object(s)
    eta_sh = om.fold_cup_left(sh)
    tri_s, _ = C.triangulator(s)
    tri_sh, _ = C.triangulator(sh)
    lhs = C.identity(eta_star)
    top = C.hchain(C.identity(eta_star), C.boxtimes(sh, tri_s, side="right"))
    mid = C.hchain(
        C.tensorator(eta_star, eta_star),
        C.identity(om.boxtimes_right(om.boxtimes_left(s, eta_sh), sh)),
    )
    bot = C.hchain(C.identity(eta_star), C.boxtimes(s, C.star(tri_sh)))
    rhs = C.vcompose(top, C.vcompose(mid, bot))
    return lhs == rhs


def check_triangulator_pad_rule(C, s, t):
    """Clause (2)(iii): the triangulator of a concatenated object."""
    s, t = tuple(s), tuple(t)
    st = om.boxtimes_obj(s, t)
    tri_st, _ = C.triangulator(st)
    tri_s, _ = C.triangulator(s)
    tri_t, _ = C.triangulator(t)
    eta_s = om.fold_cup_left(s)
    eta_t = om.fold_cup_left(t)
    eta_sh = om.fold_cup_left(om.hash_object(s))
    eta_th = om.fold_cup_left(om.hash_object(t))
    top = C.hcompose(C.boxtimes(t, tri_s, side="right"), C.boxtimes(s, tri_t))
    tens = C.tensorator(
        om.boxtimes_left(s, om.star_1mor(eta_t)),
        om.boxtimes_right(eta_sh, t),
    )
    mid = C.hchain(
        C.identity(om.boxtimes_right(om.boxtimes_left(om.star_1mor(eta_s), s), t)),
        tens,
        C.identity(om.boxtimes_left(om.boxtimes_obj(s, t), eta_th)),
    )
    rhs = C.vcompose(top, mid)
    return tri_st == rhs


def check_grading_matrix(C, rng, instances=20):
    """Every structural operation is degree-preserving after shifts."""
    failures = []
    for n in range(instances):
        S, T = random_parallel_pair(rng, C.datum)
        space, shift = C.two_hom(S, T)
        if space.size == 0:
            continue
        idx = rng.randrange(space.size)
        alpha = TwoMorphism(S, T, tuple(1 if k == idx else 0 for k in range(space.size)), shift)
        d = C.degree(alpha)
        beta = random_2mor(rng, C, T, S)
        try:
            db = C.degree(beta)
        except Exception:
            beta = TwoMorphism(T, S, tuple(1 if k == 0 else 0 for k in range(space.size)), C.hom_shift(T, S))
            db = C.degree(beta)
        comp = C.vcompose(beta, alpha)
        if any(comp.coords) and C.degree(comp) != d + db:
            failures.append(f"vertical composition shifts degree at instance {n}")
        if C.degree(C.identity(S)) != 0:
            failures.append(f"identity 2-morphism has nonzero degree at instance {n}")
        x = random_object(rng, C.datum, 1)
        padded = C.boxtimes(x, alpha)
        if any(padded.coords) and C.degree(padded) != d:
            failures.append(f"object action shifts degree at instance {n}")
        Sp = random_1mor(rng, C.datum, source=S.target)
        ap = random_2mor(rng, C, Sp, Sp)
        try:
            da = C.degree(ap)
        except Exception:
            continue
        h = C.hcompose(ap, alpha)
        if any(h.coords) and C.degree(h) != d + da:
            failures.append(f"horizontal composition shifts degree at instance {n}")
    return failures
