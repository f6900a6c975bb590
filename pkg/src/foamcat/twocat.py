"""The locally graded-linear semistrict monoidal 2-category.

2-morphisms are coordinate vectors in the computed state space of the
internal-hom web of their source and target 1-morphisms, with a grading
shift making identity 2-morphisms sit in degree zero. All operations are
matrices induced by the structural foams.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import evaluniv as ev
from . import foamcore as fc
from . import labeled as lb
from . import onemorph as om
from . import structfoam as sf
from .rings import mat_vec


class TwoCatError(ValueError):
    pass


@dataclass(frozen=True)
class TwoMorphism:
    src: om.OneMorphism
    tgt: om.OneMorphism
    coords: tuple
    shift: object = None  # grading shift of the hom module, or None


def vec_kron(ring, u, v):
    out = []
    for a in u:
        for b in v:
            out.append(ring.mul(a, b))
    return tuple(out)


class TwoCategory:
    """Calculus of 2-morphisms over a fixed evaluator."""

    def __init__(self, evaluator):
        self.E = evaluator
        self.datum = evaluator.datum
        self.ring = evaluator.datum.ring
        self._maps = {}
        self._cup_deg = {}
        self._ids = {}

    # -- state spaces with shifts ------------------------------------

    def cup_degree(self, S):
        if S not in self._cup_deg:
            vec = sf.cup_foam(S, self.datum)
            self._cup_deg[S] = lb.vector_degree(vec, self.datum)
        return self._cup_deg[S]

    def hom_shift(self, S, T):
        if not self.E.graded:
            return None
        total = self.cup_degree(S) + self.cup_degree(T)
        if total % 2 != 0:
            raise TwoCatError("half-integral grading shift: malformed web pair")
        return -total // 2

    def two_hom(self, S, T):
        """(state space, shift) of the 2-morphism module from S to T."""
        space = ev.state_space(sf.hom_web(S, T).lweb, self.E)
        return space, self.hom_shift(S, T)

    def element_degrees(self, alpha):
        space, shift = self.two_hom(alpha.src, alpha.tgt)
        degs = set()
        for c, d in zip(alpha.coords, space.degrees):
            if not self.ring.is_zero(c):
                cd = self.ring.element_degree(c)
                degs.add(d + shift + (cd or 0))
        return degs

    def degree(self, alpha):
        degs = self.element_degrees(alpha)
        if len(degs) > 1:
            raise TwoCatError("inhomogeneous 2-morphism")
        return degs.pop() if degs else None

    # -- coordinates and induced maps --------------------------------

    def coords_of(self, vec, S, T):
        space, shift = self.two_hom(S, T)
        return TwoMorphism(S, T, tuple(ev.coords_of(vec, space, self.E)), shift)

    def _matrix(self, key, foamvec, src_web, tgt_web):
        if key not in self._maps:
            src_space = ev.state_space(src_web, self.E)
            tgt_space = ev.state_space(tgt_web, self.E)
            self._maps[key] = ev.induced_map(foamvec, src_space, tgt_space, self.E)
        return self._maps[key]

    # -- identities and compositions ---------------------------------

    def identity(self, S):
        if S not in self._ids:
            cup = sf.cup_foam(S, self.datum)
            self._ids[S] = self.coords_of(cup, S, S)
        return self._ids[S]

    def vcompose(self, beta, alpha):
        if alpha.tgt != beta.src:
            raise TwoCatError("vertical composition needs matching 1-morphisms")
        S, T, U = alpha.src, alpha.tgt, beta.tgt
        foam = sf.vert_foam(U, T, S, self.datum)
        M = self._matrix(("vert", U, T, S), foam, foam.source, foam.target)
        coords = mat_vec(M, list(vec_kron(self.ring, beta.coords, alpha.coords)))
        return TwoMorphism(S, U, tuple(coords), self.hom_shift(S, U))

    def hcompose(self, beta, alpha):
        """beta over alpha: alpha: S -> T (s to t), beta: S' -> T' (t to u)."""
        S, T = alpha.src, alpha.tgt
        Sp, Tp = beta.src, beta.tgt
        if S.target != Sp.source:
            raise TwoCatError("horizontal composition needs adjacent objects")
        foam = sf.hor_foam(Tp, Sp, T, S, self.datum)
        M = self._matrix(("hor", Tp, Sp, T, S), foam, foam.source, foam.target)
        coords = mat_vec(M, list(vec_kron(self.ring, beta.coords, alpha.coords)))
        SS, TT = om.compose_1mor(Sp, S), om.compose_1mor(Tp, T)
        return TwoMorphism(SS, TT, tuple(coords), self.hom_shift(SS, TT))

    def hchain(self, *factors):
        """Horizontal composite of several 2-morphisms, written like the
        displayed formulas: the leftmost factor sits over the others."""
        out = factors[0]
        for f in factors[1:]:
            out = self.hcompose(out, f)
        return out

    def boxtimes(self, x, alpha, side="left"):
        S, T = alpha.src, alpha.tgt
        XS, XT, H_big, dju_web, iso = sf.boxtimes_views(tuple(x), S, T, side)
        idv = lb.identity_vector(sf.hom_web(S, T).lweb, self.datum)
        idx = om.identity_1mor(tuple(x))
        connector = lb.disjoint_union_vectors(idv, sf.cup_foam(idx, self.datum))
        connector = sf.retarget_vector(connector, H_big.lweb, iso)
        key = ("boxtimes", side, tuple(x), S, T)
        M = self._matrix(key, connector, connector.source, connector.target)
        coords = mat_vec(M, list(alpha.coords))
        return TwoMorphism(XS, XT, tuple(coords), self.hom_shift(XS, XT))

    # -- duality 2-morphisms ------------------------------------------

    def epsilon(self, S):
        """The adjunction 2-morphism id_t -> S S*."""
        B, iso = sf.epsilon_view(S)
        vec = sf.retarget_vector(sf.cup_foam(S, self.datum), B.lweb, iso)
        idt = om.identity_1mor(S.target)
        comp = om.compose_1mor(S, om.star_1mor(S))
        return self.coords_of(vec, idt, comp)

    def star(self, alpha):
        S, T = alpha.src, alpha.tgt
        B, iso = sf.star_view(S, T)
        idv = lb.identity_vector(sf.hom_web(S, T).lweb, self.datum)
        vec = sf.retarget_vector(idv, B.lweb, iso)
        key = ("star", S, T)
        M = self._matrix(key, vec, vec.source, vec.target)
        coords = mat_vec(M, list(alpha.coords))
        return TwoMorphism(om.star_1mor(T), om.star_1mor(S), tuple(coords), self.hom_shift(om.star_1mor(T), om.star_1mor(S)))

    def tensorator(self, S, T):
        A, Bmor, iso = sf.tensorator_views(S, T)
        HB = sf.hom_web(Bmor, A)
        vec = sf.retarget_vector(sf.cup_foam(A, self.datum), HB.lweb, iso)
        return self.coords_of(vec, Bmor, A)

    def triangulator(self, s):
        Z, (B1, iso1), (B2, iso2) = sf.triangulator_views(tuple(s))
        ids = om.identity_1mor(tuple(s))
        cup = sf.cup_foam(ids, self.datum)
        fwd = self.coords_of(sf.retarget_vector(cup, B1.lweb, iso1), Z, ids)
        inv = self.coords_of(sf.retarget_vector(cup, B2.lweb, iso2), ids, Z)
        return fwd, inv

    def zigzag_word(self, s):
        Z, _, _ = sf.triangulator_views(tuple(s))
        return Z

    # -- traces --------------------------------------------------------

    def scalar(self, alpha):
        """A 2-endomorphism of id_empty is a single coordinate."""
        if alpha.src != om.identity_1mor(om.EMPTY_OBJ):
            raise TwoCatError("not an endomorphism of the empty identity")
        return alpha.coords[0] if alpha.coords else self.ring.zero

    def front_trace(self, sigma):
        s = sigma.src.source
        if sigma.src != om.identity_1mor(s) or sigma.tgt != sigma.src:
            raise TwoCatError("traces take 2-endomorphisms of an identity")
        rcap = om.fold_cap_right(s)
        lcup = om.fold_cup_left(s)
        eps = self.epsilon(rcap)
        mid = self.hchain(
            self.identity(rcap),
            self.boxtimes(om.hash_object(s), sigma, side="right"),
            self.identity(lcup),
        )
        return self.scalar(self.vcompose(self.star(eps), self.vcompose(mid, eps)))

    def back_trace(self, sigma):
        s = sigma.src.source
        if sigma.src != om.identity_1mor(s) or sigma.tgt != sigma.src:
            raise TwoCatError("traces take 2-endomorphisms of an identity")
        lcap = om.fold_cap_left(s)
        rcup = om.fold_cup_right(s)
        eps = self.epsilon(lcap)
        mid = self.hchain(
            self.identity(lcap),
            self.boxtimes(om.hash_object(s), sigma, side="left"),
            self.identity(rcup),
        )
        return self.scalar(self.vcompose(self.star(eps), self.vcompose(mid, eps)))

    # -- inverses -------------------------------------------------------

    def solve_left_inverse(self, alpha):
        """Find xi with xi . alpha = id_src and alpha . xi = id_tgt."""
        S, T = alpha.src, alpha.tgt
        space_ts, _ = self.two_hom(T, S)
        n = space_ts.size
        foam = sf.vert_foam(S, T, S, self.datum)
        M = self._matrix(("vert", S, T, S), foam, foam.source, foam.target)
        # columns: image of basis xi against fixed alpha
        space_ss, _ = self.two_hom(S, S)
        cols = []
        for i in range(n):
            xi = [self.ring.one if k == i else self.ring.zero for k in range(n)]
            cols.append(mat_vec(M, list(vec_kron(self.ring, tuple(xi), alpha.coords))))
        A = [list(row) for row in zip(*cols)]
        target = list(self.identity(S).coords)
        from .rings import solve_unimodular, solve_unimodular_ring

        try:
            x = solve_unimodular(A, target) if all(isinstance(v, int) for row in A for v in row) else solve_unimodular_ring(self.ring, A, target)
        except ValueError:
            return None
        xi = TwoMorphism(T, S, tuple(x), self.hom_shift(T, S))
        if self.vcompose(xi, alpha) != self.identity(S):
            return None
        if self.vcompose(alpha, xi) != self.identity(T):
            return None
        return xi

    # -- sphericality ----------------------------------------------------

    def spatial_delta(self, W):
        """The canonical 2-isomorphism from the left-mate to the right-mate,
        assembled from adjunction units, triangulators and tensorators."""
        s, t = W.source, W.target
        th, sh = om.hash_object(t), om.hash_object(s)
        rmW, lmW = om.mate_right(W), om.mate_left(W)
        Wstar = om.star_1mor(W)
        eta_t = om.fold_cup_left(t)
        eta_t_star = om.star_1mor(eta_t)
        eta_s = om.fold_cup_left(s)
        eta_s_star = om.star_1mor(eta_s)
        eta_th = om.fold_cup_left(th)
        eta_shash = om.fold_cup_left(sh)
        id_rm, id_lm = self.identity(rmW), self.identity(lmW)

        bent = om.compose_1mor(om.boxtimes_left(th, Wstar), eta_th)  # {} -> t# x s
        row6 = self.hchain(self.epsilon(rmW), id_lm)
        row5 = self.hchain(
            id_rm,
            self.identity(om.boxtimes_left(th, eta_s_star)),
            self.tensorator(bent, lmW),
        )
        capped = om.compose_1mor(eta_t_star, om.boxtimes_right(W, th))  # s x t# -> {}
        long4 = om.compose_1mor(
            om.boxtimes_left(th, om.boxtimes_right(om.boxtimes_left(s, eta_shash), th)),
            om.compose_1mor(
                om.boxtimes_left(th, om.boxtimes_right(Wstar, th)),
                om.boxtimes_right(eta_th, th),
            ),
        )
        row4 = self.hchain(
            id_rm,
            self.tensorator(om.boxtimes_left(th, eta_s_star), capped),
            self.identity(long4),
        )
        tri_s, _ = self.triangulator(s)
        left3 = om.compose_1mor(
            om.boxtimes_left(th, eta_t_star),
            om.boxtimes_left(th, om.boxtimes_right(W, th)),
        )
        right3 = om.compose_1mor(
            om.boxtimes_left(th, om.boxtimes_right(Wstar, th)),
            om.boxtimes_right(eta_th, th),
        )
        row3 = self.hchain(
            id_rm,
            self.identity(left3),
            self.boxtimes(th, self.boxtimes(th, tri_s, side="right"), side="left"),
            self.identity(right3),
        )
        row2 = self.hchain(
            id_rm,
            self.identity(om.boxtimes_left(th, eta_t_star)),
            self.boxtimes(th, self.boxtimes(th, self.star(self.epsilon(W)), side="right"), side="left"),
            self.identity(om.boxtimes_right(eta_th, th)),
        )
        _, inv_th = self.triangulator(th)
        row1 = self.hchain(id_rm, self.star(inv_th))

        out = row6
        for row in (row5, row4, row3, row2, row1):
            out = self.vcompose(row, out)
        return out
