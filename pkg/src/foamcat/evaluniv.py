"""Closed-foam evaluation and the universal construction.

An Evaluator packages a labeling datum, a multiplicative evaluation of
closed labeled foams, and a generator family for each closed web. State
spaces are presented by the declared generators: the Gram matrix of the
evaluation pairing, its saturated integer radical, and the induced free
module. Linear maps between state spaces are computed by pairing against
dual generators and solving against the (unimodular) Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import foamcore as fc
from . import labeled as lb
from .rings import (
    FrobeniusAlgebra,
    ZZ,
    integer_kernel,
    is_unimodular,
    handle_power_trace,
    smith_normal_form,
    snf_diagonal,
    solve_unimodular,
    solve_unimodular_ring,
    validate_frobenius,
)
from .util import sort_key, ssorted


class EvalError(ValueError):
    pass


@dataclass
class Evaluator:
    """A closed evaluation with generator families for state spaces."""

    datum: lb.LabelingDatum
    evaluate: object  # closed FoamVector -> ring element
    generators: object = None  # LabeledWeb -> tuple of FoamVector
    graded: bool = False
    name: str = "evaluator"
    _spaces: dict = field(default_factory=dict, repr=False)


# ---------------------------------------------------------------------------
# the built-in evaluation


def eval_barnatan(vec, datum):
    """Product over facets of counit(H^genus * decoration), extended
    linearly; defined on closed nilvalent foam vectors."""
    algebra = datum.dec_algebra("*").algebra
    ring = datum.ring
    if isinstance(vec, lb.LabeledFoam):
        vec = lb.vector_from_foam(vec)
    if not vec.source.is_empty() or not vec.target.is_empty():
        raise EvalError("evaluation requires a closed foam")
    total = ring.zero
    for coeff, lf in vec.terms:
        if not fc.foam_is_nilvalent(lf.skeleton):
            raise EvalError("the built-in evaluation is nilvalent-only")
        genus = {f: g for f, g, _ in lf.skeleton.facets}
        for c, tensor in lf.decoration:
            term = ring.mul(coeff, c)
            for f, mono in tensor:
                term = ring.mul(term, handle_power_trace(algebra, genus[f], mono))
                if ring.is_zero(term):
                    break
            total = ring.add(total, term)
    return total


def bn_generators(lweb, datum):
    """All decorated cup foams over a union of circles: the spanning
    family realizing the biproduct decomposition (2^n of them for a
    rank-2 algebra and n circles)."""
    if not fc.web_is_nilvalent(lweb.web):
        raise EvalError("the built-in generator family needs a nilvalent web")
    algebra = datum.dec_algebra("*").algebra
    circles = ssorted(lweb.web.loops)
    if not circles:
        empty = lb.make_labeled_foam(fc.EMPTY_FOAM, {}, ((datum.ring.one, ()),))
        return (lb.foam_vector(lb.EMPTY_LWEB, lb.EMPTY_LWEB, [(1, empty)]),)
    out = []
    for choice in product(range(algebra.rank), repeat=len(circles)):
        spec = [(0, [("t", e)]) for e in circles]
        skel = fc.nilvalent_foam(fc.EMPTY_WEB, lweb.web, spec)
        labels = {i: "*" for i in range(len(circles))}
        tensor = tuple((i, b) for i, b in enumerate(choice))
        lf = lb.make_labeled_foam(skel, labels, ((datum.ring.one, tensor),))
        out.append(lb.foam_vector(lb.EMPTY_LWEB, lweb, [(1, lf)]))
    return tuple(out)


def barnatan_evaluator(algebra):
    datum = lb.builtin_datum("barnatan", algebra=algebra)
    return Evaluator(
        datum=datum,
        evaluate=lambda vec: eval_barnatan(vec, datum),
        generators=lambda lweb: bn_generators(lweb, datum),
        graded=True,
        name=f"barnatan({algebra.name})",
    )


def gln_evaluator(N, closed_formula=None, generators=None, equivariant=False):
    """The trivalent datum with a plugin slot for a closed evaluation.

    The closed formula itself lives outside this package; passing
    closed_formula/generators activates the same universal-construction
    machinery as the built-in evaluation.
    """
    kind = "glN_equivariant" if equivariant else "glN"
    datum = lb.builtin_datum(kind, N=N)

    def missing(vec):
        raise EvalError("no closed evaluation formula was plugged in for this datum")

    return Evaluator(
        datum=datum,
        evaluate=closed_formula or missing,
        generators=generators,
        graded=True,
        name=f"gl{N}" + ("_equivariant" if equivariant else ""),
    )


# ---------------------------------------------------------------------------
# property checks for evaluations


def check_multiplicative(E, samples):
    """eval(empty) = 1 and eval(a + b) = eval(a) eval(b) on the samples."""
    ring = E.datum.ring
    bad = []
    empty = lb.foam_vector(
        lb.EMPTY_LWEB,
        lb.EMPTY_LWEB,
        [(1, lb.make_labeled_foam(fc.EMPTY_FOAM, {}, ((ring.one, ()),)))],
    )
    if E.evaluate(empty) != ring.one:
        bad.append("eval(empty) != 1")
    for i, a in enumerate(samples):
        for b in samples[i:]:
            lhs = E.evaluate(lb.disjoint_union_vectors(a, b))
            rhs = ring.mul(E.evaluate(a), E.evaluate(b))
            if lhs != rhs:
                bad.append(f"eval not multiplicative on a sample pair: {lhs} != {rhs}")
    return bad


def check_involutive(E, samples):
    """eval(reverse(s)) = iota(eval(s)) on the samples."""
    ring = E.datum.ring
    bad = []
    for s in samples:
        lhs = E.evaluate(lb.reverse_labeled(s, E.datum))
        rhs = ring.involve(E.evaluate(s))
        if lhs != rhs:
            bad.append(f"eval not involutive on a sample: {lhs} != {rhs}")
    return bad


# ---------------------------------------------------------------------------
# traces, pairings, state spaces


def trace_pair(sigma, tau, E):
    """eval of the closed-up composite: sigma: W -> W', tau: W' -> W."""
    phi = lb.compose_labeled(tau, sigma, E.datum)
    if phi.source.is_empty() and phi.target.is_empty():
        return E.evaluate(phi)
    idw = lb.identity_vector(phi.source, E.datum)
    closed = lb.compose_labeled(lb.bend_to_source(phi), lb.bend_to_target(idw), E.datum)
    return E.evaluate(closed)


@dataclass
class StateSpace:
    web: lb.LabeledWeb
    generators: tuple
    duals: tuple
    gram: tuple  # rows of ring elements
    rank: int
    radical: tuple  # integer kernel basis vectors
    unimodular: bool
    degrees: tuple = None  # per-generator foam degrees (graded case)
    integral: bool = True

    @property
    def size(self):
        return len(self.generators)


def state_space(lweb, E):
    key = lweb
    if key in E._spaces:
        return E._spaces[key]
    if E.generators is None:
        raise EvalError("the evaluator provides no generator family")
    gens = tuple(E.generators(lweb))
    duals = tuple(lb.reverse_labeled(g, E.datum) for g in gens)
    ring = E.datum.ring
    gram = []
    for gi in duals:
        row = []
        for gj in gens:
            row.append(E.evaluate(lb.compose_labeled(gi, gj, E.datum)))
        gram.append(tuple(row))
    gram = tuple(gram)
    integral = all(isinstance(x, int) for row in gram for x in row)
    if integral:
        G = [list(row) for row in gram]
        radical = tuple(tuple(v) for v in integer_kernel(G))
        _, D, _ = smith_normal_form(G)
        diag = snf_diagonal(D)
        rank = sum(1 for d in diag if d != 0)
        unimodular = len(gens) == rank and all(d == 1 for d in diag if d != 0)
    else:
        # polynomial ground ring: only unimodular families are supported
        try:
            solve_unimodular_ring(ring, [list(row) for row in gram], [ring.zero] * len(gens))
            unimodular, radical, rank = True, (), len(gens)
        except ValueError as e:
            raise EvalError(f"non-integral Gram matrix is not unimodular: {e}")
    degrees = None
    if E.graded:
        degrees = tuple(lb.vector_degree(g, E.datum) for g in gens)
    space = StateSpace(lweb, gens, duals, gram, rank, radical, unimodular, degrees, integral)
    E._spaces[key] = space
    return space


def check_property_F(space):
    """The evaluation pairing on the generator family must be unimodular:
    zero radical and every Smith invariant equal to 1. A family with a
    nonzero radical (for instance under a degenerate evaluation) fails."""
    return space.unimodular


def coords_of(vec, space, E):
    """Coordinates of a foam vector empty -> W in the generator basis."""
    p = [E.evaluate(lb.compose_labeled(d, vec, E.datum)) for d in space.duals]
    if not space.unimodular or space.radical:
        raise EvalError("coordinates need an unimodular Gram matrix")
    if space.integral:
        return tuple(solve_unimodular([list(r) for r in space.gram], p))
    return tuple(solve_unimodular_ring(E.datum.ring, [list(r) for r in space.gram], p))


def induced_map(phi, source_space, target_space, E):
    """Matrix of composition with phi: W -> W' from Z(W) to Z(W')."""
    if not target_space.unimodular:
        raise EvalError("induced maps need an unimodular target Gram matrix")
    cols = []
    for g in source_space.generators:
        comp = lb.compose_labeled(phi, g, E.datum)
        cols.append(coords_of(comp, target_space, E))
    return [list(row) for row in zip(*cols)] if cols else [[] for _ in range(target_space.size)]


def check_property_A(lweb, E):
    """Witness the biproduct decomposition: dual families pair to the
    identity and neck-cutting reproduces the identity foam against the
    whole family. Returns a list of violations."""
    bad = []
    space = state_space(lweb, E)
    if not space.unimodular:
        bad.append("Gram matrix is not unimodular; no biproduct witness")
        return bad
    ring = E.datum.ring
    n = space.size
    ginv_rows = []
    for i in range(n):
        basis_vec = [ring.one if k == i else ring.zero for k in range(n)]
        if space.integral:
            ginv_rows.append(solve_unimodular([list(r) for r in space.gram], basis_vec))
        else:
            ginv_rows.append(solve_unimodular_ring(ring, [list(r) for r in space.gram], basis_vec))
    # tau_i = sum_k inv[k][i] dual_k satisfies <tau_i, g_j> = delta_ij
    taus = []
    for i in range(n):
        terms = []
        for k in range(n):
            c = ginv_rows[k][i]
            if not ring.is_zero(c):
                terms.extend((lb._coeff_mul(c, c0), f) for c0, f in space.duals[k].terms)
        taus.append(lb.foam_vector(lweb, lb.EMPTY_LWEB, terms))
    for i in range(n):
        for j in range(n):
            val = E.evaluate(lb.compose_labeled(taus[i], space.generators[j], E.datum))
            want = ring.one if i == j else ring.zero
            if val != want:
                bad.append(f"<tau_{i}, g_{j}> = {val}, expected {want}")
    # lambda_ab = <id_W, g_a . tau_b> computed through the trace
    idw = lb.identity_vector(lweb, E.datum)
    for a in range(n):
        for b in range(n):
            cut = lb.compose_labeled(space.generators[a], taus[b], E.datum)
            val = trace_pair(cut, idw, E)
            want = ring.one if a == b else ring.zero
            if val != want:
                bad.append(f"lambda_({a},{b}) = {val}, expected {want}")
    # neck-cutting: sum_i g_i tau_i acts as the identity on the family
    for a in range(n):
        for b in range(n):
            acc = ring.zero
            for i in range(n):
                cut = lb.compose_labeled(space.generators[i], taus[i], E.datum)
                chain = lb.compose_labeled(cut, space.generators[b], E.datum)
                acc = ring.add(acc, E.evaluate(lb.compose_labeled(taus[a], chain, E.datum)))
            direct = E.evaluate(lb.compose_labeled(taus[a], space.generators[b], E.datum))
            if acc != direct:
                bad.append(f"neck-cutting fails against ({a},{b})")
    return bad


# ---------------------------------------------------------------------------
# cobordism-style foams used to extract the circle algebra


def _circle(label, name="c0"):
    return lb.make_labeled_web(fc.circle_web(name), {name: label})


def _two_circles(label):
    return lb.disjoint_union_labeled_web(_circle(label, "c0"), _circle(label, "c1"))


def _surface_vector(datum, source, target, facet_spec, label, genus=None):
    genus = genus or {}
    spec = [(genus.get(i, 0), refs) for i, refs in enumerate(facet_spec)]
    skel = fc.nilvalent_foam(source.web, target.web, spec)
    labels = {i: label for i in range(len(facet_spec))}
    dec = lb.unit_decoration(datum, labels, labels.keys())
    lf = lb.make_labeled_foam(skel, labels, dec)
    return lb.foam_vector(source, target, [(1, lf)])


def cup_vector(E, label="*"):
    return _surface_vector(E.datum, lb.EMPTY_LWEB, _circle(label), [[("t", "c0")]], label)


def cap_vector(E, label="*"):
    return _surface_vector(E.datum, _circle(label), lb.EMPTY_LWEB, [[("s", "c0")]], label)


def pants_vector(E, label="*"):
    """Multiplication cobordism: two circles to one."""
    cc = _two_circles(label)
    out = _circle(label)
    refs = [[("s", e) for e in cc.web.loops] + [("t", e) for e in out.web.loops]]
    return _surface_vector(E.datum, cc, out, refs, label)


def copants_vector(E, label="*"):
    cc = _two_circles(label)
    src = _circle(label)
    refs = [[("s", e) for e in src.web.loops] + [("t", e) for e in cc.web.loops]]
    return _surface_vector(E.datum, src, cc, refs, label)


def handle_vector(E, label="*"):
    """The genus-one annulus: multiplication by the handle element."""
    c = _circle(label)
    return _surface_vector(E.datum, c, c, [[("s", "c0"), ("t", "c0")]], label, genus={0: 1})


def extract_frobenius(E, label="*"):
    """Recover the Frobenius algebra on the label's circle from the
    computed state spaces and cobordism-induced maps."""
    datum = E.datum
    circle = _circle(label)
    cc = _two_circles(label)
    zc = state_space(circle, E)
    zcc = state_space(cc, E)
    zempty = state_space(lb.EMPTY_LWEB, E)
    if zcc.size != zc.size * zc.size:
        raise EvalError("the two-circle family is not the product family")
    n = zc.size
    ring = datum.ring

    m_mat = induced_map(pants_vector(E, label), zcc, zc, E)
    unit_mat = induced_map(cup_vector(E, label), zempty, zc, E)
    comult_mat = induced_map(copants_vector(E, label), zc, zcc, E)
    counit_mat = induced_map(cap_vector(E, label), zc, zempty, E)

    mult = {}
    for i in range(n):
        for j in range(n):
            col = i * n + j
            mult[(i, j)] = {k: m_mat[k][col] for k in range(n) if not ring.is_zero(m_mat[k][col])}
    unit = {k: unit_mat[k][0] for k in range(n) if not ring.is_zero(unit_mat[k][0])}
    comult = {}
    for i in range(n):
        comult[i] = {}
        for row in range(n * n):
            c = comult_mat[row][i]
            if not ring.is_zero(c):
                comult[i][(row // n, row % n)] = c
    counit = {i: counit_mat[0][i] for i in range(n)}

    alpha = datum.weight_facet(label)
    shift = -alpha
    degree = -2 * alpha
    degrees = None
    if E.graded:
        degrees = tuple(d + shift for d in zc.degrees)
    algebra = FrobeniusAlgebra(
        ring=ring,
        basis=tuple(f"g{i}" for i in range(n)),
        mult=mult,
        unit=unit,
        comult=comult,
        counit=counit,
        degrees=degrees,
        degree=degree,
        shift=shift,
        name=f"Z(circle:{label})",
    )
    report = validate_frobenius(algebra, check_grading=E.graded)
    if not report.ok:
        raise EvalError("extracted algebra fails validation: " + "; ".join(report.violations[:3]))
    return algebra


# ---------------------------------------------------------------------------
# randomized closed samples (for the multiplicativity/involutivity checks)


def random_closed_bn(E, rng, max_facets=3, max_genus=2):
    algebra = E.datum.dec_algebra("*").algebra
    k = rng.randint(1, max_facets)
    facets = [(i, rng.randint(0, max_genus), []) for i in range(k)]
    skel = fc.make_foam(fc.EMPTY_WEB, fc.EMPTY_WEB, facets=facets)
    labels = {i: "*" for i in range(k)}
    tensor = tuple((i, rng.randrange(algebra.rank)) for i in range(k))
    lf = lb.make_labeled_foam(skel, labels, ((1, tensor),))
    return lb.foam_vector(lb.EMPTY_LWEB, lb.EMPTY_LWEB, [(rng.choice([1, 1, 2, -1]), lf)])
