"""Exact commutative-ring arithmetic and integer linear algebra.

Everything here is exact: ring elements are integers or integer-coefficient
polynomials in canonical form, and matrix routines use integer elimination.
No floating point is used anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass


# ---------------------------------------------------------------------------
# rings


class IntRing:
    """The ring of integers. Elements are plain Python ints."""

    graded = True  # trivially graded, everything in degree 0
    names = ()

    zero = 0
    one = 1

    def from_int(self, n):
        return n

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def element_degree(self, a):
        return 0 if a != 0 else None

    def involve(self, a):
        return a

    def format_element(self, a):
        return str(a)

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntRing)

    def __hash__(self):
        return hash("ZZ")


ZZ = IntRing()


def _poly_normalize(items):
    acc = {}
    for exps, c in items:
        acc[exps] = acc.get(exps, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


class PolyRing:
    """Graded polynomial ring ZZ[g_1..g_n] with even generator degrees.

    Elements are canonical tuples of (exponent_tuple, int_coefficient),
    sorted with zero coefficients dropped, so equality is syntactic.
    """

    graded = True

    def __init__(self, names, degrees):
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        if len(self.names) != len(self.degrees):
            raise ValueError("one degree per generator required")
        self.zero = ()
        self.one = (((0,) * len(self.names), 1),)

    def gen(self, i):
        exps = [0] * len(self.names)
        exps[i] = 1
        return ((tuple(exps), 1),)

    def from_int(self, n):
        return () if n == 0 else (((0,) * len(self.names), n),)

    def monomial(self, exps, coeff=1):
        return _poly_normalize([(tuple(exps), coeff)])

    def add(self, a, b):
        return _poly_normalize(list(a) + list(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return tuple((e, -c) for e, c in a)

    def mul(self, a, b):
        out = []
        for ea, ca in a:
            for eb, cb in b:
                out.append((tuple(x + y for x, y in zip(ea, eb)), ca * cb))
        return _poly_normalize(out)

    def is_zero(self, a):
        return a == ()

    def monomial_degree(self, exps):
        return sum(e * d for e, d in zip(exps, self.degrees))

    def element_degree(self, a):
        """Degree of a homogeneous element, None if zero or inhomogeneous."""
        degs = {self.monomial_degree(e) for e, _ in a}
        if len(degs) != 1:
            return None
        return degs.pop()

    def involve(self, a):
        return a

    def format_element(self, a):
        if not a:
            return "0"
        parts = []
        for exps, c in a:
            factors = []
            for name, e in zip(self.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ZZ[{','.join(self.names)}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and not isinstance(other, QuotientRing)
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash(("PolyRing", self.names, self.degrees))


class QuotientRing(PolyRing):
    """Quotient of a PolyRing by a single relation, monic in one generator.

    Canonical forms keep the exponent of the distinguished generator below
    the degree of the relation, by repeated substitution.
    """

    def __init__(self, base, var, relation):
        super().__init__(base.names, base.degrees)
        self.base = base
        self.var = var
        relation = _poly_normalize(relation)
        lead = [(e, c) for e, c in relation if c != 0]
        deg = max(e[var] for e, _ in lead)
        leading = [(e, c) for e, c in relation if e[var] == deg]
        if len(leading) != 1 or leading[0][1] != 1 or any(x for i, x in enumerate(leading[0][0]) if i != var):
            raise ValueError("relation must be monic in the distinguished generator")
        self.rel_degree = deg
        # x^deg = -(rest)
        self.rest = base.neg(tuple((e, c) for e, c in relation if e[var] < deg))
        self.relation = relation

    def _reduce(self, a):
        while True:
            todo = [(e, c) for e, c in a if e[self.var] >= self.rel_degree]
            if not todo:
                return a
            keep = [(e, c) for e, c in a if e[self.var] < self.rel_degree]
            extra = []
            for e, c in todo:
                rem = list(e)
                rem[self.var] -= self.rel_degree
                for er, cr in self.rest:
                    extra.append((tuple(x + y for x, y in zip(rem, er)), c * cr))
            a = _poly_normalize(keep + extra)

    def add(self, a, b):
        return self._reduce(super().add(a, b))

    def mul(self, a, b):
        return self._reduce(super().mul(a, b))

    def monomial(self, exps, coeff=1):
        return self._reduce(super().monomial(exps, coeff))

    def __repr__(self):
        return f"ZZ[{','.join(self.names)}]/({self.format_element(self.relation)})"

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and self.names == other.names
            and self.degrees == other.degrees
            and self.var == other.var
            and self.relation == other.relation
        )

    def __hash__(self):
        return hash(("QuotientRing", self.names, self.degrees, self.var, self.relation))


# ---------------------------------------------------------------------------
# integer matrices


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    assert all(len(row) == k for row in A) or not A
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def kron(A, B):
    """Kronecker product, blocks of B scaled by entries of A."""
    if not A or not B:
        return []
    p, q = len(B), len(B[0])
    out = []
    for i in range(len(A)):
        for bi in range(p):
            row = []
            for j in range(len(A[0])):
                a = A[i][j]
                row.extend(a * B[bi][bj] for bj in range(q))
            out.append(row)
    return out


def smith_normal_form(M):
    """Return (U, D, V) with U*M*V = D, U and V unimodular.

    D is diagonal with nonnegative entries satisfying the divisibility
    chain d_1 | d_2 | ... ; standard integer elimination with pivoting.
    """
    A = [list(row) for row in M]
    n = len(A)
    m = len(A[0]) if A else 0
    U = identity_matrix(n)
    V = identity_matrix(m)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        for k in range(m):
            A[dst][k] += q * A[src][k]
        for k in range(n):
            U[dst][k] += q * U[src][k]

    def add_col(src, dst, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(n, m):
        # locate a pivot of minimal absolute value
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear row and column t, re-pivoting while remainders appear
        while True:
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a != 0:
                add_col(i + 1, i, 1)  # puts b into column i at row i+1
                # re-eliminate the 2x2 block
                while A[i + 1][i]:
                    if abs(A[i + 1][i]) <= abs(A[i][i]):
                        q = A[i][i] // A[i + 1][i]
                        add_row(i + 1, i, -q)
                        swap_rows(i, i + 1)
                    else:
                        q = A[i + 1][i] // A[i][i]
                        add_row(i, i + 1, -q)
                if A[i][i + 1]:
                    q = A[i][i + 1] // A[i][i]
                    add_col(i, i + 1, -q)
                if A[i][i] < 0:
                    negate_row(i)
                if A[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    return U, A, V


def snf_diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(M):
    """Basis of the saturated integer kernel {x : M x = 0}, as columns."""
    if not M or not M[0]:
        m = len(M[0]) if M else 0
        return identity_matrix(m) if m else []
    U, D, V = smith_normal_form(M)
    m = len(M[0])
    diag = snf_diagonal(D)
    rank = sum(1 for d in diag if d != 0)
    basis = []
    for j in range(rank, m):
        basis.append([V[i][j] for i in range(m)])
    return basis


def is_unimodular(M):
    if not M or len(M) != len(M[0]):
        return False
    _, D, _ = smith_normal_form(M)
    return all(D[i][i] in (1, -1) for i in range(len(M)))


def solve_unimodular(G, b):
    """Unique integer solution x of G x = b for unimodular square G."""
    n = len(G)
    if n == 0:
        return []
    if any(len(row) != n for row in G):
        raise ValueError("matrix must be square")
    U, D, V = smith_normal_form(G)
    diag = snf_diagonal(D)
    if any(d not in (1, -1) for d in diag):
        raise ValueError("matrix is not unimodular")
    y = mat_vec(U, b)
    y = [yi // d for yi, d in zip(y, diag)]
    return mat_vec(V, y)


def solve_unimodular_ring(ring, G, b):
    """Solve G x = b over a commutative ring, for G with unit determinant.

    Fraction-free Gauss-Jordan via the adjugate; intended for the small
    unimodular Gram matrices that arise over polynomial ground rings.
    """
    n = len(G)
    if n == 0:
        return []
    if n > 6:
        raise ValueError("generic-ring solve is limited to matrices up to 6x6")
    det, adj = _det_adjugate(ring, G)
    if det == ring.one:
        sign = 1
    elif det == ring.neg(ring.one):
        sign = -1
    else:
        raise ValueError("matrix determinant is not a unit (+1/-1)")
    x = [ring.zero] * n
    for i in range(n):
        acc = ring.zero
        for j in range(n):
            acc = ring.add(acc, ring.mul(adj[i][j], b[j]))
        x[i] = acc if sign == 1 else ring.neg(acc)
    return x


def _det_adjugate(ring, G):
    n = len(G)

    def minor_det(rows, cols):
        if len(rows) == 1:
            return G[rows[0]][cols[0]]
        acc = ring.zero
        for k, c in enumerate(cols):
            entry = G[rows[0]][c]
            if ring.is_zero(entry):
                continue
            sub = minor_det(rows[1:], cols[:k] + cols[k + 1 :])
            term = ring.mul(entry, sub)
            acc = ring.add(acc, term) if k % 2 == 0 else ring.sub(acc, term)
        return acc

    all_idx = tuple(range(n))
    det = minor_det(all_idx, all_idx)
    adj = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = tuple(r for r in all_idx if r != j)
            cols = tuple(c for c in all_idx if c != i)
            cof = minor_det(rows, cols) if n > 1 else ring.one
            adj[i][j] = cof if (i + j) % 2 == 0 else ring.neg(cof)
    return det, adj


# ---------------------------------------------------------------------------
# Frobenius algebras


def vec_add(ring, u, v):
    out = dict(u)
    for k, c in v.items():
        s = ring.add(out.get(k, ring.zero), c)
        if ring.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(ring, c, u):
    if ring.is_zero(c):
        return {}
    out = {}
    for k, x in u.items():
        p = ring.mul(c, x)
        if not ring.is_zero(p):
            out[k] = p
    return out


class FrobeniusAlgebra:
    """A commutative Frobenius algebra with explicit structure tables.

    Tables are indexed by basis positions 0..rank-1 and have coefficients
    in the base ring. The comultiplication is supplied, not derived.
    """

    def __init__(
        self,
        ring,
        basis,
        mult,
        unit,
        comult,
        counit,
        degrees=None,
        degree=0,
        shift=0,
        involution=None,
        name="A",
    ):
        self.ring = ring
        self.basis = tuple(basis)
        self.rank = len(self.basis)
        self.mult = mult  # {(i, j): {k: coeff}}
        self.unit = unit  # {i: coeff}
        self.comult = comult  # {i: {(j, k): coeff}}
        self.counit = counit  # {i: coeff}
        self.degrees = tuple(degrees) if degrees is not None else (0,) * self.rank
        self.degree = degree  # d
        self.shift = shift  # c
        self.involution = involution  # {i: {j: coeff}} or None for identity
        self.name = name

    def __repr__(self):
        return f"FrobeniusAlgebra({self.name}, rank {self.rank})"

    def basis_vec(self, i):
        return {i: self.ring.one}

    def mul_vec(self, u, v):
        ring = self.ring
        out = {}
        for i, ci in u.items():
            for j, cj in v.items():
                table = self.mult.get((i, j), {})
                out = vec_add(ring, out, vec_scale(ring, ring.mul(ci, cj), table))
        return out

    def mul_basis(self, i, j):
        return dict(self.mult.get((i, j), {}))

    def comul_vec(self, u):
        ring = self.ring
        out = {}
        for i, ci in u.items():
            for jk, c in self.comult.get(i, {}).items():
                s = ring.add(out.get(jk, ring.zero), ring.mul(ci, c))
                if ring.is_zero(s):
                    out.pop(jk, None)
                else:
                    out[jk] = s
        return out

    def counit_vec(self, u):
        ring = self.ring
        acc = ring.zero
        for i, ci in u.items():
            acc = ring.add(acc, ring.mul(ci, self.counit.get(i, ring.zero)))
        return acc

    def handle(self, u):
        """The handle operator m(comult(u))."""
        ring = self.ring
        out = {}
        for (j, k), c in self.comul_vec(u).items():
            out = vec_add(ring, out, vec_scale(ring, c, self.mult.get((j, k), {})))
        return out

    def involve_vec(self, u):
        if self.involution is None:
            return {i: self.ring.involve(c) for i, c in u.items()}
        ring = self.ring
        out = {}
        for i, ci in u.items():
            out = vec_add(ring, out, vec_scale(ring, ring.involve(ci), self.involution[i]))
        return out


def handle_power_trace(algebra, genus, element):
    """Evaluate counit(H^genus * element) for an algebra element.

    `element` may be a basis index or a coefficient dict.
    """
    if isinstance(element, int):
        element = algebra.basis_vec(element)
    v = dict(element)
    for _ in range(genus):
        v = algebra.handle(v)
    return algebra.counit_vec(v)


@dataclass
class ValidationReport:
    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok


def validate_frobenius(A, check_grading=True):
    """Check every Frobenius-algebra axiom on the basis; report violations."""
    ring = A.ring
    bad = []
    r = A.rank

    def vec_eq(u, v):
        return vec_add(ring, u, vec_scale(ring, ring.neg(ring.one), v)) == {}

    # table shape
    for i in range(r):
        for j in range(r):
            if any(k < 0 or k >= r for k in A.mult.get((i, j), {})):
                bad.append(f"mult({i},{j}) mentions an index outside the basis")
            if any(x < 0 or x >= r or y < 0 or y >= r for x, y in A.comult.get(i, {})):
                bad.append(f"comult({i}) mentions an index outside the basis")

    unit_vec = dict(A.unit)
    for i in range(r):
        e = A.basis_vec(i)
        if not vec_eq(A.mul_vec(unit_vec, e), e):
            bad.append(f"unit axiom fails on basis element {A.basis[i]}")
        # counit axioms: (eps x id) comult = id = (id x eps) comult
        left, right = {}, {}
        for (j, k), c in A.comul_vec(e).items():
            left = vec_add(ring, left, vec_scale(ring, ring.mul(c, A.counit.get(j, ring.zero)), {k: ring.one}))
            right = vec_add(ring, right, vec_scale(ring, ring.mul(c, A.counit.get(k, ring.zero)), {j: ring.one}))
        if not vec_eq(left, e) or not vec_eq(right, e):
            bad.append(f"counit axiom fails on basis element {A.basis[i]}")

    for i in range(r):
        for j in range(r):
            if A.mul_basis(i, j) != A.mul_basis(j, i):
                bad.append(f"commutativity fails on ({A.basis[i]},{A.basis[j]})")
            for k in range(r):
                lhs = A.mul_vec(A.mul_vec(A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k))
                rhs = A.mul_vec(A.basis_vec(i), A.mul_vec(A.basis_vec(j), A.basis_vec(k)))
                if not vec_eq(lhs, rhs):
                    bad.append(f"associativity fails on ({A.basis[i]},{A.basis[j]},{A.basis[k]})")

    # Frobenius compatibility: comult(a*b) = (id x m)(comult(a) x b) = (m x id)(a x comult(b))
    for i in range(r):
        for j in range(r):
            mid = A.comul_vec(A.mul_vec(A.basis_vec(i), A.basis_vec(j)))
            left = {}
            for (x, y), c in A.comul_vec(A.basis_vec(i)).items():
                for k, ck in A.mul_basis(y, j).items():
                    left = vec_add(ring, left, {(x, k): ring.mul(c, ck)})
            right = {}
            for (x, y), c in A.comul_vec(A.basis_vec(j)).items():
                for k, ck in A.mul_basis(i, x).items():
                    right = vec_add(ring, right, {(k, y): ring.mul(c, ck)})
            if not vec_eq(left, mid):
                bad.append(f"Frobenius compatibility (left) fails on ({A.basis[i]},{A.basis[j]})")
            if not vec_eq(right, mid):
                bad.append(f"Frobenius compatibility (right) fails on ({A.basis[i]},{A.basis[j]})")

    if check_grading:
        bad.extend(_grading_violations(A))

    if A.involution is not None:
        for i in range(r):
            twice = A.involve_vec(A.involve_vec(A.basis_vec(i)))
            if not vec_eq(twice, A.basis_vec(i)):
                bad.append(f"involution does not square to the identity on {A.basis[i]}")

    return ValidationReport(not bad, tuple(bad))


def _grading_violations(A):
    ring = A.ring
    bad = []

    def cdeg(c):
        return ring.element_degree(c)

    for (i, j), table in A.mult.items():
        for k, c in table.items():
            if ring.is_zero(c):
                continue
            d = cdeg(c)
            if d is None or A.degrees[k] + d != A.degrees[i] + A.degrees[j]:
                bad.append(f"mult is not degree 0 at ({A.basis[i]},{A.basis[j]})->{A.basis[k]}")
    for i, c in A.unit.items():
        d = cdeg(c)
        if not ring.is_zero(c) and (d is None or A.degrees[i] + d != 0):
            bad.append(f"unit is not degree 0 at {A.basis[i]}")
    for i, table in A.comult.items():
        for (j, k), c in table.items():
            if ring.is_zero(c):
                continue
            d = cdeg(c)
            if d is None or A.degrees[j] + A.degrees[k] + d != A.degrees[i] + A.degree:
                bad.append(f"comult is not degree d at {A.basis[i]}->({A.basis[j]},{A.basis[k]})")
    for i, c in A.counit.items():
        if ring.is_zero(c):
            continue
        d = cdeg(c)
        if d is None or d != A.degrees[i] - A.degree:
            bad.append(f"counit is not degree -d at {A.basis[i]}")
    return bad


def khovanov_algebra():
    """ZZ[x]/(x^2) with counit 1->0, x->1: the rank-2 graded example."""
    return FrobeniusAlgebra(
        ring=ZZ,
        basis=("1", "x"),
        mult={(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}},
        unit={0: 1},
        comult={0: {(0, 1): 1, (1, 0): 1}, 1: {(1, 1): 1}},
        counit={0: 0, 1: 1},
        degrees=(0, 2),
        degree=2,
        shift=1,
        name="ZZ[x]/(x^2)",
    )


def trivial_algebra():
    """The ground ring itself, rank 1 and degree 0."""
    return FrobeniusAlgebra(
        ring=ZZ,
        basis=("1",),
        mult={(0, 0): {0: 1}},
        unit={0: 1},
        comult={0: {(0, 0): 1}},
        counit={0: 1},
        degrees=(0,),
        degree=0,
        shift=0,
        name="ZZ",
    )


def equivariant_algebra(N):
    """k[x]/(x^N + a_1 x^{N-1} + ... + a_N) over k = ZZ[a_1..a_N].

    Graded of degree 2N-2 with counit x^k -> delta_{k,N-1}.
    """
    names = tuple(f"a{i}" for i in range(1, N + 1)) + ("x",)
    degrees = tuple(2 * i for i in range(1, N + 1)) + (2,)
    base = PolyRing(names, degrees)
    rel = [((0,) * N + (N,), 1)]
    for i in range(1, N + 1):
        exps = [0] * (N + 1)
        exps[i - 1] = 1
        exps[N] = N - i
        rel.append((tuple(exps), 1))
    R = QuotientRing(base, N, tuple(rel))
    kring = PolyRing(names[:N], degrees[:N])

    # basis 1, x, ..., x^{N-1}; structure constants by reduction in R
    def lift(p):
        # view an element of R as a poly in x with coefficients in kring
        coeffs = {}
        for exps, c in p:
            k = exps[N]
            mono = exps[:N]
            coeffs.setdefault(k, []).append((mono, c))
        return {k: _poly_normalize(v) for k, v in coeffs.items()}

    mult = {}
    for i in range(N):
        for j in range(N):
            prod = R.monomial((0,) * N + (i + j,))
            mult[(i, j)] = {k: c for k, c in lift(prod).items() if c != ()}
    counit = {i: kring.zero for i in range(N)}
    counit[N - 1] = kring.one
    # comult(a) = sum_j (a * x^j) (x) dual(x^j), with the dual basis taken
    # with respect to the pairing <x^i, x^j> = counit(x^{i+j})
    pairing = [[lift(R.monomial((0,) * N + (i + j,))).get(N - 1, kring.zero) for j in range(N)] for i in range(N)]
    inv = _invert_unimodular_ring(kring, pairing)
    dualbasis = [[inv[k][j] for k in range(N)] for j in range(N)]
    comult = {}
    for i in range(N):
        table = {}
        for j in range(N):
            prod = lift(R.monomial((0,) * N + (i + j,)))
            for t, c in prod.items():
                for k in range(N):
                    coeff = kring.mul(c, dualbasis[j][k])
                    if coeff != ():
                        prev = table.get((t, k), kring.zero)
                        s = kring.add(prev, coeff)
                        if s == ():
                            table.pop((t, k), None)
                        else:
                            table[(t, k)] = s
        comult[i] = table
    return FrobeniusAlgebra(
        ring=kring,
        basis=tuple(f"x^{i}" if i else "1" for i in range(N)),
        mult=mult,
        unit={0: kring.one},
        comult=comult,
        counit=counit,
        degrees=tuple(2 * i for i in range(N)),
        degree=2 * N - 2,
        shift=N - 1,
        name=f"k[x]/(x^{N}+a1 x^{N-1}+...+a{N})",
    )


def _invert_unimodular_ring(ring, M):
    n = len(M)
    det, adj = _det_adjugate(ring, M)
    if det == ring.one:
        return adj
    if det == ring.neg(ring.one):
        return [[ring.neg(x) for x in row] for row in adj]
    raise ValueError("pairing matrix is not unimodular over the ground ring")


# ---------------------------------------------------------------------------
# symmetric polynomial decoration algebras


@dataclass(frozen=True)
class SymPoly:
    """Element of ZZ[e_1..e_n], deg(e_i) = 2i, in canonical form."""

    label: int
    items: tuple  # canonical ((exps, coeff), ...)

    @staticmethod
    def ring(n):
        return PolyRing(tuple(f"e{i}" for i in range(1, n + 1)), tuple(2 * i for i in range(1, n + 1)))

    @staticmethod
    def monomial(n, exps, coeff=1):
        return SymPoly(n, SymPoly.ring(n).monomial(exps, coeff))

    @staticmethod
    def one(n):
        return SymPoly(n, SymPoly.ring(n).one)

    @staticmethod
    def gen(n, i):
        """e_i inside the label-n algebra (1-based)."""
        return SymPoly(n, SymPoly.ring(n).gen(i - 1))

    def add(self, other):
        if self.label != other.label:
            raise ValueError("label mismatch")
        return SymPoly(self.label, self.ring(self.label).add(self.items, other.items))

    def degree(self):
        return self.ring(self.label).element_degree(self.items)

    def __repr__(self):
        return self.ring(self.label).format_element(self.items)


def sym_multiply(p, q):
    """Free-polynomial product of symmetric-generator expressions."""
    if p.label != q.label:
        raise ValueError(f"label mismatch: {p.label} != {q.label}")
    R = SymPoly.ring(p.label)
    return SymPoly(p.label, R.mul(p.items, q.items))
