"""The graph side of the combinatorial formula and the piecewise linear form.

For a trivalent ribbon graph the matrix K encodes, face by face, the total
ordering of the edge sides around the face once a distinguished side is
chosen; the piecewise linear 2-form on the cell is (1/4) sum K_ij de_i^de_j.
This module builds K, checks its interplay with the oriented adjacency
matrix B, computes the constant density of the top power of the form on a
cell, and assembles/verifies both sides of the combinatorial formula.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import (
    RationalFunction,
    kernel_basis,
    mat_det,
    mat_inverse,
    mat_mul,
    mat_rank,
    mat_vec,
    orthant_exponential_integral,
    pfaffian,
    right_inverse,
)
from .ribbon import RibbonGraph, UnsupportedGraph, enumerate_trivalent
from .volumes import is_stable, lhs_laplace

__all__ = [
    "kontsevich_form",
    "rhs_terms",
    "rhs_laplace",
    "rhs_evaluate",
    "verify_kcf",
    "verify_form_identities",
    "cell_density",
    "restrict_form",
    "kernel_normalization",
]

# B K B = EPSILON * 4 * B across all trivalent graphs, with the single
# global sign fixed by the B and K conventions used in this package.
# (The factor is 4, not 8: the limiting Weil-Petersson form equals twice
# the quarter-K form; see notes in verify_form_identities.)
EPSILON = 1


def kontsevich_form(graph: RibbonGraph, distinguished=None):
    """The skew matrix K from a choice of one distinguished side per face.

    `distinguished[i]` is an offset into the i-th face cycle (default 0);
    the cyclic order of the sides becomes a total order starting there.
    For edges i != j, every pair of sides (one of edge i at position p, one
    of edge j at position q) contributes +1 if p < q and -1 otherwise.
    """
    if not graph.is_trivalent:
        raise UnsupportedGraph("K is defined on trivalent cells")
    faces = graph._faces
    if distinguished is None:
        distinguished = [0] * len(faces)
    E = graph.num_edges
    K = [[0] * E for _ in range(E)]
    for fi, cyc in enumerate(faces):
        off = distinguished[fi]
        if not 0 <= off < len(cyc):
            raise ValueError(f"distinguished side {off} invalid for face of size {len(cyc)}")
        ordered = [graph.edge_of[cyc[(off + t) % len(cyc)]] for t in range(len(cyc))]
        for p in range(len(ordered)):
            for q in range(p + 1, len(ordered)):
                i, j = ordered[p], ordered[q]
                if i != j:
                    K[i][j] += 1
                    K[j][i] -= 1
    return K


def kernel_normalization(A):
    """Basis V of ker A plus |det [V | W]| with A W = I.

    The determinant converts the basis volume into the quotient Lebesgue
    measure on {A e = x}: the fibre measure lambda satisfies
    de_1...de_E = lambda tensor dx exactly when the block matrix has
    unit determinant.
    """
    A = [[Fraction(x) for x in row] for row in A]
    V = kernel_basis(A)
    W = right_inverse(A)
    E = len(A[0])
    M = [[V[j][i] for j in range(len(V))] + [W[i][j] for j in range(len(A))]
         for i in range(E)]
    return V, abs(mat_det(M))


def restrict_form(M, V):
    """Gram matrix G[i][j] = v_i^T M v_j of the form M on the basis V."""
    images = [mat_vec(M, v) for v in V]
    return [[sum(a * b for a, b in zip(u, Mv)) for Mv in images] for u in V]


def cell_density(graph: RibbonGraph) -> Fraction:
    """Constant density of the top power of the quarter-K form on the cell.

    Computed as |Pf((1/4) V^T K V)| divided by the factor converting the
    kernel basis V into the quotient Lebesgue measure of {A e = x}.
    Equals 2^(1-g) on every trivalent graph.
    """
    if not graph.is_trivalent:
        raise UnsupportedGraph("cell density is defined on trivalent cells")
    K = kontsevich_form(graph)
    A = graph.face_edge_matrix()
    V, volfactor = kernel_normalization(A)
    Kq = [[Fraction(x, 4) for x in row] for row in K]
    G = restrict_form(Kq, V)
    return abs(pfaffian(G)) / volfactor


def verify_form_identities(graph: RibbonGraph) -> dict:
    """Exact checks tying K to the oriented adjacency B on one graph.

    With eps = EPSILON, a single global sign:

    (i)   B K B = eps * 4 * B;
    (ii)  (B K - eps * 4 I) v = 0 for every v in ker A;
    (iii) the quarter-K form on ker A is nondegenerate, independent of the
          distinguished sides, and equals eps times the [Bhat^{-1}]-form
          for any principal invertible block Bhat of B.

    (i) and (ii) are equivalent because the columns of B span ker A; the
    factor is 4, not 8: with the literal side-ordering rule for K the cell
    density comes out 2^(1-g), forced by the combinatorial formula, which
    pins the quarter-K form at half the limiting Weil-Petersson form.
    """
    if not graph.is_trivalent:
        raise UnsupportedGraph("form identities are about trivalent cells")
    E = graph.num_edges
    B = graph.oriented_adjacency()
    K = kontsevich_form(graph)
    A = graph.face_edge_matrix()
    V, _ = kernel_normalization(A)
    g, n = graph.genus, graph.num_faces
    dim = 6 * g - 6 + 2 * n

    report = {"graph": graph.to_json(), "epsilon": EPSILON, "checks": {}}
    ok = True

    BK = mat_mul(B, K)
    BKB = mat_mul(BK, B)
    c1 = all(BKB[i][j] == EPSILON * 4 * B[i][j] for i in range(E) for j in range(E))
    report["checks"]["BKB_eq_eps4B"] = c1
    ok &= c1

    c2 = True
    for v in V:
        w = mat_vec(BK, v)
        if any(w[i] - EPSILON * 4 * v[i] != 0 for i in range(E)):
            c2 = False
            break
    report["checks"]["BK_minus_eps4I_kills_kerA"] = c2
    ok &= c2

    Kq = [[Fraction(x, 4) for x in row] for row in K]
    G = restrict_form(Kq, V)
    c3 = mat_rank(G) == dim
    report["checks"]["quarterK_nondegenerate_on_kerA"] = c3
    ok &= c3

    # distinguished-side independence of the restriction
    faces = graph._faces
    alt = [len(c) // 2 for c in faces]
    K2 = kontsevich_form(graph, alt)
    G2 = restrict_form([[Fraction(x, 4) for x in row] for row in K2], V)
    c4 = G == G2
    report["checks"]["distinguished_side_independent_on_kerA"] = c4
    ok &= c4

    c5 = _principal_block_identity(graph, B, G, V)
    report["checks"]["matches_Bhat_inverse_form"] = c5
    ok &= c5

    report["ok"] = bool(ok)
    return report


def _principal_block_identity(graph, B, G, V):
    """(1/4) K on ker A  ==  eps * (v_S^T Bhat^{-1} v_S)-form, Bhat invertible."""
    import itertools

    E = graph.num_edges
    dim = len(V)
    for S in itertools.combinations(range(E), dim):
        Bhat = [[Fraction(B[i][j]) for j in S] for i in S]
        if mat_det(Bhat) != 0:
            break
    else:
        return dim == 0
    Binv = mat_inverse(Bhat)
    for i in range(dim):
        for j in range(dim):
            vi = [V[i][k] for k in S]
            vj = [V[j][k] for k in S]
            val = sum(vi[a] * sum(Binv[a][b] * vj[b] for b in range(dim))
                      for a in range(dim))
            if G[i][j] != EPSILON * val:
                return False
    return True


# -- the combinatorial formula ------------------------------------------------


def rhs_terms(g: int, n: int):
    """Per-graph closed forms: (graph, aut, RationalFunction term)."""
    if not is_stable(g, n):
        raise ValueError(f"({g},{n}) is unstable")
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    pref = Fraction(2) ** (2 * g - 2 + n)
    out = []
    for graph, aut in enumerate_trivalent(g, n):
        term = orthant_exponential_integral(graph.face_edge_matrix(), svars)
        out.append((graph, aut, term * (pref / aut)))
    return out


def rhs_evaluate(g: int, n: int, point: dict, terms=None) -> Fraction:
    if terms is None:
        terms = rhs_terms(g, n)
    return sum((t.evaluate(point) for _, _, t in terms), Fraction(0))


def rhs_laplace(g: int, n: int) -> RationalFunction:
    """The graph sum combined into a single reduced rational function.

    Expansion is fine for the small types; use `rhs_evaluate` for pointwise
    work on larger ones.
    """
    terms = rhs_terms(g, n)
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    total = RationalFunction.zero(svars)
    for _, _, t in terms:
        total = total + t
    return total.reduced()


def verify_kcf(g: int, n: int, trials: int = 30, seed: int = 0) -> dict:
    """Compare both sides of the combinatorial formula at random points.

    Both sides are exact rational numbers at exact rational points, so
    equality at more than twice the degree-bound many points is a proof;
    failures report the first offending point.
    """
    if not is_stable(g, n):
        raise ValueError(f"({g},{n}) is unstable")
    degree_bound = (6 * g - 6 + 3 * n) + n
    trials = max(trials, 2 * degree_bound + 1)
    rng = random.Random(seed)
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    lhs = lhs_laplace(g, n)
    terms = rhs_terms(g, n)
    points = []
    equal = True
    first_bad = None
    for _ in range(trials):
        point = {v: Fraction(rng.randint(1, 1000), rng.randint(1, 1000)) for v in svars}
        lv = lhs.evaluate(point)
        rv = rhs_evaluate(g, n, point, terms)
        same = lv == rv
        points.append({
            "point": {v: str(point[v]) for v in svars},
            "lhs": str(lv),
            "rhs": str(rv),
            "equal": same,
        })
        if not same and first_bad is None:
            first_bad = points[-1]
            equal = False
    return {
        "g": g,
        "n": n,
        "graphs": len(terms),
        "trials": trials,
        "seed": seed,
        "equal": equal,
        "first_mismatch": first_bad,
        "points": points,
    }
