"""Cell charts on combinatorial cycles and their limiting volumes.

A chart equips a ribbon graph cell with 6g-6+2n multicurves whose limiting
lengths are local coordinates.  The limiting crossing matrix X inverts to
give the limiting Weil-Petersson form

    Omega = - sum_{i<j} [X^{-1}]_{ij} dl_i ^ dl_j,

a constant-coefficient 2-form on the cell {A e = x, e > 0}.  Its top power
integrates to a constant density times the Lebesgue fibre volume, whose
Laplace transform is the per-edge product 1/(s_l + s_r); matching the total
over all cells of a cycle against the psi-class expansion recovers the
cycle's intersection numbers.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    RationalFunction,
    Surd,
    double_factorial,
    mat_inverse,
    orthant_exponential_integral,
    pfaffian,
)
from .kformula import kernel_normalization, restrict_form
from .multicurve import Multicurve, intersection_matrix, limit_length
from .ribbon import RibbonGraph, enumerate_graphs

__all__ = [
    "CellChart",
    "ChartError",
    "asymptotic_form",
    "form_on_kernel_basis",
    "cell_volume_laplace",
    "witten_cycle_intersections",
    "example5_charts",
    "witten12_report",
]


class ChartError(ValueError):
    pass


@dataclass(frozen=True)
class CellChart:
    """A ribbon graph with a multicurve coordinate system on its cell.

    `angle_overrides` optionally pins the crossing cosine of specific chord
    pairs at a vertex, keyed by (vertex, frozenset of the two position
    pairs); it takes precedence over the ideal polygon computation, which
    covers vertices where no exact value is available natively.
    """

    graph: RibbonGraph
    curves: tuple
    angle_overrides: tuple = ()

    def __post_init__(self):
        expected = 6 * self.graph.genus - 6 + 2 * self.graph.num_faces
        if len(self.curves) != expected:
            raise ChartError(
                f"need {expected} multicurves for this cell, got {len(self.curves)}")
        for c in self.curves:
            c.validate(self.graph)

    def _override_map(self):
        out = {}
        for vertex, pair, cos in self.angle_overrides:
            chords = frozenset(frozenset(ch) for ch in pair)
            out[(vertex, chords)] = cos
        return out

    def intersection_matrix(self):
        return intersection_matrix(self.graph, self.curves,
                                   overrides=self._override_map())

    def limit_lengths(self):
        return [limit_length(self.graph, c) for c in self.curves]

    def limit_differentials(self):
        """Reduced differentials of the curve lengths on the cell."""
        from .multicurve import limit_differential

        return [limit_differential(self.graph, c) for c in self.curves]

    def to_json(self):
        out = {
            "graph": self.graph.to_json(),
            "curves": [c.to_signed_edges(self.graph) for c in self.curves],
        }
        if self.angle_overrides:
            out["angle_overrides"] = [
                {"vertex": v, "pair": [sorted(ch) for ch in sorted(map(sorted, pair))],
                 "cos": cos.to_json()}
                for v, pair, cos in self.angle_overrides]
        return out

    @classmethod
    def from_json(cls, obj) -> "CellChart":
        graph = RibbonGraph.from_json(obj["graph"])
        curves = tuple(Multicurve.from_signed_edges(graph, comp)
                       for comp in obj["curves"])
        overrides = tuple(
            (entry["vertex"],
             tuple(tuple(ch) for ch in entry["pair"]),
             Surd.from_json(entry["cos"]))
            for entry in obj.get("angle_overrides", ()))
        return cls(graph, curves, overrides)


def _differential_matrix(graph: RibbonGraph, curves):
    """Rows = d(limit length) of each curve in de-coordinates (raw counts)."""
    E = graph.num_edges
    D = []
    for c in curves:
        counts = [Fraction(0)] * E
        for walk in c.components:
            for w in walk:
                counts[graph.edge_of[w]] += 1
        D.append(counts)
    return D


def asymptotic_form(chart: CellChart):
    """The matrix of Omega = -sum_{i<j} [X^{-1}]_{ij} dl_i ^ dl_j in de
    coordinates: M = -D^T X^{-1} D over Q(sqrt(5)).

    Only the restriction to ker A (the tangent space of the cell) is
    meaningful; use `form_on_kernel_basis` for the reduced form.
    """
    X = chart.intersection_matrix()
    try:
        Xinv = mat_inverse(X)
    except Exception as exc:
        raise ChartError(f"chart is degenerate: X is singular ({exc})") from exc
    D = _differential_matrix(chart.graph, chart.curves)
    m = len(D)
    E = chart.graph.num_edges
    M = [[Surd(0, 0, 5) for _ in range(E)] for _ in range(E)]
    for a in range(E):
        for b in range(E):
            acc = Surd(0, 0, 5)
            for i in range(m):
                if D[i][a] == 0:
                    continue
                for j in range(m):
                    if D[j][b] == 0:
                        continue
                    acc = acc + Xinv[i][j] * (D[i][a] * D[j][b])
            M[a][b] = -acc
    return M


def form_on_kernel_basis(chart: CellChart):
    """(V, G, volfactor): kernel basis of A, the Gram matrix of Omega on it,
    and the basis-to-Lebesgue conversion factor."""
    A = chart.graph.face_edge_matrix()
    V, volfactor = kernel_normalization(A)
    M = asymptotic_form(chart)
    G = restrict_form(M, [[Surd(x, 0, 5) for x in v] for v in V])
    return V, G, volfactor


def cell_volume_laplace(chart: CellChart) -> RationalFunction:
    """Laplace transform of the integral of the top power of Omega over the
    cell: (constant density) x (per-edge orthant product)."""
    V, G, volfactor = form_on_kernel_basis(chart)
    pf = pfaffian(G)
    if isinstance(pf, Surd):
        if not pf.is_rational:
            raise ChartError(f"cell density is irrational: {pf}")
        pf = pf.as_fraction()
    density = abs(pf) / volfactor
    n = chart.graph.num_faces
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    base = orthant_exponential_integral(chart.graph.face_edge_matrix(), svars)
    return base * density


def witten_cycle_intersections(charts, codim_pairs: int) -> dict:
    """Intersection numbers of a combinatorial cycle from its cell charts.

    `charts` carries one (chart, aut_order) per top cell of the cycle;
    `codim_pairs` is d in codimension 2d.  The Laplace total satisfies

      sum_a <W psi^a> prod (2a_k - 1)!! / s_k^{2a_k+1} = 2^{d'} * total,

    with d' = 3g - 3 + n - d, which is solved for the numbers <W psi^a>.
    """
    first = charts[0][0].graph
    g, n = first.genus, first.num_faces
    dprime = 3 * g - 3 + n - codim_pairs
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    total = RationalFunction.zero(svars)
    terms = []
    for chart, aut in charts:
        t = cell_volume_laplace(chart) * Fraction(1, aut)
        terms.append(t)
        total = total + t
    total = total.reduced()
    scaled = (total * Fraction(2) ** dprime).reduced()
    # scaled must be a pure co-monomial sum: numerator over prod s_k^{m_k}
    for f in scaled.den:
        if len(f) != 1:
            raise ChartError(
                f"cycle total does not reduce to psi form; factor {f} survives")
    mexp = [scaled.den.get((i,), 0) for i in range(n)]
    values = {}
    num = scaled.num.with_vars(svars)
    for exp, c in num.terms.items():
        alpha = []
        for i in range(n):
            down = mexp[i] - exp[i]
            if down < 1 or (down - 1) % 2:
                raise ChartError(f"monomial {exp} is not of psi shape")
            alpha.append((down - 1) // 2)
        alpha = tuple(alpha)
        if sum(alpha) != dprime:
            raise ChartError(f"exponent {alpha} has weight != {dprime}")
        dd = 1
        for a in alpha:
            dd *= double_factorial(2 * a - 1)
        values[alpha] = scaled.scalar * c / dd
    return {
        "g": g,
        "n": n,
        "codim_pairs": codim_pairs,
        "totals": total,
        "terms": terms,
        "intersections": values,
    }


# -- the (1,2) example cycle ---------------------------------------------------


def _charts_payload():
    ref = importlib.resources.files("ribbonvol.charts") / "witten12.json"
    return json.loads(ref.read_text())


def example5_charts():
    """The eight charts for the degree-(5,3) cells in type (1,2).

    Loaded from packaged data; returns (charts, lead_index) where each chart
    entry is (chart, aut_order) and the lead chart carries the documented
    curve system with the reference crossing matrix.
    """
    payload = _charts_payload()
    enumerated = enumerate_graphs(1, 2, [5, 3])
    canon = {g.canonical_form(): (g, a) for g, a in enumerated}
    out = []
    for entry in payload["charts"]:
        chart = CellChart.from_json(entry)
        key = chart.graph.canonical_form()
        if key not in canon:
            raise ChartError("packaged chart graph is not a (5,3) cell of type (1,2)")
        out.append((chart, canon[key][1]))
    if len(out) != len(enumerated):
        raise ChartError(f"expected {len(enumerated)} charts, found {len(out)}")
    keys = {c.graph.canonical_form() for c, _ in out}
    if len(keys) != len(out):
        raise ChartError("duplicate chart for the same cell")
    return out, payload["lead_index"]


def witten12_report() -> dict:
    """Run the full (1,2) one-vertex-of-degree-five pipeline."""
    charts, lead_index = example5_charts()
    result = witten_cycle_intersections(charts, codim_pairs=1)
    lead = charts[lead_index][0]
    X = lead.intersection_matrix()
    Xinv = mat_inverse(X)
    report = {
        "graphs": len(charts),
        "lead_chart": lead.to_json(),
        "lead_X": [[x.to_json() for x in row] for row in X],
        "lead_X_inverse": [[x.to_json() for x in row] for row in Xinv],
        "lead_term": str(result["terms"][lead_index]),
        "terms": [str(t) for t in result["terms"]],
        "total_laplace": str(result["totals"]),
        "intersections": {"psi1": str(result["intersections"].get((1, 0))),
                          "psi2": str(result["intersections"].get((0, 1)))},
    }
    return report
