"""Ribbon graphs as permutation pairs on half-edges.

A ribbon graph is a pair of permutations on the set {0, ..., 2E-1} of
half-edges (darts): `s0` rotates the darts at each vertex anticlockwise and
`s1` swaps the two darts of each edge.  Faces are the cycles of
`s2 = s0^{-1} s1` and carry labels 1..n.  Vertices must have degree >= 3,
`s1` must be fixed-point free, and the graph must be connected.

The enumerator produces exactly one representative per label-preserving
isomorphism class together with the automorphism group order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "RibbonGraph",
    "InvalidRibbonGraph",
    "UnsupportedGraph",
    "enumerate_graphs",
    "enumerate_trivalent",
    "B_SIGN",
]

# Global orientation constant for the oriented edge-adjacency matrix B:
# the local rule at each vertex is  B[edge(h), edge(s0 h)] += B_SIGN.
# The sign is pinned by the requirement that the limiting multicurve
# intersection matrix equals -2B on trivalent graphs (see wittencycle).
B_SIGN = 1


class InvalidRibbonGraph(ValueError):
    pass


class UnsupportedGraph(ValueError):
    pass


def _perm_cycles(p):
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = p[d]
        cycles.append(tuple(cyc))
    return cycles


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


@dataclass(frozen=True)
class RibbonGraph:
    s0: tuple
    s1: tuple
    face_labels: tuple  # label of each s2-cycle, cycles ordered by minimal dart

    def __post_init__(self):
        s0, s1 = tuple(self.s0), tuple(self.s1)
        N = len(s0)
        object.__setattr__(self, "s0", s0)
        object.__setattr__(self, "s1", s1)
        object.__setattr__(self, "face_labels", tuple(self.face_labels))
        if len(s1) != N or sorted(s0) != list(range(N)) or sorted(s1) != list(range(N)):
            raise InvalidRibbonGraph("s0 and s1 must be permutations of the same dart set")
        if N == 0 or N % 2:
            raise InvalidRibbonGraph("need a positive even number of half-edges")
        for d in range(N):
            if s1[d] == d or s1[s1[d]] != d:
                raise InvalidRibbonGraph("s1 must be a fixed-point-free involution")
        for cyc in _perm_cycles(s0):
            if len(cyc) < 3:
                raise InvalidRibbonGraph(f"vertex of degree {len(cyc)} < 3")
        # connectivity under <s0, s1>
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (s0[d], s1[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        if len(seen) != N:
            raise InvalidRibbonGraph("graph is not connected")
        faces = self.faces()
        labels = self.face_labels
        if sorted(labels) != list(range(1, len(faces) + 1)):
            raise InvalidRibbonGraph(
                f"face labels must be a bijection onto 1..{len(faces)}, got {labels}")
        if (2 - self.num_vertices + self.num_edges - self.num_faces) % 2:
            raise InvalidRibbonGraph("odd Euler characteristic defect: corrupted permutations")
        if self.genus < 0:
            raise InvalidRibbonGraph("negative genus: corrupted permutations")

    # -- basic structure -----------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.s0)

    @property
    def num_edges(self) -> int:
        return len(self.s0) // 2

    @cached_property
    def vertices(self):
        return tuple(_perm_cycles(list(self.s0)))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self):
        """Dart pairs, ordered by minimal dart; index = edge index."""
        return tuple(sorted((min(d, self.s1[d]), max(d, self.s1[d]))
                            for d in range(self.num_darts) if d < self.s1[d]))

    @cached_property
    def edge_of(self):
        out = [0] * self.num_darts
        for k, (a, b) in enumerate(self.edges):
            out[a] = out[b] = k
        return tuple(out)

    @cached_property
    def vertex_of(self):
        out = [0] * self.num_darts
        for v, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = v
        return tuple(out)

    def faces(self):
        """Cycles of s2 = s0^{-1} s1, ordered by minimal dart."""
        inv0 = _inverse(list(self.s0))
        s2 = [inv0[self.s1[d]] for d in range(self.num_darts)]
        return sorted(_perm_cycles(s2), key=min)

    @cached_property
    def _faces(self):
        return tuple(self.faces())

    @property
    def num_faces(self) -> int:
        return len(self._faces)

    @cached_property
    def face_of(self):
        out = [0] * self.num_darts
        for i, cyc in enumerate(self._faces):
            for d in cyc:
                out[d] = i
        return tuple(out)

    def label_of_face(self, face_index: int) -> int:
        return self.face_labels[face_index]

    @property
    def genus(self) -> int:
        chi = self.num_vertices - self.num_edges + self.num_faces
        if (2 - chi) % 2:
            raise InvalidRibbonGraph("half-integer genus")
        return (2 - chi) // 2

    @cached_property
    def degree_sequence(self):
        return tuple(sorted((len(c) for c in self.vertices), reverse=True))

    @property
    def is_trivalent(self) -> bool:
        return all(len(c) == 3 for c in self.vertices)

    # -- structural matrices ---------------------------------------------------

    def face_edge_matrix(self):
        """n x E integer matrix; entry (i, e) counts sides of edge e on the
        face labelled i+1.  Columns sum to 2 and A e = x gives perimeters."""
        n, E = self.num_faces, self.num_edges
        A = [[0] * E for _ in range(n)]
        for fi, cyc in enumerate(self._faces):
            row = self.face_labels[fi] - 1
            for d in cyc:
                A[row][self.edge_of[d]] += 1
        return A

    def oriented_adjacency(self):
        """The skew-symmetric oriented edge-adjacency matrix B (trivalent only).

        Local rule at every vertex: for each dart h with h' = s0(h),
        add B_SIGN to B[edge(h), edge(h')] and subtract it from the mirror
        entry.  Contributions from loops and multiple edges accumulate and
        may cancel.
        """
        if not self.is_trivalent:
            raise UnsupportedGraph("oriented adjacency is defined for trivalent graphs")
        E = self.num_edges
        B = [[0] * E for _ in range(E)]
        for h in range(self.num_darts):
            a = self.edge_of[h]
            b = self.edge_of[self.s0[h]]
            B[a][b] += B_SIGN
            B[b][a] -= B_SIGN
        return B

    # -- canonical form and automorphisms ---------------------------------------

    def _encode_from(self, root: int):
        """Breadth-first relabelling rooted at `root`; deterministic encoding."""
        N = self.num_darts
        new = [-1] * N
        order = []
        new[root] = 0
        order.append(root)
        head = 0
        while head < len(order):
            d = order[head]
            head += 1
            for nxt in (self.s0[d], self.s1[d]):
                if new[nxt] < 0:
                    new[nxt] = len(order)
                    order.append(nxt)
        s0p = [0] * N
        s1p = [0] * N
        for d in range(N):
            s0p[new[d]] = new[self.s0[d]]
            s1p[new[d]] = new[self.s1[d]]
        # face labels in the relabelled graph, faces sorted by minimal new dart
        faces = sorted(((min(new[d] for d in cyc), i)
                        for i, cyc in enumerate(self._faces)))
        labels = tuple(self.face_labels[i] for _, i in faces)
        return (tuple(s0p), tuple(s1p), labels)

    @cached_property
    def _canonical(self):
        best = None
        count = 0
        for root in range(self.num_darts):
            enc = self._encode_from(root)
            if best is None or enc < best:
                best = enc
                count = 1
            elif enc == best:
                count += 1
        return best, count

    def canonical_form(self):
        return self._canonical[0]

    def canonical(self) -> "RibbonGraph":
        s0, s1, labels = self.canonical_form()
        return RibbonGraph(s0, s1, labels)

    def automorphism_group_order(self) -> int:
        """Half-edge bijections commuting with s0, s1 and preserving labels.

        Any such map is determined by the image of one dart (the centraliser
        of a transitive action is semiregular), so the count equals the
        number of roots realising the canonical encoding.
        """
        return self._canonical[1]

    def is_isomorphic(self, other: "RibbonGraph") -> bool:
        return self.canonical_form() == other.canonical_form()

    # -- serialisation ------------------------------------------------------------

    def to_json(self):
        return {
            "v": 1,
            "half_edges": self.num_darts,
            "s0": list(self.s0),
            "s1": list(self.s1),
            "face_labels": list(self.face_labels),
        }

    @classmethod
    def from_json(cls, obj) -> "RibbonGraph":
        if obj.get("v") != 1:
            raise InvalidRibbonGraph(f"unsupported graph schema version {obj.get('v')!r}")
        if obj["half_edges"] != len(obj["s0"]):
            raise InvalidRibbonGraph("half_edges field disagrees with s0 length")
        return cls(tuple(obj["s0"]), tuple(obj["s1"]), tuple(obj["face_labels"]))

    def describe(self) -> str:
        return (f"RibbonGraph(V={self.num_vertices}, E={self.num_edges}, "
                f"n={self.num_faces}, g={self.genus}, degrees={self.degree_sequence})")


# -- enumeration ------------------------------------------------------------------


def _search_pairings(degrees):
    """Yield complete pairings of vertex slots, one per quasi-canonical DFS path.

    Vertices are blocks of consecutive slots; s0 rotates inside each block.
    The smallest unpaired slot is matched against unpaired slots of already
    used vertices, or against the first slot of the first unused vertex of
    each distinct degree; this reaches every connected isomorphism class
    (final deduplication is by canonical form).
    """
    starts = []
    base = 0
    for deg in degrees:
        starts.append(base)
        base += deg
    N = base
    vertex_at = [0] * N
    for v, s in enumerate(starts):
        for k in range(degrees[v]):
            vertex_at[s + k] = v
    partner = [-1] * N
    used = [False] * len(degrees)
    used[0] = True

    def rec(next_free):
        s = next_free
        while s < N and partner[s] >= 0:
            s += 1
        if s == N:
            yield tuple(partner)
            return
        if not used[vertex_at[s]]:
            return  # used component closed while vertices remain: disconnected
        cands = [t for t in range(s + 1, N)
                 if partner[t] < 0 and used[vertex_at[t]]]
        fresh = []
        seen_deg = set()
        for v in range(len(degrees)):
            if not used[v] and degrees[v] not in seen_deg:
                seen_deg.add(degrees[v])
                fresh.append(starts[v])
        for t in cands + fresh:
            v = vertex_at[t]
            opened = not used[v]
            used[v] = True
            partner[s], partner[t] = t, s
            yield from rec(s + 1)
            partner[s] = partner[t] = -1
            if opened:
                used[v] = False

    yield from rec(0)


def _faces_of(s0, s1):
    inv0 = _inverse(list(s0))
    s2 = [inv0[s1[d]] for d in range(len(s0))]
    return _perm_cycles(s2)


def _encode_pair(s0, s1, root):
    """BFS relabelling of a bare (s0, s1) pair from `root`."""
    N = len(s0)
    new = [-1] * N
    order = [root]
    new[root] = 0
    head = 0
    while head < len(order):
        d = order[head]
        head += 1
        for nxt in (s0[d], s1[d]):
            if new[nxt] < 0:
                new[nxt] = len(order)
                order.append(nxt)
    s0p = [0] * N
    s1p = [0] * N
    for d in range(N):
        s0p[new[d]] = new[s0[d]]
        s1p[new[d]] = new[s1[d]]
    return (tuple(s0p), tuple(s1p))


def _canonical_pair(s0, s1):
    return min(_encode_pair(s0, s1, r) for r in range(len(s0)))


def enumerate_graphs(g: int, n: int, degrees) -> list:
    """All ribbon graphs of type (g, n) with the given vertex degree multiset.

    Returns `[(graph, aut_order), ...]`, one canonical representative per
    label-preserving isomorphism class, deterministically ordered.  An
    inconsistent (g, n, degrees) combination yields the empty list.
    """
    import itertools

    degrees = sorted(degrees, reverse=True)
    if not degrees or any(d < 3 for d in degrees):
        return []
    if sum(degrees) % 2:
        return []
    E = sum(degrees) // 2
    V = len(degrees)
    if V - E + n != 2 - 2 * g or 2 - 2 * g - n >= 0:
        return []

    starts = []
    base = 0
    for deg in degrees:
        starts.append(base)
        base += deg
    s0 = tuple(starts[v] + (k + 1) % deg
               for v, deg in enumerate(degrees) for k in range(deg))

    threads = int(os.environ.get("MODULI_THREADS", "1") or "1")
    unlabeled = {}

    def consume(s1):
        # face count n forces genus g here since V and E are already fixed
        if len(_faces_of(s0, s1)) != n:
            return
        unlabeled.setdefault(_canonical_pair(s0, s1), None)

    pairings = _search_pairings(degrees)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for _ in pool.map(consume, list(pairings)):
                pass
    else:
        for s1 in pairings:
            consume(s1)

    classes = {}
    for s0k, s1k in sorted(unlabeled):
        for labels in itertools.permutations(range(1, n + 1)):
            graph = RibbonGraph(s0k, s1k, labels)
            key = graph.canonical_form()
            if key not in classes:
                classes[key] = graph.automorphism_group_order()

    out = []
    for key in sorted(classes):
        s0k, s1k, labels = key
        out.append((RibbonGraph(s0k, s1k, labels), classes[key]))
    return out


def enumerate_trivalent(g: int, n: int) -> list:
    """Trivalent graphs of type (g, n): the top-dimensional cells."""
    E = 6 * g - 6 + 3 * n
    if E <= 0:
        return []
    return enumerate_graphs(g, n, [3] * (2 * E // 3))
