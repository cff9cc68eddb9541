"""Independent brute-force oracle for small ribbon graph enumerations.

Fixes the dart set and the vertex rotation s0 (one cycle per vertex over
consecutive slot blocks), iterates over every fixed-point-free involution
s1 and every face labelling, and partitions the survivors into orbits of
the full relabelling group by explicit conjugation.  Nothing here is shared
with the package's enumeration path beyond elementary permutation algebra.
"""

import itertools
from math import factorial


def perm_cycles(p):
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        c = []
        d = s
        while not seen[d]:
            seen[d] = True
            c.append(d)
            d = p[d]
        out.append(tuple(c))
    return out


def faces_of(s0, s1):
    inv0 = [0] * len(s0)
    for i, j in enumerate(s0):
        inv0[j] = i
    return perm_cycles([inv0[s1[d]] for d in range(len(s0))])


def connected(s0, s1):
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for e in (s0[d], s1[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return len(seen) == len(s0)


def fixed_point_free_involutions(points):
    if not points:
        yield {}
        return
    first = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for sub in fixed_point_free_involutions(rest):
            pair = dict(sub)
            pair[first] = points[k]
            pair[points[k]] = first
            yield pair


def block_s0(degrees):
    starts = []
    base = 0
    for d in degrees:
        starts.append(base)
        base += d
    s0 = [0] * base
    for v, d in enumerate(degrees):
        for k in range(d):
            s0[starts[v] + k] = starts[v] + (k + 1) % d
    return tuple(s0)


def labelled_structures(g, n, degrees):
    """All (s0, s1, labels) with the blocked s0, as explicit tuples."""
    degrees = sorted(degrees, reverse=True)
    s0 = block_s0(degrees)
    N = len(s0)
    found = []
    for inv in fixed_point_free_involutions(list(range(N))):
        s1 = tuple(inv[d] for d in range(N))
        if not connected(s0, s1):
            continue
        faces = sorted(faces_of(s0, s1), key=min)
        if len(faces) != n:
            continue
        V, E = len(degrees), N // 2
        if V - E + n != 2 - 2 * g:
            continue
        for labels in itertools.permutations(range(1, n + 1)):
            found.append((s0, s1, labels))
    return found


def conjugate(struct, pi):
    """Relabel darts of (s0, s1, labels) by the permutation pi."""
    s0, s1, labels = struct
    N = len(s0)
    t0 = [0] * N
    t1 = [0] * N
    for d in range(N):
        t0[pi[d]] = pi[s0[d]]
        t1[pi[d]] = pi[s1[d]]
    faces = sorted(faces_of(s0, s1), key=min)
    new_faces = sorted(faces_of(t0, t1), key=min)
    label_of_dart = {}
    for f, lab in zip(faces, labels):
        for d in f:
            label_of_dart[pi[d]] = lab
    new_labels = tuple(label_of_dart[min(f)] for f in new_faces)
    return (tuple(t0), tuple(t1), new_labels)


def orbit_classes(g, n, degrees):
    """Isomorphism classes with |Aut|, by explicit orbit partition.

    Only feasible for 6 darts (the relabelling group has size 720).
    """
    structs = labelled_structures(g, n, degrees)
    N = 2 * (sum(degrees) // 2)
    group = list(itertools.permutations(range(N)))
    pool = set(structs)
    classes = []
    while pool:
        rep = min(pool)
        orbit = {conjugate(rep, pi) for pi in group} & pool
        pool -= orbit
        classes.append((rep, _aut_order(rep, group)))
    return classes


def _aut_order(struct, group):
    return sum(1 for pi in group if conjugate(struct, pi) == struct)


def total_labelled_structures(g, n, degrees):
    """Number of valid (s0, s1, labels) triples on a fixed dart set.

    Counts completions of one blocked s0 and multiplies by the number of
    permutations with that cycle type; by orbit counting this must equal
    the enumeration's sum of (2E)!/|Aut| over classes.
    """
    structs = labelled_structures(g, n, degrees)
    deg = sorted(degrees, reverse=True)
    N = sum(deg)
    stab = 1
    for d in deg:
        stab *= d
    for d in set(deg):
        stab *= factorial(deg.count(d))
    n_s0 = factorial(N) // stab
    return n_s0 * len(structs)
