"""Volume polynomials of the combinatorial moduli space and psi-class numbers.

`kontsevich_volume(g, n)` returns the polynomial W_{g,n}(L_1..L_n): the
product of the perimeters times the top-power volume of the moduli space of
metric ribbon graphs with boundary lengths L.  It is computed by the
boundary-splitting recursion from the base cases

    W_{0,3} = L1 L2 L3,        W_{1,1} = L1^3 / 48,

with the unstable conventions W_{0,1} = W_{0,2} = 0.  The coefficients of
W_{g,n} carry the psi-class intersection numbers on the compactified moduli
space of curves:

    <psi_1^a1 ... psi_n^an> = [L^{2a+1}] W_{g,n} * 2^{3g-3+n} * prod(a_k!).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exact import Poly, RationalFunction, double_factorial, poly_integrate

__all__ = [
    "base_case",
    "is_stable",
    "kontsevich_volume",
    "psi_numbers",
    "lhs_laplace",
    "wp_volume_asymptotic",
    "NotABaseCase",
    "UnstableInput",
]


class NotABaseCase(ValueError):
    pass


class UnstableInput(ValueError):
    pass


def is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 1 and 2 - 2 * g - n < 0


def _L(i: int) -> str:
    return f"L{i}"


def base_case(g: int, n: int) -> Poly:
    if (g, n) == (0, 3):
        out = Poly.const(1, ())
        for i in (1, 2, 3):
            out = out * Poly.variable(_L(i))
        return out
    if (g, n) == (1, 1):
        return Poly((_L(1),), {(3,): Fraction(1, 48)})
    raise NotABaseCase(f"({g},{n}) is not a base case")


def _W(g: int, n: int, names) -> Poly:
    """W_{g,n} with the variables renamed to `names` (length n)."""
    if 2 - 2 * g - n >= 0:
        return Poly.zero(())  # unstable: identically zero inside the recursion
    W = kontsevich_volume(g, n)
    return W.rename({_L(i + 1): names[i] for i in range(n)})


@lru_cache(maxsize=None)
def kontsevich_volume(g: int, n: int) -> Poly:
    """The polynomial W_{g,n}(L1..Ln), homogeneous of degree 6g-6+3n."""
    if not is_stable(g, n):
        raise UnstableInput(f"({g},{n}) is unstable")
    if (g, n) in ((0, 3), (1, 1)):
        return base_case(g, n)

    # recurse on the boundary labelled 1; the rest are the index set S
    L0 = _L(1)
    S = list(range(2, n + 1))
    x, y = "_x", "_y"
    P0 = Poly.variable(L0)
    Px = Poly.variable(x)
    Py = Poly.variable(y)
    total = Poly.zero(())

    # boundary terms: join boundary 1 with boundary k
    for k in S:
        rest = [_L(i) for i in S if i != k]
        Wk = _W(g, n - 1, tuple([x] + rest))
        Lk = Poly.variable(_L(k))
        inner1 = (P0 - Px) * Wk
        part1 = poly_integrate(inner1, x, Poly.const(0), P0 - Lk)
        inner2 = (P0 + Lk - Px) * Wk / 2
        part2 = poly_integrate(inner2, x, P0 - Lk, P0 + Lk)
        total = total + Lk * (part1 + part2)

    # splitting terms: remove a pair of pants containing boundary 1
    kernel = (P0 - Px - Py) / 2
    bulk = _W(g - 1, n + 1, tuple([x, y] + [_L(i) for i in S])) if g >= 1 else Poly.zero(())
    for g1 in range(0, g + 1):
        g2 = g - g1
        for r in range(0, len(S) + 1):
            for I1 in itertools.combinations(S, r):
                I2 = tuple(i for i in S if i not in I1)
                if not (is_stable(g1, len(I1) + 1) and is_stable(g2, len(I2) + 1)):
                    continue  # W_{0,1} = W_{0,2} = 0 kill these splittings
                W1 = _W(g1, len(I1) + 1, tuple([x] + [_L(i) for i in I1]))
                W2 = _W(g2, len(I2) + 1, tuple([y] + [_L(i) for i in I2]))
                bulk = bulk + W1 * W2
    if not bulk.is_zero():
        inner = poly_integrate(kernel * bulk, x, Poly.const(0), P0 - Py)
        total = total + poly_integrate(inner, y, Poly.const(0), P0)

    vars = tuple(_L(i) for i in range(1, n + 1))
    W = total.with_vars(vars)
    deg = 6 * g - 6 + 3 * n
    if not W.is_homogeneous(deg):
        raise AssertionError(f"W_{{{g},{n}}} is not homogeneous of degree {deg}")
    return W


def psi_numbers(g: int, n: int) -> dict:
    """Map from exponent tuples a (|a| = 3g-3+n) to <psi^a> in Q."""
    if not is_stable(g, n):
        raise UnstableInput(f"({g},{n}) is unstable")
    W = kontsevich_volume(g, n)
    d = 3 * g - 3 + n
    scale = Fraction(2) ** d
    out = {}
    for alpha in _compositions(d, n):
        exp = tuple(2 * a + 1 for a in alpha)
        c = W.coefficient(exp)
        fact = 1
        for a in alpha:
            for t in range(2, a + 1):
                fact *= t
        out[alpha] = c * scale * fact
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def lhs_laplace(g: int, n: int) -> RationalFunction:
    """Sum over |a| = 3g-3+n of <psi^a> prod (2a_k-1)!! / s_k^{2a_k+1}."""
    psi = psi_numbers(g, n)
    svars = tuple(f"s{i}" for i in range(1, n + 1))
    d = 3 * g - 3 + n
    den = {(i,): 2 * d + 1 for i in range(n)}
    terms = {}
    for alpha, val in psi.items():
        if val == 0:
            continue
        coef = val
        for a in alpha:
            coef *= double_factorial(2 * a - 1)
        exp = tuple(2 * d + 1 - (2 * a + 1) for a in alpha)
        terms[exp] = terms.get(exp, 0) + coef
    num = Poly(svars, terms)
    return RationalFunction(svars, 1, num, den).reduced()


def wp_volume_asymptotic(g: int, n: int) -> Poly:
    """The degree-(6g-6+2n) polynomial lim V_{g,n}(N x)/N^{6g-6+2n} in x.

    Equals W_{g,n} divided by the product of the perimeters, with L renamed
    to x; its coefficients are <psi^a> / (2^{3g-3+n} prod a_k!).
    """
    W = kontsevich_volume(g, n)
    terms = {}
    for exp, c in W.terms.items():
        if any(e < 1 for e in exp):
            raise AssertionError("W_{g,n} has a monomial missing some L_k")
        terms[tuple(e - 1 for e in exp)] = c
    return Poly(tuple(f"x{i}" for i in range(1, n + 1)), terms)
