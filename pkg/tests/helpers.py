"""Shared builders and independent oracles for the test suite.

Builders are cached per type so large algebras are constructed once per
session.  The oracles here are deliberately written against different
models than the package: dense fraction-free elimination for ranks, and
Euclidean-coordinate constructions of the classical root systems.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from minorbit.chevalley import LieAlgebra, SplitCasimir, build_chevalley, split_casimir
from minorbit.rootsys import RootSystem, SimpleType, build_root_system


@lru_cache(maxsize=None)
def rs_of(family: str, rank: int) -> RootSystem:
    return build_root_system(SimpleType(family, rank))


@lru_cache(maxsize=None)
def algebra_of(family: str, rank: int) -> LieAlgebra:
    return build_chevalley(rs_of(family, rank))


@lru_cache(maxsize=None)
def casimir_of(family: str, rank: int) -> SplitCasimir:
    return split_casimir(algebra_of(family, rank))


# -- dense rank oracle -------------------------------------------------------

def _int_row(row) -> list[int]:
    denom = 1
    for x in row:
        f = Fraction(x)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    out = [int(Fraction(x) * denom) for x in row]
    g = 0
    for x in out:
        g = gcd(g, abs(x))
    if g > 1:
        out = [x // g for x in out]
    return out


def dense_rank(rows) -> int:
    """Rank by dense fraction-free row elimination over the integers."""
    rows = [_int_row(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for r in range(rank + 1, len(rows)):
            x = rows[r][col]
            if x:
                new = [p * a - x * b for a, b in zip(rows[r], prow)]
                g = 0
                for v in new:
                    g = gcd(g, abs(v))
                if g > 1:
                    new = [v // g for v in new]
                rows[r] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- Euclidean root models ---------------------------------------------------

def _solve(cols: list[tuple], v: tuple) -> tuple:
    """Solve M x = v exactly, where M has the given columns."""
    n = len(v)
    a = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = Fraction(1) / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(a[r][n] for r in range(n))


def _in_simple_basis(simple: list[tuple], roots: list[tuple]) -> set:
    """Positive roots in simple-root coordinates: the nonnegative integer solutions."""
    out = set()
    for v in roots:
        x = _solve(simple, v)
        if all(c.denominator == 1 for c in x):
            c = tuple(int(ci) for ci in x)
            if all(ci >= 0 for ci in c) and any(c):
                out.add(c)
    return out


def a_positive_roots(n: int) -> set:
    """Type A_n positive roots: contiguous all-ones blocks of coordinates."""
    out = set()
    for i in range(n):
        for j in range(i, n):
            out.add(tuple(1 if i <= k <= j else 0 for k in range(n)))
    return out


def d_positive_roots(n: int) -> set:
    """Type D_n positive roots from the Euclidean model e_i -+ e_j."""
    simple = [tuple(Fraction(int(k == i) - int(k == i + 1)) for k in range(n)) for i in range(n - 1)]
    simple.append(tuple(Fraction(int(k >= n - 2)) for k in range(n)))
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                roots.append(tuple(Fraction(int(k == i) + s * int(k == j)) for k in range(n)))
                roots.append(tuple(-x for x in roots[-1]))
    return _in_simple_basis(simple, roots)


def e8_positive_roots() -> set:
    """E8 positive roots from the even-coordinate Euclidean model."""
    half = Fraction(1, 2)
    simple = [
        (half, -half, -half, -half, -half, -half, -half, half),
        (1, 1, 0, 0, 0, 0, 0, 0),
        (-1, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 1, 0, 0, 0, 0, 0),
        (0, 0, -1, 1, 0, 0, 0, 0),
        (0, 0, 0, -1, 1, 0, 0, 0),
        (0, 0, 0, 0, -1, 1, 0, 0),
        (0, 0, 0, 0, 0, -1, 1, 0),
    ]
    simple = [tuple(Fraction(x) for x in v) for v in simple]
    roots = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Fraction(0)] * 8
                    v[i] = Fraction(si)
                    v[j] = Fraction(sj)
                    roots.append(tuple(v))
    for bits in range(256):
        signs = [1 if bits & (1 << k) else -1 for k in range(8)]
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(half * s for s in signs))
    return _in_simple_basis(simple, roots)
