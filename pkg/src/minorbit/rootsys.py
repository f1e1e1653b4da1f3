"""ADE root systems in exact arithmetic.

Roots are integer vectors in simple-root coordinates and weights are
integer vectors in fundamental-weight coordinates.  The invariant form
is normalized so that every root has squared length 2; under that
normalization the Gram matrix of the simple roots is the Cartan matrix,
so root-root pairings are integers and weight-weight pairings are
rationals obtained from the inverse Cartan matrix.

Simple roots are numbered as in Bourbaki.  Positive roots are ordered
by height and then lexicographically, which fixes every downstream
basis order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

__all__ = [
    "InvariantViolation",
    "SimpleType",
    "Root",
    "Weight",
    "RootSystem",
    "cartan_matrix",
    "dynkin_edges",
    "dim_of_type",
    "positive_root_count",
    "build_root_system",
    "root_to_weight",
    "pairing",
    "weyl_dim",
]


class InvariantViolation(RuntimeError):
    """A construction-time self-check failed: the build is wrong, not the input."""


@dataclass(frozen=True)
class SimpleType:
    """A simply laced simple type: family A, D or E plus a rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family == "A":
            if self.rank < 1:
                raise ValueError(f"family A requires rank >= 1, got {self.rank}")
        elif self.family == "D":
            if self.rank < 4:
                raise ValueError(f"family D requires rank >= 4, got {self.rank}")
        elif self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError(f"family E requires rank in {{6, 7, 8}}, got {self.rank}")
        else:
            raise ValueError(f"unknown family {self.family!r}, expected one of A, D, E")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def dim_of_type(t: SimpleType) -> int:
    """Dimension of the simple Lie algebra of type t."""
    n = t.rank
    if t.family == "A":
        return n * (n + 2)
    if t.family == "D":
        return n * (2 * n - 1)
    return {6: 78, 7: 133, 8: 248}[n]


def positive_root_count(t: SimpleType) -> int:
    """Closed-form count of positive roots for type t."""
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]


def dynkin_edges(t: SimpleType) -> tuple[tuple[int, int], ...]:
    """Edges of the Dynkin diagram, 0-based, Bourbaki numbering."""
    n = t.rank
    if t.family == "A":
        return tuple((i, i + 1) for i in range(n - 1))
    if t.family == "D":
        # Chain 1..n-2 with both n-1 and n attached to n-2.
        chain = [(i, i + 1) for i in range(n - 3)]
        return tuple(chain + [(n - 3, n - 2), (n - 3, n - 1)])
    # E family: chain 1-3-4-...-n with node 2 attached to node 4.
    chain = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return tuple(chain + [(1, 3)])


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix: 2 on the diagonal, -1 across each Dynkin edge."""
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in dynkin_edges(t):
        c[i][j] = c[j][i] = -1
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True)
class Root:
    """A root, as integer coordinates in the simple-root basis."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))


@dataclass(frozen=True)
class Weight:
    """A weight, as integer coordinates in the fundamental-weight basis."""

    coords: tuple[int, ...]

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> "Weight":
        return Weight(tuple(k * c for c in self.coords))


@dataclass(frozen=True)
class RootSystem:
    """Root data for one ADE type, immutable after construction.

    ``form`` is the Gram matrix of the simple roots (equal to the Cartan
    matrix in the simply laced normalization) and ``form_inverse`` is
    the Gram matrix of the fundamental weights.
    """

    simple_type: SimpleType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    rho: Weight
    form: tuple[tuple[int, ...], ...]
    form_inverse: tuple[tuple[Fraction, ...], ...]
    root_index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def dim_g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)


def _invert(mat: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix by Gauss-Jordan."""
    n = len(mat)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def build_root_system(t: SimpleType) -> RootSystem:
    """Enumerate the positive roots of type t and package the root data.

    Starting from the simple roots, each height layer is extended by
    adding simple roots, keeping a candidate u + alpha_i exactly when
    the alpha_i-string through u continues upward (p - <u, alpha_i^vee>
    positive, with p counted by walking down through known roots).
    """
    c = cartan_matrix(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layers = [sorted(simple)]
    layer = layers[0]
    while layer:
        nxt = []
        for u in layer:
            for i in range(n):
                v = list(u)
                v[i] += 1
                v = tuple(v)
                if v in known:
                    continue
                p = 0
                w = list(u)
                while True:
                    w[i] -= 1
                    if tuple(w) in known:
                        p += 1
                    else:
                        break
                pair = sum(c[i][j] * u[j] for j in range(n))
                if p - pair > 0:
                    known.add(v)
                    nxt.append(v)
        layer = sorted(nxt)
        if layer:
            layers.append(layer)

    ordered = [v for lay in layers for v in lay]
    count = positive_root_count(t)
    if len(ordered) != count:
        raise InvariantViolation(
            f"{t}: enumerated {len(ordered)} positive roots, expected {count}"
        )
    if 2 * count + n != dim_of_type(t):
        raise InvariantViolation(f"{t}: root count does not match dim g")

    for u in ordered:
        norm = sum(u[i] * c[i][j] * u[j] for i in range(n) for j in range(n))
        if norm != 2:
            raise InvariantViolation(f"{t}: root {u} has squared length {norm}, not 2")

    theta = ordered[-1]
    if len(ordered) > 1 and sum(ordered[-2]) == sum(theta):
        raise InvariantViolation(f"{t}: highest root is not unique by height")
    fw = tuple(sum(c[i][j] * theta[j] for j in range(n)) for i in range(n))
    if any(x < 0 for x in fw):
        raise InvariantViolation(f"{t}: highest root is not dominant")
    for u in ordered:
        if any(a < b for a, b in zip(theta, u)):
            raise InvariantViolation(f"{t}: {u} is not below the highest root")

    roots = tuple(Root(u) for u in ordered)
    return RootSystem(
        simple_type=t,
        cartan_matrix=c,
        positive_roots=roots,
        highest_root=roots[-1],
        rho=Weight((1,) * n),
        form=c,
        form_inverse=_invert(c),
        root_index={u: i for i, u in enumerate(ordered)},
    )


def root_to_weight(rs: RootSystem, r: Root) -> Weight:
    """Coordinates of a root in the fundamental-weight basis (Cartan matrix times coords)."""
    c = rs.cartan_matrix
    n = rs.rank
    return Weight(tuple(sum(c[i][j] * r.coords[j] for j in range(n)) for i in range(n)))


def pairing(rs: RootSystem, a: Union[Root, Weight], b: Union[Root, Weight]) -> Fraction:
    """Normalized invariant form (a, b), with (alpha, alpha) = 2 on roots.

    Accepts any mix of Root and Weight.  A root paired with a weight is
    just the dot product of their coordinate vectors, since the two
    bases are dual up to the Cartan matrix.
    """
    n = rs.rank
    if len(a.coords) != n or len(b.coords) != n:
        raise ValueError(f"coordinate length must be {n}")
    ra, rb = isinstance(a, Root), isinstance(b, Root)
    if ra and rb:
        c = rs.form
        return Fraction(
            sum(a.coords[i] * c[i][j] * b.coords[j] for i in range(n) for j in range(n))
        )
    if ra != rb:
        return Fraction(sum(x * y for x, y in zip(a.coords, b.coords)))
    ci = rs.form_inverse
    return sum(
        a.coords[i] * ci[i][j] * b.coords[j] for i in range(n) for j in range(n)
    ) + Fraction(0)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight lam.

    Evaluates the product over positive roots of (lam + rho, alpha)
    divided by (rho, alpha); both factors are integer dot products in
    our coordinates, and the quotient is checked to be exact.
    """
    if len(lam.coords) != rs.rank:
        raise ValueError(f"weight length must be {rs.rank}")
    if not lam.is_dominant:
        raise ValueError(f"weight {lam.coords} is not dominant")
    shifted = [x + 1 for x in lam.coords]
    num = 1
    den = 1
    for beta in rs.positive_roots:
        num *= sum(s * u for s, u in zip(shifted, beta.coords))
        den *= beta.height
    if num % den:
        raise InvariantViolation("Weyl dimension product is not an integer")
    return num // den
