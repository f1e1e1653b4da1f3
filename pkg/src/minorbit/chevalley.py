"""Chevalley bases with integer structure constants.

The basis of g is E(alpha), F(alpha) for positive roots alpha and H(i)
for the simple coroots.  Signs of root-root brackets come from a
bimultiplicative cocycle on the root lattice determined by an
orientation of the Dynkin diagram: eps(alpha, beta) = (-1)^(u^T B v)
in simple-root coordinates, where B has ones on the diagonal and a one
at (i, j) for each edge crossed in the chosen direction.  With

    E(a) = e_a,   F(a) = -e_(-a),   H(i) = a_i^vee

the brackets are

    [e_a, e_b] = eps(a, b) e_(a+b)     when a + b is a root,
    [e_a, e_(-a)] = -a^vee,

which yields [E(a), F(a)] = a^vee and the familiar sl2 triples on the
simple roots.  The invariant form puts form(E(a), F(a)) = 1 and
form(H(i), H(j)) equal to the Cartan matrix, matching the root
normalization (a, a) = 2.

The split Casimir is the sum over the basis of ad(x_a) tensor ad(x^a)
with x^a the form-dual basis.  On the symmetric square, realized with
monomial basis x_p x_q for p <= q, it acts column by column as

    Omega(x_p x_q) = sum_a (ad(x_a) x_p) (ad(x^a) x_q),

where the Cartan part of the sum collapses to the weight pairing
(wt(x_p), wt(x_q)) times the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .linalgx import SparseMatrix, SparseVec
from .rootsys import InvariantViolation, Root, RootSystem, root_to_weight, pairing

__all__ = [
    "BasisIndex",
    "LieAlgebra",
    "SplitCasimir",
    "build_chevalley",
    "adjoint_matrix",
    "split_casimir",
    "casimir_top_eigenvalue",
    "sym2_dim",
    "sym2_index",
    "sym2_unrank",
    "sym2_pairs",
]


@dataclass(frozen=True)
class BasisIndex:
    """One basis element of g: kind 'e', 'f' (a root vector) or 'h' (a coroot)."""

    kind: str
    pos: int
    root: Optional[Root] = None
    cartan: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "h":
            return f"H({self.cartan + 1})"
        return f"{self.kind.upper()}{self.root.coords}"


class LieAlgebra:
    """Bracket table, invariant form and weight data over a Chevalley basis.

    Basis positions are laid out as all E(alpha), then all F(alpha) in
    the positive-root order, then H(1)..H(rank).  Immutable in practice:
    nothing mutates the tables after construction.
    """

    def __init__(self, rs, basis, brackets, form_on_g, weights_fw):
        self.rs = rs
        self.basis = basis
        self.brackets = brackets
        self.form_on_g = form_on_g
        self.weights_fw = weights_fw

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def npos(self) -> int:
        return len(self.rs.positive_roots)

    def e_index(self, r: int) -> int:
        return r

    def f_index(self, r: int) -> int:
        return self.npos + r

    def h_index(self, i: int) -> int:
        return 2 * self.npos + i

    def bracket(self, i: int, j: int) -> tuple:
        """[x_i, x_j] as a tuple of (position, integer coefficient)."""
        return self.brackets.get((i, j), ())

    def ad_apply(self, i: int, vec: SparseVec) -> SparseVec:
        """[x_i, v] for a sparse vector v over basis positions."""
        out: SparseVec = {}
        for j, c in vec.items():
            for k, s in self.brackets.get((i, j), ()):
                v = out.get(k, 0) + c * s
                if v:
                    out[k] = v
                else:
                    del out[k]
        return out

    def form(self, i: int, j: int) -> int:
        return self.form_on_g.get((i, j), 0)


def _sign_data(rs: RootSystem) -> tuple[list[int], list[int]]:
    """Per-root bitmasks so that eps(a, b) = -1 iff popcount(mask[a] & bmask[b]) is odd."""
    c = rs.cartan_matrix
    n = rs.rank
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                b[i][j] = 1
            elif i > j and c[i][j] != 0:
                b[i][j] = 1
    masks = []
    bmasks = []
    for root in rs.positive_roots:
        u = root.coords
        masks.append(sum((u[i] & 1) << i for i in range(n)))
        bv = 0
        for i in range(n):
            if sum(b[i][j] * u[j] for j in range(n)) & 1:
                bv |= 1 << i
        bmasks.append(bv)
    return masks, bmasks


def build_chevalley(rs: RootSystem) -> LieAlgebra:
    """Assemble the bracket table and invariant form over the Chevalley basis."""
    n = rs.rank
    m = len(rs.positive_roots)
    coords = [r.coords for r in rs.positive_roots]
    index = rs.root_index
    c = rs.cartan_matrix
    masks, bmasks = _sign_data(rs)

    def eps(a: int, b: int) -> int:
        return -1 if (masks[a] & bmasks[b]).bit_count() & 1 else 1

    basis = []
    for r, root in enumerate(rs.positive_roots):
        basis.append(BasisIndex("e", r, root=root))
    for r, root in enumerate(rs.positive_roots):
        basis.append(BasisIndex("f", m + r, root=root))
    for i in range(n):
        basis.append(BasisIndex("h", 2 * m + i, cartan=i))

    brackets: dict = {}

    def put(i: int, j: int, terms: list) -> None:
        if not terms:
            return
        brackets[(i, j)] = tuple(terms)
        brackets[(j, i)] = tuple((k, -s) for k, s in terms)

    # Root-root brackets: E-E and F-F over unordered pairs.
    for a in range(m):
        ua = coords[a]
        for b in range(a + 1, m):
            s = tuple(x + y for x, y in zip(ua, coords[b]))
            r = index.get(s)
            if r is not None:
                sign = eps(a, b)
                put(a, b, [(r, sign)])
                put(m + a, m + b, [(m + r, -sign)])

    # E-F brackets, including the coroot on the diagonal.
    for a in range(m):
        ua = coords[a]
        terms = [(2 * m + i, ua[i]) for i in range(n) if ua[i]]
        put(a, m + a, terms)
        for b in range(m):
            if b == a:
                continue
            d = tuple(x - y for x, y in zip(ua, coords[b]))
            r = index.get(d)
            if r is not None:
                put(a, m + b, [(r, -eps(a, b))])
            else:
                r = index.get(tuple(-x for x in d))
                if r is not None:
                    put(a, m + b, [(m + r, eps(a, b))])

    # Cartan action on the root vectors.
    for i in range(n):
        hi = 2 * m + i
        for a in range(m):
            k = sum(c[i][j] * coords[a][j] for j in range(n))
            if k:
                put(hi, a, [(a, k)])
                put(hi, m + a, [(m + a, -k)])

    form_on_g: dict = {}
    for a in range(m):
        form_on_g[(a, m + a)] = 1
        form_on_g[(m + a, a)] = 1
    for i in range(n):
        for j in range(n):
            if c[i][j]:
                form_on_g[(2 * m + i, 2 * m + j)] = c[i][j]

    weights = []
    for a in range(m):
        weights.append(root_to_weight(rs, rs.positive_roots[a]).coords)
    for a in range(m):
        weights.append(tuple(-x for x in weights[a]))
    for i in range(n):
        weights.append((0,) * n)

    return LieAlgebra(rs, tuple(basis), brackets, form_on_g, tuple(weights))


def adjoint_matrix(L: LieAlgebra, x: Union[BasisIndex, int]) -> SparseMatrix:
    """Matrix of ad(x) = [x, -] over the Chevalley basis."""
    pos = x.pos if isinstance(x, BasisIndex) else x
    nn = L.dim
    mat = SparseMatrix(nn, nn)
    for j in range(nn):
        for k, s in L.bracket(pos, j):
            mat[k, j] = s
    return mat


def sym2_dim(n: int) -> int:
    return n * (n + 1) // 2


def sym2_index(n: int, p: int, q: int) -> int:
    """Flat index of the monomial x_p x_q, p <= q, in row-major upper order."""
    if p > q:
        p, q = q, p
    return p * (2 * n - p - 1) // 2 + q


def sym2_unrank(n: int, k: int) -> tuple[int, int]:
    """Inverse of sym2_index."""
    p = 0
    width = n
    while k >= width:
        k -= width
        p += 1
        width -= 1
    return p, p + k


def sym2_pairs(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(n) for q in range(p, n)]


class SplitCasimir:
    """Split Casimir acting on the symmetric square, assembled on demand.

    ``column(p, q)`` gives the image of the monomial x_p x_q without
    materializing the whole operator; ``matrix()`` assembles and caches
    the full sparse matrix on the monomial basis.
    """

    def __init__(self, L: LieAlgebra):
        self.L = L
        self.sym_dim = sym2_dim(L.dim)
        self._matrix: Optional[SparseMatrix] = None
        cinv = L.rs.form_inverse
        n = L.rs.rank
        # Dual-weight vectors for the Cartan block of the dual basis.
        self._dual = [
            tuple(sum(cinv[i][j] * w[j] for j in range(n)) for i in range(n))
            for w in L.weights_fw
        ]

    def weight_pairing(self, p: int, q: int) -> Fraction:
        """(wt(x_p), wt(x_q)): the scalar the Cartan part of the operator contributes."""
        wp = self.L.weights_fw[p]
        dq = self._dual[q]
        return sum((wp[i] * dq[i] for i in range(len(wp))), Fraction(0))

    def column(self, p: int, q: int) -> SparseVec:
        """Image of the monomial x_p x_q, as a sparse vector over monomials."""
        L = self.L
        nn = L.dim
        m = L.npos
        out: dict = {}
        for r in range(m):
            for x, y in ((r, m + r), (m + r, r)):
                u = L.bracket(x, p)
                if not u:
                    continue
                v = L.bracket(y, q)
                if not v:
                    continue
                for i, ci in u:
                    for j, cj in v:
                        k = sym2_index(nn, i, j)
                        out[k] = out.get(k, 0) + ci * cj
        w = self.weight_pairing(p, q)
        if w:
            k = sym2_index(nn, p, q)
            out[k] = out.get(k, 0) + w
        return {k: v for k, v in out.items() if v}

    def matrix(self) -> SparseMatrix:
        """Full operator matrix on the monomial basis, cached after first assembly."""
        if self._matrix is None:
            nn = self.L.dim
            mat = SparseMatrix(self.sym_dim, self.sym_dim)
            for p, q in sym2_pairs(nn):
                col = sym2_index(nn, p, q)
                for row, v in self.column(p, q).items():
                    mat.entries[(row, col)] = v
            self._matrix = mat
        return self._matrix

    def apply(self, vec: SparseVec) -> SparseVec:
        """Operator applied to a sparse vector over the monomial basis."""
        nn = self.L.dim
        out: dict = {}
        for k, c in vec.items():
            p, q = sym2_unrank(nn, k)
            for row, v in self.column(p, q).items():
                w = out.get(row, 0) + c * v
                if w:
                    out[row] = w
                else:
                    del out[row]
        return out


def split_casimir(L: LieAlgebra) -> SplitCasimir:
    """The split Casimir operator of L on its symmetric square."""
    return SplitCasimir(L)


def casimir_top_eigenvalue(L: LieAlgebra) -> Fraction:
    """Scalar by which the split Casimir acts on the square of a highest-weight vector.

    The highest root is last in the positive-root order, so E(theta) is
    basis position npos - 1.  The image must be exactly a multiple of
    the same monomial; anything else means the construction is broken.
    """
    p = L.npos - 1
    col = split_casimir(L).column(p, p)
    k = sym2_index(L.dim, p, p)
    if set(col) != {k}:
        raise InvariantViolation(
            "split Casimir does not act as a scalar on the highest-weight square"
        )
    value = Fraction(col[k])
    if value != pairing(L.rs, L.rs.highest_root, L.rs.highest_root):
        raise InvariantViolation(
            "Casimir scalar on the highest-weight square differs from (theta, theta)"
        )
    return value
