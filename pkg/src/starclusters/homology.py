"""Exact reduced integral homology through Smith normal forms.

Two reducers live here. :func:`smith_normal_form` is the production path: it
eliminates unit pivots on a sparse column store (cheapest Markowitz cost
first, so free faces cost nothing) and finishes whatever is left with a dense
minimum-absolute-value pivot reduction. :func:`naive_smith_normal_form` is the
textbook Bezout-step algorithm, kept as an oracle for the first.

All arithmetic uses Python integers, so nothing overflows.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .complexes import SimplicialComplex
from .exceptions import ComplexError
from .graphs import Graph

ALL = math.inf  # homological connectivity of an acyclic complex


class IntegerMatrix:
    """Sparse integer matrix stored column by column."""

    def __init__(self, nrows: int, ncols: int, columns: Optional[Sequence[Mapping[int, int]]] = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        if columns is None:
            columns = [{} for _ in range(ncols)]
        if len(columns) != ncols:
            raise ValueError(f"expected {ncols} columns, got {len(columns)}")
        self.columns = []
        for col in columns:
            c = {int(i): int(v) for i, v in col.items() if v}
            if any(not 0 <= i < nrows for i in c):
                raise ValueError("row index out of range")
            self.columns.append(c)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "IntegerMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = int(v)
        return cls(nrows, ncols, cols)

    def to_rows(self) -> List[List[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for col in other.columns:
            acc: Dict[int, int] = defaultdict(int)
            for k, b in col.items():
                for i, a in self.columns[k].items():
                    acc[i] += a * b
            out.append({i: v for i, v in acc.items() if v})
        return IntegerMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        return f"IntegerMatrix({self.to_rows()})"


MatrixLike = Union[IntegerMatrix, Sequence[Sequence[int]]]


def _as_matrix(M: MatrixLike) -> IntegerMatrix:
    if isinstance(M, IntegerMatrix):
        return M
    return IntegerMatrix.from_rows([list(r) for r in M])


# --- dense reduction with minimum-absolute pivots --------------------------------------------------


def dense_smith_form(rows: Sequence[Sequence[int]], transforms: bool = False):
    """Smith form of a dense matrix.

    Returns the positive diagonal ``d_1 | d_2 | ...``. With ``transforms=True``
    also returns unimodular ``U`` and ``V`` with ``U @ A @ V`` diagonal.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        if V is not None:
            for r in V:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row dst += q * row src
        ra, rs = A[dst], A[src]
        for j in range(n):
            if rs[j]:
                ra[j] += q * rs[j]
        if U is not None:
            ua, us = U[dst], U[src]
            for j in range(m):
                ua[j] += q * us[j]

    def add_col(dst, src, q):
        for r in A:
            if r[src]:
                r[dst] += q * r[src]
        if V is not None:
            for r in V:
                r[dst] += q * r[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t into the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        diag.append(A[t][t])
        t += 1
    if transforms:
        return diag, U, V
    return diag


# --- sparse unit-pivot elimination -----------------------------------------------------------------


def _sparse_reduce(columns: Iterable[Mapping[int, int]]) -> Tuple[int, List[int]]:
    """Return ``(number of unit pivots eliminated, dense Smith diagonal of the rest)``.

    Pivot choice: a row with a single unit entry first (no fill-in; this is an
    elementary collapse), otherwise the shortest column holding a unit entry,
    taking that entry's shortest row.
    """
    cols: Dict[int, Dict[int, int]] = {}
    rows: Dict[int, set] = defaultdict(set)
    for j, c in enumerate(columns):
        if c:
            cols[j] = dict(c)
            for i in c:
                rows[i].add(j)
    buckets: Dict[int, set] = defaultdict(set)  # column length -> columns that may hold a unit
    for j, c in cols.items():
        buckets[len(c)].add(j)
    col_len = {j: len(c) for j, c in cols.items()}
    singles = [i for i, r in rows.items() if len(r) == 1]
    pivots = 0

    def touch_col(j):
        old = col_len.get(j)
        if old is not None:
            buckets[old].discard(j)
        c = cols.get(j)
        if c:
            col_len[j] = len(c)
            buckets[len(c)].add(j)
        else:
            col_len.pop(j, None)

    def pick():
        while singles:
            i = singles.pop()
            r = rows.get(i)
            if r is not None and len(r) == 1:
                (j,) = r
                if cols[j][i] in (1, -1):
                    return i, j
        for length in sorted(k for k, b in buckets.items() if b):
            bucket = buckets[length]
            for j in list(bucket):
                best = None
                for i, v in cols[j].items():
                    if v == 1 or v == -1:
                        lr = len(rows[i])
                        if best is None or lr < best[0]:
                            best = (lr, i)
                            if lr == 1:
                                break
                if best is not None:
                    return best[1], j
                # no unit entry: park it until the column changes again
                bucket.discard(j)
                del col_len[j]
        return None

    while True:
        piv = pick()
        if piv is None:
            break
        p, q = piv
        pc = cols.pop(q)
        touch_col(q)
        u = pc[p]
        for j in rows[p]:
            if j == q:
                continue
            c = cols[j]
            f = c[p] * u
            for i, val in pc.items():
                nv = c.get(i, 0) - f * val
                if nv:
                    if i not in c:
                        rows[i].add(j)
                    c[i] = nv
                elif i in c:
                    del c[i]
                    if i != p:
                        ri = rows[i]
                        ri.discard(j)
                        if len(ri) == 1:
                            singles.append(i)
            if c:
                touch_col(j)
            else:
                del cols[j]
                touch_col(j)
        for i in pc:
            if i != p:
                ri = rows[i]
                ri.discard(q)
                if len(ri) == 1:
                    singles.append(i)
        del rows[p]
        pivots += 1

    if not cols:
        return pivots, []
    row_ids = sorted({i for c in cols.values() for i in c})
    pos = {i: k for k, i in enumerate(row_ids)}
    dense = [[0] * len(cols) for _ in row_ids]
    for k, j in enumerate(sorted(cols)):
        for i, v in cols[j].items():
            dense[pos[i]][k] = v
    return pivots, dense_smith_form(dense)


def smith_normal_form(M: MatrixLike) -> Tuple[List[int], int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` (all positive) and the rank ``r``."""
    A = _as_matrix(M)
    ones, rest = _sparse_reduce(A.columns)
    diag = [1] * ones + rest
    return diag, len(diag)


# --- textbook reference reducer --------------------------------------------------------------------


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def naive_smith_normal_form(M: MatrixLike) -> Tuple[List[int], int]:
    """Reference reducer: leftmost-column pivots and 2x2 Bezout transforms.

    Slow and simple on purpose; it shares no code with :func:`smith_normal_form`.
    """
    A = _as_matrix(M).to_rows()
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    for jt in range(n):
        if t >= m:
            break
        if all(A[i][jt] == 0 for i in range(t, m)):
            continue
        # bring a nonzero entry of column jt to row t, then the column to position t
        k = next(i for i in range(t, m) if A[i][jt])
        A[t], A[k] = A[k], A[t]
        for r in A:
            r[t], r[jt] = r[jt], r[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                a, b = A[t][t], A[i][t]
                if b == 0:
                    continue
                if a and b % a == 0:
                    q = b // a
                    A[i] = [y - q * x for x, y in zip(A[t], A[i])]
                else:
                    g, s, u = _ext_gcd(a, b)
                    ag, bg = a // g, b // g
                    rt, ri = A[t], A[i]
                    A[t] = [s * x + u * y for x, y in zip(rt, ri)]
                    A[i] = [-bg * x + ag * y for x, y in zip(rt, ri)]
                changed = True
            for j in range(t + 1, n):
                a, b = A[t][t], A[t][j]
                if b == 0:
                    continue
                if a and b % a == 0:
                    q = b // a
                    for r in A:
                        r[j] -= q * r[t]
                else:
                    g, s, u = _ext_gcd(a, b)
                    ag, bg = a // g, b // g
                    for r in A:
                        x, y = r[t], r[j]
                        r[t], r[j] = s * x + u * y, -bg * x + ag * y
                changed = True
            if not changed:
                break
        t += 1
    diag = [abs(A[i][i]) for i in range(min(m, n)) if A[i][i]]
    # turn the diagonal into a divisibility chain: (a, b) -> (gcd, lcm)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = math.gcd(a, b)
            diag[i], diag[j] = g, a // g * b
    return diag, len(diag)


def determinantal_invariant_factors(M: MatrixLike) -> List[int]:
    """Invariant factors from gcds of k x k minors. Exponential; tiny matrices only."""
    from itertools import combinations

    from fractions import Fraction

    A = _as_matrix(M).to_rows()
    m = len(A)
    n = len(A[0]) if m else 0

    def det(rows, cols):
        B = [[Fraction(A[i][j]) for j in cols] for i in rows]
        k = len(B)
        d = Fraction(1)
        for c in range(k):
            piv = next((r for r in range(c, k) if B[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                B[c], B[piv] = B[piv], B[c]
                d = -d
            d *= B[c][c]
            for r in range(c + 1, k):
                f = B[r][c] / B[c][c]
                B[r] = [x - f * y for x, y in zip(B[r], B[c])]
        return int(d)

    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = math.gcd(g, det(rs, cs))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


# --- chain complexes of simplicial complexes -------------------------------------------------------


def _cells(K: SimplicialComplex) -> List[List[int]]:
    return K.simplex_masks()


def _boundary_columns(lower: List[int], upper: List[int], k: int) -> List[Dict[int, int]]:
    """Columns of the boundary map from ``k``-cells ``upper`` to ``lower``.

    Masks index ground positions, which are sorted labels, so the i-th set bit
    is the i-th vertex of the simplex and carries sign (-1)**i.
    """
    if k == 0:
        return [{0: 1} for _ in upper]
    pos = {m: i for i, m in enumerate(lower)}
    cols = []
    for tau in upper:
        col = {}
        sign = 1
        rest = tau
        while rest:
            low = rest & -rest
            col[pos[tau ^ low]] = sign
            sign = -sign
            rest ^= low
        cols.append(col)
    return cols


def boundary_matrix(K: SimplicialComplex, k: int) -> IntegerMatrix:
    """Signed boundary map C_k -> C_{k-1} of the augmented chain complex.

    Rows and columns follow the lex order of ``K.simplices(k-1)`` and
    ``K.simplices(k)``; C_{-1} is spanned by the empty simplex.
    """
    if not -1 <= k <= K.dim:
        raise ComplexError(f"degree {k} outside [-1, {K.dim}]")
    cells = _cells(K)
    if k == -1:
        return IntegerMatrix(0, 1)
    lower = [0] if k == 0 else cells[k - 1]
    upper = cells[k]
    return IntegerMatrix(len(lower), len(upper), _boundary_columns(lower, upper, k))


@dataclass(frozen=True)
class HomologyGroup:
    betti: int = 0
    torsion: Tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


class HomologyProfile:
    """Reduced homology by degree.

    Only non-zero groups are stored; equality compares those, so two profiles
    are equal exactly when the graded groups are isomorphic. ``dim`` records the
    dimension of the complex the profile came from (degrees above it are absent).
    """

    def __init__(self, groups: Mapping[int, HomologyGroup] = (), dim: Optional[int] = None):
        items = dict(groups)
        self.groups: Dict[int, HomologyGroup] = {}
        for k in sorted(items):
            g = items[k]
            if not isinstance(g, HomologyGroup):
                betti, torsion = g
                g = HomologyGroup(int(betti), tuple(int(t) for t in torsion))
            if not g.is_zero():
                self.groups[int(k)] = g
        top = max(self.groups, default=-1)
        self.dim = top if dim is None else max(dim, top)

    @classmethod
    def point(cls) -> "HomologyProfile":
        return cls({}, 0)

    @classmethod
    def sphere(cls, n: int, count: int = 1) -> "HomologyProfile":
        """Wedge of ``count`` spheres of dimension ``n`` (n = -1 is the empty complex)."""
        return cls({n: HomologyGroup(count)} if count else {}, n)

    def __getitem__(self, k: int) -> HomologyGroup:
        return self.groups.get(k, HomologyGroup())

    def betti(self, k: int) -> int:
        return self[k].betti

    def torsion(self, k: int) -> Tuple[int, ...]:
        return self[k].torsion

    def is_trivial(self) -> bool:
        return not self.groups

    is_point = is_trivial

    def nonzero_degrees(self) -> List[int]:
        return list(self.groups)

    def shifted(self, r: int) -> "HomologyProfile":
        return HomologyProfile({k + r: g for k, g in self.groups.items()}, self.dim + r)

    def sphere_dimension(self) -> Optional[int]:
        """``n`` if the profile is that of a single n-sphere, else None."""
        if len(self.groups) == 1:
            ((k, g),) = self.groups.items()
            if g.betti == 1 and not g.torsion:
                return k
        return None

    def is_point_or_sphere(self) -> bool:
        return self.is_trivial() or self.sphere_dimension() is not None

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.groups == other.groups

    def __hash__(self):
        return hash(tuple(self.groups.items()))

    def __repr__(self):
        body = ", ".join(f"{k}: {g}" for k, g in self.groups.items())
        return f"HomologyProfile({{{body}}})"

    def to_json(self) -> dict:
        return {str(k): {"betti": g.betti, "torsion": list(g.torsion)} for k, g in self.groups.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping]) -> "HomologyProfile":
        return cls({int(k): HomologyGroup(int(v["betti"]), tuple(v.get("torsion", ()))) for k, v in data.items()})


def _coreduce(cells: List[List[int]]) -> List[List[int]]:
    """Shrink the augmented chain complex by coreductions and free-face reductions.

    A pair (a, b) with b the only remaining face of a, or a the only remaining
    coface of b, spans a summand with a unit boundary; dropping both cells and
    restricting the boundary to what is left keeps the homology (Mrozek and
    Batko). Returns the surviving cells; index 0 holds the empty simplex if it
    survives, index d + 1 the d-cells.
    """
    levels = [[0]] + [list(c) for c in cells]
    present = set()
    up: Dict[int, List[int]] = {}
    nfaces: Dict[int, int] = {0: 0}
    ncofaces: Dict[int, int] = {}
    for lvl in levels:
        for m in lvl:
            present.add(m)
            up[m] = []
            ncofaces[m] = 0
    for lvl in levels[1:]:
        for m in lvl:
            nfaces[m] = m.bit_count()
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                up[m ^ low].append(m)
                ncofaces[m ^ low] += 1
    stack = [m for m in present if nfaces[m] == 1 or ncofaces[m] == 1]

    def remove(x):
        present.discard(x)
        rest = x
        while rest:
            low = rest & -rest
            rest ^= low
            f = x ^ low
            if f in present:
                ncofaces[f] -= 1
                if ncofaces[f] == 1:
                    stack.append(f)
        for y in up[x]:
            if y in present:
                nfaces[y] -= 1
                if nfaces[y] == 1:
                    stack.append(y)

    while stack:
        c = stack.pop()
        if c not in present:
            continue
        if nfaces[c] == 1:
            rest = c
            while rest:
                low = rest & -rest
                rest ^= low
                if c ^ low in present:
                    break
            partner = c ^ low
        elif ncofaces[c] == 1:
            partner = next(y for y in up[c] if y in present)
        else:
            continue
        remove(c)
        remove(partner)
    return [[m for m in lvl if m in present] for lvl in levels]


def _restricted_columns(lower: List[int], upper: List[int]) -> List[Dict[int, int]]:
    """Boundary columns of ``upper`` restricted to the cells in ``lower``."""
    pos = {m: i for i, m in enumerate(lower)}
    cols = []
    for tau in upper:
        col = {}
        sign = 1
        rest = tau
        while rest:
            low = rest & -rest
            i = pos.get(tau ^ low)
            if i is not None:
                col[i] = sign
            sign = -sign
            rest ^= low
        cols.append(col)
    return cols


def homology_from_cells(cells: List[List[int]], method: str = "sparse") -> HomologyProfile:
    """Reduced homology of the complex whose non-empty simplices are ``cells``
    (bitmasks grouped by dimension, each list in a fixed order).

    ``sparse`` coreduces first and then eliminates; ``elimination`` skips the
    coreduction; ``reference`` uses the naive reducer on the full complex.
    """
    if method not in _REDUCERS:
        raise ValueError(f"unknown method {method!r}")
    d = len(cells) - 1
    levels = _coreduce(cells) if method == "sparse" else [[0]] + [list(c) for c in cells]
    reduce = _REDUCERS[method]
    # levels[k + 1] holds the k-cells; rank[k] is the rank of the map out of degree k
    rank = {-1: 0, d + 1: 0}
    factors: Dict[int, List[int]] = {}
    for k in range(0, d + 1):
        lower, upper = levels[k], levels[k + 1]
        if not lower or not upper:
            rank[k] = 0
            continue
        diag = reduce(len(lower), _restricted_columns(lower, upper))
        rank[k] = len(diag)
        factors[k] = [x for x in diag if x > 1]
    groups = {}
    for k in range(-1, d + 1):
        betti = len(levels[k + 1]) - rank[k] - rank[k + 1]
        groups[k] = HomologyGroup(betti, tuple(sorted(factors.get(k + 1, []))))
    return HomologyProfile(groups, d)


def _reduce_sparse(nrows, cols):
    return smith_normal_form(IntegerMatrix(nrows, len(cols), cols))[0]


def _reduce_reference(nrows, cols):
    return naive_smith_normal_form(IntegerMatrix(nrows, len(cols), cols))[0]


_REDUCERS = {"sparse": _reduce_sparse, "elimination": _reduce_sparse, "reference": _reduce_reference}


def reduced_homology(K: SimplicialComplex, method: str = "sparse") -> HomologyProfile:
    """Reduced integral homology of ``K``.

    ``method="reference"`` routes every boundary map through the naive reducer;
    use it only on small complexes.
    """
    if method not in _REDUCERS:
        raise ValueError(f"unknown method {method!r}")
    return homology_from_cells(_cells(K), method)


def independent_set_masks(G: Graph) -> List[List[int]]:
    """All non-empty independent sets of ``G`` as masks over ``G.vertices``, by size."""
    adj = G.adjacency_masks()
    n = len(adj)
    out: List[List[int]] = []

    def extend(mask, size, allowed):
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            m = mask | low
            if len(out) <= size:
                out.append([])
            out[size].append(m)
            extend(m, size + 1, allowed & ~adj[i])

    extend(0, 0, (1 << n) - 1)
    return out


def _prime_powers(d: int) -> List[Tuple[int, int]]:
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            out.append((p, e))
        p += 1
    if d > 1:
        out.append((d, 1))
    return out


def invariant_factors(orders: Iterable[int]) -> Tuple[int, ...]:
    """Invariant factors (d_1 | d_2 | ...) of a direct sum of cyclic groups Z/d."""
    by_prime: Dict[int, List[int]] = defaultdict(list)
    for d in orders:
        for p, e in _prime_powers(abs(d)):
            by_prime[p].append(e)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for p, exps in by_prime.items():
        for i, e in enumerate(sorted(exps, reverse=True)):
            factors[width - 1 - i] *= p**e
    return tuple(factors)


def join_homology(P: HomologyProfile, Q: HomologyProfile) -> HomologyProfile:
    """Reduced homology of a join from the factors' (Kunneth formula).

    The tensor products of degrees i and j land in degree i + j + 1, the Tor
    terms in degree i + j + 2.
    """
    betti: Dict[int, int] = defaultdict(int)
    orders: Dict[int, List[int]] = defaultdict(list)
    for i, g in P.groups.items():
        for j, h in Q.groups.items():
            k = i + j + 1
            betti[k] += g.betti * h.betti
            orders[k] += list(g.torsion) * h.betti + list(h.torsion) * g.betti
            pairs = [math.gcd(a, b) for a in g.torsion for b in h.torsion]
            orders[k] += pairs
            orders[k + 1] += pairs
    groups = {k: HomologyGroup(betti[k], invariant_factors(orders[k])) for k in set(betti) | set(orders)}
    return HomologyProfile(groups, P.dim + Q.dim + 1)


def _dominated_core(adj: List[int]) -> int:
    """Delete dominating vertices (N(v) inside N(w): drop w) in any order.

    ``adj`` is modified in place; returns the mask of surviving vertices.
    """
    n = len(adj)
    alive = (1 << n) - 1
    queue = list(range(n))
    while queue:
        v = queue.pop()
        if not alive >> v & 1:
            continue
        nv = adj[v]
        rest = alive & ~(1 << v)
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            if nv & ~adj[w] == 0:
                alive &= ~low
                nbrs = adj[w]
                while nbrs:
                    lb = nbrs & -nbrs
                    nbrs ^= lb
                    u = lb.bit_length() - 1
                    adj[u] &= ~low
                    queue.append(u)
                queue.append(v)
                break
    return alive


def _mask_components(adj: List[int], alive: int) -> List[int]:
    comps = []
    while alive:
        seen = frontier = alive & -alive
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                rest ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & alive & ~seen
            seen |= frontier
        comps.append(seen)
        alive &= ~seen
    return comps


def _independent_sets_within(adj: List[int], allowed: int) -> List[List[int]]:
    out: List[List[int]] = []

    def extend(mask, size, allowed):
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            m = mask | low
            if len(out) <= size:
                out.append([])
            out[size].append(m)
            extend(m, size + 1, allowed & ~adj[i])

    extend(0, 0, allowed)
    return out


def independence_homology(G: Graph, method: str = "sparse", simplify: bool = True) -> HomologyProfile:
    """Reduced homology of the independence complex, enumerating independent sets directly.

    With ``simplify`` (``sparse`` method only) dominating vertices are deleted
    first, which preserves the homotopy type, and the remaining graph is split
    into components, whose independence complexes are joined.
    """
    if not simplify or method != "sparse":
        return homology_from_cells(independent_set_masks(G), method)
    adj = list(G.adjacency_masks())
    if not adj:
        return HomologyProfile.sphere(-1)
    alive = _dominated_core(adj)
    result = HomologyProfile.sphere(-1)
    for comp in _mask_components(adj, alive):
        if comp.bit_count() == 1:
            return HomologyProfile.point()  # a cone
        part = homology_from_cells(_independent_sets_within(adj, comp), method)
        result = join_homology(result, part)
        if result.is_trivial():
            return result
    return result


def homological_connectivity(X: Union[SimplicialComplex, HomologyProfile]) -> Union[int, float]:
    """Largest ``c`` with every reduced group of degree <= c zero; ``ALL`` if acyclic.

    The empty complex has a non-zero group in degree -1 and gets -2.
    """
    prof = X if isinstance(X, HomologyProfile) else reduced_homology(X)
    degrees = prof.nonzero_degrees()
    if not degrees:
        return ALL
    return min(degrees) - 1
