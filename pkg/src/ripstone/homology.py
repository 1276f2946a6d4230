"""Integral simplicial homology via sparse Smith normal form.

The boundary convention used everywhere: for a simplex written with ascending
vertices v1 < ... < vn,

    d[v1,...,vn] = sum_{i=1..n} (-1)^i [v1,...,vi-hat,...,vn]

so the face dropping the first vertex carries coefficient -1.  All arithmetic
is exact; Python integers widen on demand, so no overflow discipline is
needed beyond avoiding floats.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .errors import ParameterError, PreconditionError, StructuralError
from .simplicial import Complex, Simplex, mask_of, simplex, vertices_of


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    """A formal integer combination of same-dimension simplices."""

    dimension: int
    terms: dict

    def support(self) -> list[Simplex]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms


def make_chain(dimension: int, terms) -> Chain:
    """Validate coefficients and simplices, dropping zero terms."""
    if dimension < 0:
        raise ParameterError(f"chain dimension must be >= 0, got {dimension}")
    clean = {}
    for s, coeff in dict(terms).items():
        s = simplex(s)
        if len(s) != dimension + 1:
            raise ParameterError(f"simplex {s} does not have dimension {dimension}")
        if not isinstance(coeff, int):
            raise ParameterError(f"coefficient of {s} must be an integer")
        if coeff:
            clean[s] = coeff
    return Chain(dimension=dimension, terms=clean)


def simplex_boundary(s: Simplex) -> list[tuple[Simplex, int]]:
    """Signed facets of a simplex under the package boundary convention."""
    if len(s) == 1:
        return []
    out = []
    for i in range(len(s)):
        sign = -1 if i % 2 == 0 else 1
        out.append((s[:i] + s[i + 1 :], sign))
    return out


def boundary_chain(z: Chain) -> Chain:
    """The boundary of a chain (zero chain for dimension 0)."""
    if z.dimension == 0:
        return Chain(dimension=0, terms={})
    acc: dict[Simplex, int] = {}
    for s, coeff in z.terms.items():
        for face, sign in simplex_boundary(s):
            val = acc.get(face, 0) + sign * coeff
            if val:
                acc[face] = val
            else:
                acc.pop(face, None)
    return Chain(dimension=z.dimension - 1, terms=acc)


# ---------------------------------------------------------------------------
# matrices


@dataclass
class IntMatrix:
    """A sparse integer matrix; entries maps (row, col) to a nonzero value."""

    rows: int
    cols: int
    entries: dict

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @classmethod
    def from_dense(cls, dense) -> "IntMatrix":
        entries = {}
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ParameterError("ragged matrix")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = int(v)
        return cls(rows=rows, cols=cols, entries=entries)


def boundary_matrix(c: Complex, k: int) -> IntMatrix:
    """Matrix of d_k: rows are (k-1)-faces, columns are k-faces, in storage order."""
    if not 1 <= k <= c.dim:
        raise ParameterError(f"no boundary matrix in dimension {k} for a complex of dim {c.dim}")
    below = c.index(k - 1)
    entries = {}
    for j, mask in enumerate(c.faces[k]):
        verts = vertices_of(mask)
        for i, v in enumerate(verts):
            sign = -1 if i % 2 == 0 else 1
            entries[(below[mask ^ (1 << v)], j)] = sign
    return IntMatrix(rows=len(c.faces[k - 1]), cols=len(c.faces[k]), entries=entries)


def _boundary_row_data(c: Complex, k: int) -> dict[int, dict[int, int]]:
    """Row-oriented boundary entries of d_k, cheaper than IntMatrix for reduction."""
    below = c.index(k - 1)
    rows: dict[int, dict[int, int]] = {}
    for j, mask in enumerate(c.faces[k]):
        verts = vertices_of(mask)
        for i, v in enumerate(verts):
            sign = -1 if i % 2 == 0 else 1
            rows.setdefault(below[mask ^ (1 << v)], {})[j] = sign
    return rows


# ---------------------------------------------------------------------------
# sparse Smith reduction engine


@dataclass
class _Reduction:
    nrows: int
    ncols: int
    rank: int
    factors: list[int]
    u_rows: dict | None = None
    uinv_cols: dict | None = None
    v_cols: dict | None = None
    vinv_rows: dict | None = None


def _invariant_factors(values: list[int]) -> list[int]:
    vs = [abs(v) for v in values]
    nontrivial = [v for v in vs if v != 1]
    ones = len(vs) - len(nontrivial)
    changed = True
    while changed:
        changed = False
        for i in range(len(nontrivial)):
            for j in range(i + 1, len(nontrivial)):
                a, b = nontrivial[i], nontrivial[j]
                if b % a:
                    g = gcd(a, b)
                    nontrivial[i], nontrivial[j] = g, a * b // g
                    changed = True
    nontrivial = [v for v in nontrivial if v != 1]
    ones = len(vs) - len(nontrivial)
    return [1] * ones + sorted(nontrivial)


def _add_into(dst: dict, src: dict, k: int) -> None:
    for key, val in src.items():
        new = dst.get(key, 0) + k * val
        if new:
            dst[key] = new
        else:
            dst.pop(key, None)


def _reduce(nrows: int, ncols: int, row_data: dict, need: frozenset = frozenset()) -> _Reduction:
    """Diagonalize an integer matrix by unimodular row and column operations.

    row_data is consumed.  need may contain "U", "Uinv", "V", "Vinv"; the
    requested transforms are returned with the final permutation and
    divisibility normalization applied, so that U * A * V embeds the
    invariant-factor diagonal at positions (0,0), (1,1), ...
    """
    track = bool(need)
    u_rows = {i: {i: 1} for i in range(nrows)} if "U" in need else None
    uinv_cols = {i: {i: 1} for i in range(nrows)} if "Uinv" in need else None
    v_cols = {j: {j: 1} for j in range(ncols)} if "V" in need else None
    vinv_rows = {j: {j: 1} for j in range(ncols)} if "Vinv" in need else None

    col_rows: dict[int, set] = {}
    for r, row in row_data.items():
        for cidx in row:
            col_rows.setdefault(cidx, set()).add(r)

    heap = [(len(row), r) for r, row in row_data.items()]
    heapq.heapify(heap)
    push = heapq.heappush

    def row_add(dst: int, src: int, k: int) -> None:
        dst_row = row_data.get(dst)
        if dst_row is None:
            dst_row = row_data[dst] = {}
        for cidx, val in row_data[src].items():
            new = dst_row.get(cidx, 0) + k * val
            if new:
                if cidx not in dst_row:
                    col_rows[cidx].add(dst)
                dst_row[cidx] = new
            else:
                del dst_row[cidx]
                col_rows[cidx].discard(dst)
        if dst_row:
            push(heap, (len(dst_row), dst))
        else:
            del row_data[dst]
        if u_rows is not None:
            _add_into(u_rows[dst], u_rows[src], k)
        if uinv_cols is not None:
            _add_into(uinv_cols[src], uinv_cols[dst], -k)

    def col_add(dst: int, src: int, k: int) -> None:
        for r in list(col_rows.get(src, ())):
            row = row_data[r]
            new = row.get(dst, 0) + k * row[src]
            if new:
                if dst not in row:
                    col_rows.setdefault(dst, set()).add(r)
                row[dst] = new
            else:
                del row[dst]
                col_rows[dst].discard(r)
            push(heap, (len(row), r))
        if v_cols is not None:
            _add_into(v_cols[dst], v_cols[src], k)
        if vinv_rows is not None:
            _add_into(vinv_rows[src], vinv_rows[dst], -k)

    def row_negate(i: int) -> None:
        row = row_data[i]
        for cidx in row:
            row[cidx] = -row[cidx]
        if u_rows is not None:
            for key in u_rows[i]:
                u_rows[i][key] = -u_rows[i][key]
        if uinv_cols is not None:
            for key in uinv_cols[i]:
                uinv_cols[i][key] = -uinv_cols[i][key]

    pivots: list[tuple[int, int, int]] = []
    while row_data:
        nnz, r0 = heapq.heappop(heap)
        if r0 not in row_data or len(row_data[r0]) != nnz:
            continue
        row = row_data[r0]
        c0 = min(row, key=lambda cc: (abs(row[cc]) != 1, abs(row[cc]), len(col_rows[cc]), cc))
        while True:
            if row_data[r0][c0] < 0:
                row_negate(r0)
            v = row_data[r0][c0]
            moved = False
            for r in sorted(col_rows[c0] - {r0}):
                q = row_data[r][c0] // v
                if q:
                    row_add(r, r0, -q)
                if c0 in row_data.get(r, ()):  # remainder 0 < rem < v: better pivot
                    push(heap, (len(row_data[r0]), r0))
                    r0 = r
                    moved = True
                    break
            if moved:
                continue
            bad = None
            for cidx in sorted(row_data[r0]):
                if cidx == c0:
                    continue
                q = row_data[r0][cidx] // v
                if q:
                    col_add(cidx, c0, -q)
                if cidx in row_data[r0]:
                    bad = cidx
                    break
            if bad is not None:
                c0 = bad
                continue
            break
        v = row_data[r0][c0]
        pivots.append((r0, c0, v))
        del row_data[r0]
        del col_rows[c0]

    if not track:
        return _Reduction(nrows, ncols, rank=len(pivots), factors=_invariant_factors([p[2] for p in pivots]))

    # Move pivots onto the leading diagonal: transforms are reindexed on their
    # permuted axis, nothing else changes.
    row_perm = {}
    col_perm = {}
    for i, (r, cc, _v) in enumerate(pivots):
        row_perm[r] = i
        col_perm[cc] = i
    nxt = len(pivots)
    for r in range(nrows):
        if r not in row_perm:
            row_perm[r] = nxt
            nxt += 1
    nxt = len(pivots)
    for cc in range(ncols):
        if cc not in col_perm:
            col_perm[cc] = nxt
            nxt += 1
    if u_rows is not None:
        u_rows = {row_perm[r]: row for r, row in u_rows.items()}
    if uinv_cols is not None:
        uinv_cols = {row_perm[r]: col for r, col in uinv_cols.items()}
    if v_cols is not None:
        v_cols = {col_perm[cc]: col for cc, col in v_cols.items()}
    if vinv_rows is not None:
        vinv_rows = {col_perm[cc]: row for cc, row in vinv_rows.items()}

    diag = [p[2] for p in pivots]

    def d_row_add(dst: int, src: int, k: int) -> None:
        if u_rows is not None:
            _add_into(u_rows[dst], u_rows[src], k)
        if uinv_cols is not None:
            _add_into(uinv_cols[src], uinv_cols[dst], -k)

    def d_col_add(dst: int, src: int, k: int) -> None:
        if v_cols is not None:
            _add_into(v_cols[dst], v_cols[src], k)
        if vinv_rows is not None:
            _add_into(vinv_rows[src], vinv_rows[dst], -k)

    def d_col_swap(i: int, j: int) -> None:
        if v_cols is not None:
            v_cols[i], v_cols[j] = v_cols[j], v_cols[i]
        if vinv_rows is not None:
            vinv_rows[i], vinv_rows[j] = vinv_rows[j], vinv_rows[i]

    def d_row_negate(i: int) -> None:
        if u_rows is not None:
            for key in u_rows[i]:
                u_rows[i][key] = -u_rows[i][key]
        if uinv_cols is not None:
            for key in uinv_cols[i]:
                uinv_cols[i][key] = -uinv_cols[i][key]

    for i in range(len(diag)):
        if diag[i] < 0:
            d_row_negate(i)
            diag[i] = -diag[i]

    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a == 0:
                    continue
                changed = True
                # 2x2 dance on rows/cols i, j: diag(a, b) -> diag(gcd, lcm)
                d_row_add(i, j, 1)
                x, y = a, b  # row i of the 2x2 block
                u, w = 0, b  # row j
                while y:
                    q = x // y
                    if q:
                        d_col_add(i, j, -q)
                        x -= q * y
                        u -= q * w
                    d_col_swap(i, j)
                    x, y = y, x
                    u, w = w, u
                assert x == gcd(a, b) and u % x == 0
                if u:
                    d_row_add(j, i, -u // x)
                if w < 0:
                    d_row_negate(j)
                    w = -w
                diag[i], diag[j] = x, w

    return _Reduction(
        nrows,
        ncols,
        rank=len(diag),
        factors=diag,
        u_rows=u_rows,
        uinv_cols=uinv_cols,
        v_cols=v_cols,
        vinv_rows=vinv_rows,
    )


# ---------------------------------------------------------------------------
# public Smith normal form


@dataclass
class SNFResult:
    """U * A * V = the diagonal embedding of `diagonal` (both transforms unimodular)."""

    diagonal: list[int]
    left_transform: list[list[int]]
    right_transform: list[list[int]]


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Smith normal form with explicit transforms; intended for moderate sizes."""
    row_data: dict[int, dict[int, int]] = {}
    for (i, j), v in a.entries.items():
        if not 0 <= i < a.rows or not 0 <= j < a.cols:
            raise ParameterError(f"entry {(i, j)} outside a {a.rows} x {a.cols} matrix")
        if v:
            row_data.setdefault(i, {})[j] = int(v)
    red = _reduce(a.rows, a.cols, row_data, need=frozenset({"U", "V"}))
    diagonal = red.factors + [0] * (min(a.rows, a.cols) - red.rank)
    left = [[0] * a.rows for _ in range(a.rows)]
    for i, row in red.u_rows.items():
        for j, v in row.items():
            left[i][j] = v
    right = [[0] * a.cols for _ in range(a.cols)]
    for j, col in red.v_cols.items():
        for i, v in col.items():
            right[i][j] = v
    return SNFResult(diagonal=diagonal, left_transform=left, right_transform=right)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion coefficients per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    reduced: bool

    def betti_stripped(self) -> tuple[int, ...]:
        out = list(self.betti)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)


def _homology_from_counts(counts: list[int], rank_torsion) -> HomologyResult:
    """Assemble Betti/torsion from per-dimension boundary ranks.

    rank_torsion(k) must return (rank d_k, torsion list of d_k) for
    1 <= k <= top dimension; ranks outside that range are zero.
    """
    top = len(counts) - 1
    ranks = [0] * (top + 2)
    torsion: list[tuple[int, ...]] = [()] * (top + 1)
    for k in range(1, top + 1):
        rank, tors = rank_torsion(k)
        ranks[k] = rank
        torsion[k - 1] = tuple(tors)
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    if any(b < 0 for b in betti):
        raise StructuralError("negative Betti number: input was not a valid chain complex")
    euler_faces = sum((-1) ** k * counts[k] for k in range(top + 1))
    euler_betti = sum((-1) ** k * betti[k] for k in range(top + 1))
    if euler_faces != euler_betti:
        raise StructuralError("Euler characteristic mismatch between face counts and Betti numbers")
    return HomologyResult(betti=betti, torsion=tuple(torsion), reduced=False)


def homology(c: Complex, reduced: bool = False) -> HomologyResult:
    """Integral homology of a complex; Betti numbers are unreduced by default."""
    counts = list(c.f_vector())
    if c.cone_vertex is not None:
        # A vertex adjacent to everything else makes the clique complex a cone.
        if sum((-1) ** k * n for k, n in enumerate(counts)) != 1:
            raise StructuralError("cone complex with Euler characteristic != 1")
        betti = [1] + [0] * c.dim
        result = HomologyResult(betti=tuple(betti), torsion=tuple(() for _ in counts), reduced=False)
    else:
        def rank_torsion(k: int):
            red = _reduce(counts[k - 1], counts[k], _boundary_row_data(c, k))
            return red.rank, [d for d in red.factors if d > 1]

        result = _homology_from_counts(counts, rank_torsion)
    if reduced:
        betti = list(result.betti)
        betti[0] -= 1
        return HomologyResult(betti=tuple(betti), torsion=result.torsion, reduced=True)
    return result


def euler_characteristic(c: Complex) -> int:
    """Alternating sum of face counts."""
    return sum((-1) ** k * n for k, n in enumerate(c.f_vector()))


# ---------------------------------------------------------------------------
# cycle classification


class HomologyBasis:
    """A fixed integral basis for the free part of H_k of one complex.

    Built once per (complex, dimension); classify() expresses any k-cycle in
    the basis.  Deterministic given the complex's face order.
    """

    def __init__(self, c: Complex, k: int):
        if not 0 <= k <= c.dim:
            raise ParameterError(f"dimension {k} outside 0..{c.dim}")
        self.complex = c
        self.k = k
        n = len(c.faces[k])
        if k >= 1:
            red_a = _reduce(
                len(c.faces[k - 1]), n, _boundary_row_data(c, k), need=frozenset({"Vinv"})
            )
            self.rank_a = red_a.rank
            vinv_rows = red_a.vinv_rows
        else:
            self.rank_a = 0
            vinv_rows = {j: {j: 1} for j in range(n)}
        self.kernel_dim = n - self.rank_a
        # column-oriented copy of Vinv for sparse vector transport
        self.vinv_by_col: dict[int, dict[int, int]] = {}
        for i, row in vinv_rows.items():
            for j, v in row.items():
                self.vinv_by_col.setdefault(j, {})[i] = v
        # image of d_{k+1} in kernel coordinates
        bhat: dict[int, dict[int, int]] = {}
        ncols_b = 0
        if k + 1 <= c.dim:
            ncols_b = len(c.faces[k + 1])
            below = c.index(k)
            for j, mask in enumerate(c.faces[k + 1]):
                verts = vertices_of(mask)
                acc: dict[int, int] = {}
                for i, v in enumerate(verts):
                    sign = -1 if i % 2 == 0 else 1
                    self._accumulate(acc, below[mask ^ (1 << v)], sign)
                for pos, val in acc.items():
                    if pos < self.rank_a:
                        raise StructuralError("boundary column is not a cycle; bad complex")
                    bhat.setdefault(pos - self.rank_a, {})[j] = val
        red_b = _reduce(self.kernel_dim, ncols_b, bhat, need=frozenset({"U"}))
        self.rank_b = red_b.rank
        self.u_rows = red_b.u_rows
        self.betti = self.kernel_dim - self.rank_b
        self.torsion = tuple(d for d in red_b.factors if d > 1)

    def _accumulate(self, acc: dict[int, int], col: int, coeff: int) -> None:
        for i, v in self.vinv_by_col.get(col, {}).items():
            new = acc.get(i, 0) + coeff * v
            if new:
                acc[i] = new
            else:
                del acc[i]

    def classify(self, z: Chain) -> tuple[int, ...]:
        index = self.complex.index(self.k)
        acc: dict[int, int] = {}
        for s, coeff in z.terms.items():
            self._accumulate(acc, index[mask_of(s)], coeff)
        if any(pos < self.rank_a for pos in acc):
            raise PreconditionError("chain is not a cycle")
        coords = []
        for i in range(self.rank_b, self.kernel_dim):
            row = self.u_rows[i]
            coords.append(sum(v * acc.get(j + self.rank_a, 0) for j, v in row.items()))
        return tuple(coords)


def _basis(c: Complex, k: int) -> HomologyBasis:
    key = ("basis", k)
    if key not in c._cache:
        c._cache[key] = HomologyBasis(c, k)
    return c._cache[key]


def cycle_class(c: Complex, z: Chain) -> tuple[int, ...]:
    """Coordinates of a cycle's class in the fixed basis of the free part of H_k.

    The zero chain maps to the zero vector; a non-cycle raises
    PreconditionError; a chain using simplices outside the complex raises
    StructuralError.
    """
    k = z.dimension
    if not 0 <= k <= c.dim:
        raise ParameterError(f"chain dimension {k} outside 0..{c.dim}")
    for s in z.terms:
        if not c.has_face(s):
            raise StructuralError(f"chain uses {s}, which is not a face of the complex")
    bd = boundary_chain(z)
    if not bd.is_zero():
        # boundary must vanish inside the complex; since the complex is closed
        # downward this is the full cycle condition
        raise PreconditionError("chain is not a cycle")
    return _basis(c, k).classify(z)
