"""Exact integer homology of a chain complex.

Betti numbers and torsion coefficients come from Smith normal forms of the
boundary matrices, computed over arbitrary-precision integers: intermediate
entries overflow 64 bits on the larger word-graph complexes, so machine
integers are never used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cells import ChainComplex
from .matrices import IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d1 | d2 | ... | dr and the rank r."""

    invariant_factors: tuple[int, ...]
    rank: int


def _pick_pivot(rows):
    # nonzero entry of minimum absolute value; ties by smallest row, then
    # column.  Scanning rows ascending lets us stop at the first +-1.
    best = None
    for r in sorted(rows):
        row = rows[r]
        for c in sorted(row):
            a = abs(row[c])
            if best is None or a < best[0]:
                best = (a, r, c)
                if a == 1:
                    return r, c
    return best[1], best[2]


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form via unimodular row/column operations.

    Diagonalizes with minimum-absolute-value pivoting to limit coefficient
    growth, then redistributes the diagonal through gcd/lcm passes until the
    divisibility chain holds.
    """
    return _snf(m, None)[0]


def kernel_basis(m: IntMatrix):
    """An integer basis of ker(m), one {column_index: coefficient} dict per
    basis vector, obtained from the column transform of the diagonalization."""
    qcols = {c: {c: 1} for c in range(m.ncols)}
    _, pivot_cols = _snf(m, qcols)
    basis = []
    for c in range(m.ncols):
        if c not in pivot_cols:
            vec = {i: v for i, v in sorted(qcols[c].items()) if v}
            basis.append(vec)
    return basis


def _snf(m: IntMatrix, qcols):
    rows = {}
    colrows = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        colrows.setdefault(c, set()).add(r)

    def row_sub(r2, r1, q):
        # row r2 -= q * row r1
        row1 = rows[r1]
        row2 = rows.setdefault(r2, {})
        for cc, v in row1.items():
            nv = row2.get(cc, 0) - q * v
            if nv:
                row2[cc] = nv
                colrows.setdefault(cc, set()).add(r2)
            elif cc in row2:
                del row2[cc]
                colrows[cc].discard(r2)
                if not colrows[cc]:
                    del colrows[cc]
        if not row2:
            del rows[r2]

    def col_sub(c2, c1, q):
        # col c2 -= q * col c1
        for rr in list(colrows.get(c1, ())):
            v = rows[rr][c1]
            row = rows[rr]
            nv = row.get(c2, 0) - q * v
            if nv:
                row[c2] = nv
                colrows.setdefault(c2, set()).add(rr)
            elif c2 in row:
                del row[c2]
                colrows[c2].discard(rr)
                if not colrows[c2]:
                    del colrows[c2]
        if qcols is not None:
            target = qcols[c2]
            for i, v in qcols[c1].items():
                nv = target.get(i, 0) - q * v
                if nv:
                    target[i] = nv
                else:
                    target.pop(i, None)

    diag = []
    pivot_cols = set()
    while rows:
        r, c = _pick_pivot(rows)
        while True:
            v = rows[r][c]
            if v < 0:
                # negate the pivot row
                row = rows[r]
                for cc in row:
                    row[cc] = -row[cc]
                v = -v
            others = colrows[c] - {r}
            if others:
                r2 = min(others)
                e = rows[r2][c]
                q = e // v
                if 2 * (e - q * v) > v:
                    q += 1
                row_sub(r2, r, q)
                if r2 in rows and c in rows.get(r2, {}):
                    r = r2  # remainder is a smaller pivot
                continue
            row_cols = set(rows[r]) - {c}
            if row_cols:
                c2 = min(row_cols)
                e = rows[r][c2]
                q = e // v
                if 2 * (e - q * v) > v:
                    q += 1
                col_sub(c2, c, q)
                if c2 in rows.get(r, {}):
                    c = c2
                continue
            break
        diag.append(rows[r][c])
        pivot_cols.add(c)
        del rows[r]
        colrows[c].discard(r)
        if not colrows[c]:
            del colrows[c]

    ones = sum(1 for d in diag if abs(d) == 1)
    vals = [abs(d) for d in diag if abs(d) != 1]
    while True:
        vals.sort()
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if vals[j] % vals[i]:
                    g = math.gcd(vals[i], vals[j])
                    vals[i], vals[j] = g, vals[i] * vals[j] // g
                    changed = True
        if not changed:
            break
    ones += sum(1 for v in vals if v == 1)
    chain = [1] * ones + sorted(v for v in vals if v != 1)
    return SnfResult(tuple(chain), len(chain)), pivot_cols


def rational_rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free cross-multiplication
    elimination; independent of the Smith normal form path."""
    a = m.to_rows()
    nrows, ncols = m.nrows, m.ncols
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            f = a[i][col]
            if f:
                g = math.gcd(f, p)
                pf, ff = p // g, f // g
                a[i] = [pf * x - ff * y for x, y in zip(a[i], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass
class HomologySummary:
    """Betti numbers and torsion coefficients per degree, plus the Euler
    characteristic of the built complex."""

    betti: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)
    euler: int = 0
    cell_counts: dict = field(default_factory=dict)
    truncated: tuple = ()

    def to_json_obj(self):
        obj = {str(k): {"betti": v, "torsion": list(self.torsion.get(k, []))}
               for k, v in sorted(self.betti.items())}
        obj["euler"] = self.euler
        obj["cells"] = {str(k): v for k, v in sorted(self.cell_counts.items())}
        obj["truncated_degrees"] = list(self.truncated)
        return obj


def homology_summary(cx: ChainComplex, max_deg: int | None = None) -> HomologySummary:
    """Betti numbers and torsion for degrees 0..max_deg.

    beta_n = c_n - rank(d_n) - rank(d_{n+1}); torsion in degree n is the list
    of invariant factors of d_{n+1} exceeding 1.  Degrees whose exactness
    would need cells above the built dimension cap are flagged as truncated
    rather than silently reported.
    """
    if max_deg is None:
        max_deg = max(cx.max_dim - 1, 0)
    counts = cx.counts()
    top = cx.top_dim()
    snfs = {}
    for n in range(1, min(max_deg + 1, top) + 1):
        if counts.get(n):
            snfs[n] = snf(cx.boundary_matrix(n))
        else:
            snfs[n] = SnfResult((), 0)
    cx.check_boundary_squares_to_zero()

    def rank_of(n):
        return snfs[n].rank if n in snfs else 0

    betti = {}
    torsion = {}
    truncated = []
    for n in range(max_deg + 1):
        c_n = counts.get(n, 0)
        betti[n] = c_n - rank_of(n) - rank_of(n + 1)
        tor = [d for d in snfs[n + 1].invariant_factors if d > 1] if n + 1 in snfs else []
        torsion[n] = tor
        if n + 1 > cx.max_dim and not cx.complete:
            truncated.append(n)
    euler = sum((-1) ** d * c for d, c in counts.items())
    return HomologySummary(betti, torsion, euler, counts, tuple(truncated))


def cycle_basis(cx: ChainComplex, n: int):
    """A basis of the n-cycle group as signed cell combinations.

    No minimality is claimed: the vectors span ker(d_n) over the integers but
    need not be short or geometrically tidy.
    """
    cells = cx.cells.get(n, [])
    if n == 0:
        return [[(c, 1)] for c in cells]
    if not cells:
        return []
    basis = kernel_basis(cx.boundary_matrix(n))
    return [[(cells[i], v) for i, v in vec.items()] for vec in basis]
