"""Exact rational linear algebra over fractions.Fraction.

Matrices are lists of row lists; vectors are lists.  Everything here is
pure and allocation-happy: sizes in this project stay well under ~100, so
clarity beats micro-optimization.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence

Q = Fraction

Vec = List[Fraction]
Mat = List[List[Fraction]]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs: Iterable) -> Vec:
    return [frac(x) for x in xs]


def zeros(n: int, m: int) -> Mat:
    return [[Q(0)] * m for _ in range(n)]


def zero_vec(n: int) -> Vec:
    return [Q(0)] * n


def identity(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Q(1)
    return out


def mat_copy(a: Mat) -> Mat:
    return [row[:] for row in a]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)] if a else []


def mat_vec(a: Mat, x: Sequence[Fraction]) -> Vec:
    return [sum((row[j] * x[j] for j in range(len(x))), Q(0)) for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[sum((ra[k] * cb[k] for k in range(len(ra))), Q(0)) for cb in bt] for ra in a]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Mat, c: Fraction) -> Mat:
    return [[c * x for x in row] for row in a]


def vec_add(x: Vec, y: Vec) -> Vec:
    return [a + b for a, b in zip(x, y)]


def vec_sub(x: Vec, y: Vec) -> Vec:
    return [a - b for a, b in zip(x, y)]


def vec_scale(x: Sequence[Fraction], c: Fraction) -> Vec:
    return [c * a for a in x]


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Q(0))


def commutator(a: Mat, b: Mat) -> Mat:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_mat(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: Mat) -> tuple[Mat, List[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = mat_copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Q(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Mat) -> List[Vec]:
    """Basis of the right kernel of `a` (deterministic order)."""
    if not a:
        return []
    cols = len(a[0])
    r, pivots = rref(a)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for f in free:
        v = zero_vec(cols)
        v[f] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a: Mat, b: Sequence[Fraction]) -> Optional[Vec]:
    """One exact solution of a @ x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [frac(b[i])] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zero_vec(cols)
    for i, p in enumerate(pivots):
        x[p] = r[i][cols]
    return x


def inv(a: Mat) -> Mat:
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def is_positive_definite(a: Mat) -> bool:
    """Symmetric positive definiteness via exact LDL^T pivots."""
    n = len(a)
    m = mat_copy(a)
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def gram_matrix(vectors: Sequence[Sequence[Fraction]], form: Mat) -> Mat:
    tmp = [mat_vec(form, v) for v in vectors]
    return [[dot(v, t) for t in tmp] for v in vectors]


def common_denominator(xs: Iterable[Fraction]) -> int:
    d = 1
    for x in xs:
        d = d * x.denominator // gcd(d, x.denominator)
    return d


def rational_gcd(xs: Sequence[Fraction]) -> Fraction:
    """Largest positive rational g with x/g an integer for every x."""
    nonzero = [x for x in xs if x != 0]
    if not nonzero:
        return Q(0)
    den = common_denominator(nonzero)
    num = 0
    for x in nonzero:
        num = gcd(num, abs(x.numerator) * (den // x.denominator))
    return Q(num, den)


# --- integer lattices -------------------------------------------------------

def hnf_column(a: List[List[int]]) -> List[List[int]]:
    """Column-style Hermite normal form of an integer matrix (n rows).

    Returns a matrix whose nonzero columns form a triangular basis of the
    column lattice of `a`.
    """
    m = [row[:] for row in a]
    n = len(m)
    ncols = len(m[0]) if n else 0
    row = 0
    col = 0
    while row < n and col < ncols:
        # reduce the row by column gcd operations
        while True:
            nz = [j for j in range(col, ncols) if m[row][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(m[row][j]))
            if j0 != col:
                for i in range(n):
                    m[i][col], m[i][j0] = m[i][j0], m[i][col]
            if m[row][col] < 0:
                for i in range(n):
                    m[i][col] = -m[i][col]
            done = True
            for j in range(col + 1, ncols):
                q = m[row][j] // m[row][col]
                if q != 0:
                    for i in range(n):
                        m[i][j] -= q * m[i][col]
                if m[row][j] != 0:
                    done = False
            if done:
                break
        if m[row][col] != 0:
            col += 1
        row += 1
    return m


def in_column_lattice(a: List[List[int]], target: List[int]) -> bool:
    """Exact membership of `target` in the integer column span of `a`."""
    h = hnf_column(a)
    n = len(target)
    t = target[:]
    ncols = len(h[0]) if h else 0
    col = 0
    for row in range(n):
        piv = None
        if col < ncols and h[row][col] != 0:
            piv = col
        if piv is None:
            if t[row] != 0:
                return False
            continue
        if t[row] % h[row][piv] != 0:
            return False
        q = t[row] // h[row][piv]
        for i in range(n):
            t[i] -= q * h[i][piv]
        col += 1
    return all(x == 0 for x in t)


def rational_lattice_membership(generators: Sequence[Sequence[Fraction]],
                                target: Sequence[Fraction]) -> bool:
    """Is `target` an integer combination of the generator vectors?"""
    allvals = [x for g in generators for x in g] + list(target)
    den = common_denominator(allvals)
    cols = [[int(x * den) for x in g] for g in generators]
    if not cols:
        return all(x == 0 for x in target)
    a = [[c[i] for c in cols] for i in range(len(target))]
    t = [int(x * den) for x in target]
    return in_column_lattice(a, t)
