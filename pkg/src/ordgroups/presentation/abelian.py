"""Integer Smith normal form and abelianizations of presentations."""
from __future__ import annotations

from dataclasses import dataclass

from .words import Presentation, exponent_sums


def identity_matrix(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: list, b: list) -> list:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def determinant(m: list) -> int:
    """Exact integer determinant by Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class SmithForm:
    """U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ..."""

    D: list
    U: list
    V: list

    def diagonal(self) -> list:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(matrix: list, ncols: int | None = None) -> SmithForm:
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    U, V = identity_matrix(m), identity_matrix(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a + V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[i][t]), i, "r") for i in range(t + 1, m) if a[i][t]]
            rest += [(abs(a[t][j]), j, "c") for j in range(t + 1, n) if a[t][j]]
            if rest:
                _, k, kind = min(rest)
                swap_rows(t, k) if kind == "r" else swap_cols(t, k)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return SmithForm(a, U, V)


def check_smith_form(matrix: list, form: SmithForm) -> bool:
    """Verify U A V = D, unimodularity and the divisibility chain without recomputing."""
    m = len(matrix)
    n = len(form.V)
    if len(form.U) != m or any(len(r) != m for r in form.U) or any(len(r) != n for r in form.V):
        return False
    if len(form.D) != m or any(len(r) != n for r in form.D):
        return False
    if abs(determinant(form.U)) != 1 or abs(determinant(form.V)) != 1:
        return False
    if m and matmul(matmul(form.U, matrix), form.V) != form.D:
        return False
    for i in range(m):
        for j in range(n):
            if i != j and form.D[i][j]:
                return False
    diag = form.diagonal()
    if any(d < 0 for d in diag):
        return False
    for d, e in zip(diag, diag[1:]):
        if (d == 0 and e != 0) or (d and e % d):
            return False
    return True


def relator_matrix(p: Presentation) -> list:
    return [exponent_sums(r, p.ngens) for r in p.relators]


@dataclass(frozen=True)
class AbelianizationResult:
    rank: int
    torsion: tuple

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def _invariants(form: SmithForm, ngens: int) -> AbelianizationResult:
    diag = form.diagonal()
    nonzero = [d for d in diag if d]
    return AbelianizationResult(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))


def abelianization_with_form(p: Presentation) -> tuple:
    form = smith_normal_form(relator_matrix(p), p.ngens)
    return _invariants(form, p.ngens), form


def abelianization(p: Presentation) -> AbelianizationResult:
    return abelianization_with_form(p)[0]


class AbelianImage:
    """Membership test for the relator lattice: is a word trivial in H_1?"""

    def __init__(self, p: Presentation):
        self.ngens = p.ngens
        _, self.form = abelianization_with_form(p)
        self.diag = self.form.diagonal()

    def coordinates(self, w) -> list:
        e = exponent_sums(w, self.ngens)
        return [sum(e[k] * self.form.V[k][j] for k in range(self.ngens)) for j in range(self.ngens)]

    def is_trivial(self, w) -> bool:
        c = self.coordinates(w)
        for j, x in enumerate(c):
            d = self.diag[j] if j < len(self.diag) else 0
            if (d == 0 and x) or (d and x % d):
                return False
        return True
