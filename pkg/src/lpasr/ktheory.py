"""Integer Smith normal form and the K0 group of a graph's path algebra.

K0 is the cokernel of the map Z^{non-sinks} -> Z^{vertices} sending e_v to
``e_v - sum of e_{r(e)}`` over the edges leaving v, and the class of the
identity is the all-ones vector.  Everything here is exact Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .graph import Graph, GraphError

Matrix = list[list[int]]


@dataclass(frozen=True)
class SNFResult:
    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.V)))]


@dataclass(frozen=True)
class K0Presentation:
    invariant_factors: tuple[int, ...]
    free_rank: int
    # [1] in the computed basis: residues for the torsion summands, then the free coordinates
    one_class: tuple[int, ...]
    # order of the torsion coordinates of [1]; basis-dependent once one_free_gcd > 0
    one_torsion_order: int
    one_free_gcd: int
    # order of the torsion part of [1] in T/dT (d = one_free_gcd); invariant under automorphisms
    one_torsion_class_order: int

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "torsion": list(self.invariant_factors),
            "free_rank": self.free_rank,
            "one_class": list(self.one_class),
            "one_torsion_order": self.one_torsion_order,
            "one_free_gcd": self.one_free_gcd,
            "one_torsion_class_order": self.one_torsion_class_order,
        }

    def invariants(self) -> tuple:
        """The summaries that do not depend on the chosen basis."""
        return (self.invariant_factors, self.free_rank, self.one_free_gcd, self.one_torsion_class_order)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def determinant(m: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SNFResult:
    """Return U, D, V with U*m*V = D, U and V unimodular, d1 | d2 | ... and zeros last."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U, V = identity(rows), identity(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def quotient(x: int, p: int) -> int:
        # nearest-integer quotient keeps remainders within |p|/2
        q, r = divmod(x, p)
        return q + 1 if 2 * abs(r) > abs(p) else q

    for t in range(min(rows, cols)):
        while True:
            # re-pick the smallest entry each round; |pivot| strictly decreases until it sticks
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -quotient(a[i][t], p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -quotient(a[t][j], p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(U, a, V)


def presentation_matrix(g: Graph) -> Matrix:
    """Columns ``e_v - A^T e_v`` for each non-sink v, rows indexed by all vertices."""
    non_sinks = [v for v in g.vertices if g.out_edges(v)]
    m = [[0] * len(non_sinks) for _ in g.vertices]
    for c, v in enumerate(non_sinks):
        m[g.index[v]][c] += 1
        for e in g.out_edges(v):
            m[g.index[e.dst]][c] -= 1
    return m


def cokernel(m: Matrix, element: Sequence[int]) -> K0Presentation:
    """Structure of Z^rows / image(m) together with the image of ``element``."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    snf = smith_normal_form(m) if cols else SNFResult(identity(rows), m, [])
    y = [sum(u * x for u, x in zip(row, element)) for row in snf.U]
    torsion, residues, free = [], [], []
    for i in range(rows):
        d = snf.D[i][i] if i < cols else 0
        if d == 1:
            continue
        if d == 0:
            free.append(y[i])
        else:
            torsion.append(d)
            residues.append(y[i] % d)
    order = 1
    for d, r in zip(torsion, residues):
        order = lcm(order, d // gcd(d, r))
    free_gcd = 0
    for c in free:
        free_gcd = gcd(free_gcd, c)
    class_order = 1
    for d, r in zip(torsion, residues):
        q = gcd(d, free_gcd)
        class_order = lcm(class_order, q // gcd(q, r))
    return K0Presentation(
        tuple(torsion), len(free), tuple(residues + free), order, free_gcd, class_order
    )


def k0_presentation(g: Graph) -> K0Presentation:
    if not g.vertices:
        raise GraphError("K0 of the empty graph is not computed")
    return cokernel(presentation_matrix(g), [1] * len(g.vertices))
