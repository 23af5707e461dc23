"""Trace verification of the semi-infinite cocycle pairing.

Untwisted affine algebras built from sl_{l+1}: elements are sparse maps
{(i, j, m): coeff} for the matrix-unit coefficient of E_ij z^m, plus 'c'
and 'd' keys.  The invariant form restricts to the trace form on each
loop degree pair, with <c, d> = 1; the principal grading assigns degree
ht(eps_i - eps_j) + m (l+1) to E_ij z^m.

The check: -gamma(x, xbar) = 2 <rho, alpha> {x, x} for every root-space
basis vector x, where gamma sums traces of ad(x) ad(y) over the graded
pieces 0 <= n < deg(x), computed with c and d included in degree zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch
from .gcm import rho, validate_gcm


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    basis: tuple  # (label, element) pairs


class AffineLoopAlgebra:
    """sl_{l+1}[z, 1/z] + C c + C d, i.e. untwisted affine A_l^(1)."""

    def __init__(self, l):
        if l < 1:
            raise ValueError("rank must be >= 1")
        self.l = l
        self.size = l + 1
        self.coxeter = l + 1
        matrix = [[0] * (l + 1) for _ in range(l + 1)]
        for i in range(l + 1):
            matrix[i][i] = 2
            matrix[i][(i + 1) % (l + 1)] -= 1
            matrix[i][(i - 1) % (l + 1)] -= 1
        self.gcm = validate_gcm(matrix)

    # -- elements ------------------------------------------------------------

    def unit(self, i, j, m=0, coeff=1):
        return {(i, j, m): Fraction(coeff)}

    def h(self, i, m=0):
        """H_i z^m = (E_ii - E_{i+1,i+1}) z^m, i in 1..l."""
        return {
            (i - 1, i - 1, m): Fraction(1),
            (i, i, m): Fraction(-1),
        }

    def bracket(self, x, y):
        out = {}

        def add(key, v):
            if not v:
                return
            w = out.get(key, Fraction(0)) + v
            if w:
                out[key] = w
            elif key in out:
                del out[key]

        for kx, cx in x.items():
            if kx == "c":
                continue
            for ky, cy in y.items():
                if ky == "c":
                    continue
                if kx == "d" and ky == "d":
                    continue
                if kx == "d":
                    i, j, m = ky
                    add((i, j, m), cx * cy * m)
                    continue
                if ky == "d":
                    i, j, m = kx
                    add((i, j, m), -cx * cy * m)
                    continue
                i1, j1, m1 = kx
                i2, j2, m2 = ky
                c = cx * cy
                if j1 == i2:
                    add((i1, j2, m1 + m2), c)
                if j2 == i1:
                    add((i2, j1, m1 + m2), -c)
                if m1 + m2 == 0 and m1 != 0:
                    # m1 tr(E_{i1 j1} E_{i2 j2}) c
                    if j1 == i2 and j2 == i1:
                        add("c", c * m1)
        return out

    def conjugate(self, x):
        """Compact anti-involution: x z^m -> -x^T z^{-m}, c -> -c, d -> -d."""
        out = {}
        for k, v in x.items():
            if k in ("c", "d"):
                out[k] = out.get(k, 0) - v
            else:
                i, j, m = k
                key = (j, i, -m)
                out[key] = out.get(key, 0) - v
        return {k: v for k, v in out.items() if v}

    def invariant_form(self, x, y):
        """<x z^m, y z^-m> = tr(xy), <c, d> = 1, loop part orthogonal to c, d."""
        total = Fraction(0)
        for (i, j, m), v in ((k, v) for k, v in x.items() if k not in ("c", "d")):
            w = y.get((j, i, -m))
            if w:
                total += v * w
        total += x.get("c", 0) * y.get("d", 0)
        total += x.get("d", 0) * y.get("c", 0)
        return total

    # -- principal grading ---------------------------------------------------

    def degree(self, key):
        if key in ("c", "d"):
            return 0
        i, j, m = key
        return (j - i) + m * self.coxeter

    def element_degree(self, x):
        degs = {self.degree(k) for k in x}
        if len(degs) != 1:
            raise DegreeMismatch("element is not principally homogeneous")
        return degs.pop()

    def graded_basis(self, n):
        """GradedPiece of principal degree n (degree 0 includes c and d)."""
        out = []
        lo = (n - self.l) // self.coxeter - 1
        hi = (n + self.l) // self.coxeter + 1
        for m in range(lo, hi + 1):
            for i in range(self.size):
                for j in range(self.size):
                    if i != j and (j - i) + m * self.coxeter == n:
                        out.append(("E[%d,%d]z^%d" % (i + 1, j + 1, m), self.unit(i, j, m)))
            if n == m * self.coxeter:
                for i in range(1, self.l + 1):
                    out.append(("H[%d]z^%d" % (i, m), self.h(i, m)))
        if n == 0:
            out.append(("c", {"c": Fraction(1)}))
            out.append(("d", {"d": Fraction(1)}))
        return GradedPiece(n, tuple(out))

    def _coords(self, x, piece):
        """Coordinates of x along a graded piece's basis."""
        coords = []
        for label, _elem in piece.basis:
            if label == "c":
                coords.append(Fraction(x.get("c", 0)))
            elif label == "d":
                coords.append(Fraction(x.get("d", 0)))
            elif label.startswith("H"):
                # H_i z^m coordinate = sum of the first i diagonal entries
                i = int(label[2 : label.index("]")])
                m = int(label[label.index("^") + 1 :])
                coords.append(
                    sum(Fraction(x.get((t, t, m), 0)) for t in range(i))
                )
            else:
                inside = label[2 : label.index("]")]
                i, j = (int(t) for t in inside.split(","))
                m = int(label[label.index("^") + 1 :])
                coords.append(Fraction(x.get((i - 1, j - 1, m), 0)))
        return coords

    def cocycle(self, x, y):
        """gamma(x, y) = sum over 0 <= n < k of tr on g_n of ad(x) ad(y)."""
        k = self.element_degree(x)
        if k < 0:
            raise DegreeMismatch("first argument must have degree >= 0")
        if y and self.element_degree(y) != -k:
            raise DegreeMismatch("arguments must have opposite degrees")
        total = Fraction(0)
        for n in range(k):
            piece = self.graded_basis(n)
            for idx, (_label, b) in enumerate(piece.basis):
                img = self.bracket(x, self.bracket(y, b))
                total += self._coords(img, piece)[idx]
        return total

    # -- root data for basis vectors -----------------------------------------

    def root_coordinates(self, key):
        """Simple-root coordinates (alpha_0, ..., alpha_l) of a basis key."""
        i, j, m = key
        coeffs = [m] * (self.l + 1)  # m delta, delta = sum of all simple roots
        if i < j:
            for t in range(i, j):
                coeffs[t + 1] += 1
        elif i > j:
            for t in range(j, i):
                coeffs[t + 1] -= 1
        return tuple(coeffs)


def kahler_check(algebra, depth):
    """Verify -gamma(x, xbar) = 2 <rho, alpha> {x, x} through principal degree.

    Returns a list of rows (degree, label, lhs, rhs, equal); discrepancies
    are reported in the table, never suppressed.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    g = algebra.gcm
    r = rho(g)
    rows = []
    for n in range(1, depth + 1):
        piece = algebra.graded_basis(n)
        for label, x in piece.basis:
            key = next(iter(x))
            if key in ("c", "d"):
                continue
            if label.startswith("H"):
                m = key[2]
                alpha = tuple(m for _ in range(algebra.l + 1))
                norm = Fraction(2)  # {H_i z^m, H_i z^m} = tr(H_i^2)
            else:
                alpha = algebra.root_coordinates(key)
                norm = Fraction(1)  # {E_ij z^m, E_ij z^m} = tr(E_ij E_ji)
            lhs = -algebra.cocycle(x, algebra.conjugate(x))
            rhs = 2 * g.bilinear(r, alpha) * norm
            rows.append((n, label, lhs, rhs, lhs == rhs))
    return rows
