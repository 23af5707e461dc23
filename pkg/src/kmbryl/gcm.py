"""Generalized Cartan matrices, weights, roots, and the invariant form.

Conventions used throughout:

* ``A[i][j] = alpha_j(alpha_i_vee)``, so the simple reflection s_i acts on
  a weight nu by subtracting ``nu(alpha_i_vee) * alpha_i`` and
  ``alpha_i(alpha_j_vee) = A[j][i]``.
* Root vectors are plain tuples of ints in simple-root coordinates.
* Weights store exact rational values on the simple coroots plus values
  on scaling elements d_s completing the coroots to a basis of the
  Cartan; the scaling elements satisfy ``alpha_i(d_s) = 1`` exactly at a
  fixed set of "special" node indices (node 0 for an affine algebra, so
  the single scaling value is the usual value on d).
* The invariant form is normalized by the symmetrizer:
  ``<alpha_i, alpha_j> = D_i A[i][j]`` and ``<mu, alpha_i> = D_i mu(alpha_i_vee)``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NotGCM, NotInRootLattice, NotSymmetrizable


@dataclass(frozen=True)
class Weight:
    """Values on simple coroots plus values on the scaling elements."""

    coroot_values: tuple
    scaling_values: tuple = ()

    @property
    def d_value(self):
        if len(self.scaling_values) != 1:
            raise ValueError("d_value only defined for corank-1 (affine) weights")
        return self.scaling_values[0]


@dataclass(frozen=True)
class SubmatrixType:
    """Classification of an index-subset submatrix into blocks."""

    tag: str  # finite | affine | indefinite
    blocks: tuple  # ((indices), tag) per indecomposable block


def _components(matrix, indices):
    """Indecomposable blocks of the zero pattern restricted to indices."""
    indices = list(indices)
    seen = set()
    comps = []
    for start in indices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in indices:
                if j not in seen and matrix[i][j] != 0:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


class GCM:
    """A validated generalized Cartan matrix with a fixed symmetrizer.

    Construct via :func:`validate_gcm`; instances are immutable.
    """

    def __init__(self, matrix, symmetrizer):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.symmetrizer = tuple(Fraction(d) for d in symmetrizer)
        self.n = len(self.matrix)
        self.special_indices = self._scaling_indices()
        self.corank = len(self.special_indices)
        self._gram_inv = None
        self._dual_labels = None

    # -- identity / hashing -------------------------------------------------

    def key(self):
        payload = {
            "matrix": [list(r) for r in self.matrix],
            "symmetrizer": [str(d) for d in self.symmetrizer],
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def __eq__(self, other):
        return (
            isinstance(other, GCM)
            and self.matrix == other.matrix
            and self.symmetrizer == other.symmetrizer
        )

    def __hash__(self):
        return hash((self.matrix, self.symmetrizer))

    def __repr__(self):
        return "GCM(%r, D=%r)" % ([list(r) for r in self.matrix], list(self.symmetrizer))

    # -- structure ----------------------------------------------------------

    def _scaling_indices(self):
        """Node indices where the scaling elements evaluate to 1.

        Greedily extend the rows of A by unit vectors until full rank; for
        an affine matrix this picks node 0, matching the convention
        alpha_0(d) = 1.
        """
        rows = [list(r) for r in self.matrix]
        r = linalg.rank(rows)
        special = []
        for i in range(self.n):
            if r == self.n:
                break
            unit = [0] * self.n
            unit[i] = 1
            r2 = linalg.rank(rows + [unit])
            if r2 > r:
                special.append(i)
                rows.append(unit)
                r = r2
        return tuple(special)

    def weight(self, coroot_values, scaling_values=()):
        cv = tuple(Fraction(x) for x in coroot_values)
        sv = tuple(Fraction(x) for x in scaling_values)
        if len(cv) != self.n or len(sv) != self.corank:
            raise ValueError("weight coordinate length mismatch")
        return Weight(cv, sv)

    def zero_weight(self):
        return Weight((Fraction(0),) * self.n, (Fraction(0),) * self.corank)

    def root_as_weight(self, beta):
        """Coordinates of a root-lattice vector as a Weight."""
        if len(beta) != self.n:
            raise ValueError("root vector length mismatch")
        cv = tuple(
            sum(Fraction(self.matrix[i][j]) * beta[j] for j in range(self.n))
            for i in range(self.n)
        )
        sv = tuple(Fraction(beta[s]) for s in self.special_indices)
        return Weight(cv, sv)

    def weight_to_root(self, weight):
        """Inverse of root_as_weight; raises NotInRootLattice if impossible."""
        rows = [list(r) for r in self.matrix]
        rhs = list(weight.coroot_values)
        for s, v in zip(self.special_indices, weight.scaling_values):
            unit = [0] * self.n
            unit[s] = 1
            rows.append(unit)
            rhs.append(v)
        sol = linalg.solve(rows, rhs)
        if sol is None:
            raise NotInRootLattice("weight is outside the root lattice span")
        if any(x.denominator != 1 for x in sol):
            raise NotInRootLattice("weight has non-integral root coordinates")
        out = tuple(int(x) for x in sol)
        back = self.root_as_weight(out)
        if back != Weight(tuple(Fraction(x) for x in weight.coroot_values),
                          tuple(Fraction(x) for x in weight.scaling_values)):
            raise NotInRootLattice("weight is outside the root lattice span")
        return out

    def add_weights(self, a, b, sign=1):
        return Weight(
            tuple(x + sign * y for x, y in zip(a.coroot_values, b.coroot_values)),
            tuple(x + sign * y for x, y in zip(a.scaling_values, b.scaling_values)),
        )

    def sub_root(self, weight, beta, sign=1):
        """weight + sign * beta for a root-lattice vector beta."""
        return self.add_weights(weight, self.root_as_weight(beta), sign)

    def is_dominant(self, weight):
        return all(v >= 0 for v in weight.coroot_values)

    def is_strictly_dominant(self, weight):
        return all(v > 0 for v in weight.coroot_values)

    def dual_labels(self):
        """Primitive positive integer vector c with A^t c = 0 (affine only)."""
        if self._dual_labels is None:
            at = [[self.matrix[j][i] for j in range(self.n)] for i in range(self.n)]
            ker = linalg.nullspace(at)
            if len(ker) != 1:
                raise ValueError("dual labels require an affine (corank-1) GCM")
            v = ker[0]
            from math import lcm

            mult = lcm(*(x.denominator for x in v))
            ints = [int(x * mult) for x in v]
            if all(x < 0 for x in ints):
                ints = [-x for x in ints]
            if not all(x > 0 for x in ints):
                raise ValueError("affine kernel vector is not positive")
            from math import gcd

            g = gcd(*ints)
            self._dual_labels = tuple(x // g for x in ints)
        return self._dual_labels

    def level(self, weight):
        labels = self.dual_labels()
        return sum(a * v for a, v in zip(labels, weight.coroot_values))

    # -- invariant bilinear form ---------------------------------------------

    def _gram_inverse(self):
        """Inverse Gram matrix of the form on the Cartan, in weight coords."""
        if self._gram_inv is None:
            n, m = self.n, self.corank
            size = n + m
            g = [[Fraction(0)] * size for _ in range(size)]
            for i in range(n):
                for j in range(n):
                    g[i][j] = Fraction(self.matrix[i][j]) / self.symmetrizer[j]
            for s, idx in enumerate(self.special_indices):
                g[idx][n + s] = Fraction(1) / self.symmetrizer[idx]
                g[n + s][idx] = g[idx][n + s]
            cols = []
            for k in range(size):
                rhs = [Fraction(0)] * size
                rhs[k] = Fraction(1)
                col = linalg.solve(g, rhs)
                if col is None:
                    raise ValueError("degenerate Cartan form; cannot pair weights")
                cols.append(col)
            self._gram_inv = [[cols[j][i] for j in range(size)] for i in range(size)]
        return self._gram_inv

    def bilinear(self, x, y):
        """Invariant form; arguments are Weights or root vectors (tuples)."""
        xw = isinstance(x, Weight)
        yw = isinstance(y, Weight)
        if not xw and not yw:
            if len(x) != self.n or len(y) != self.n:
                raise ValueError("root vector length mismatch")
            return sum(
                self.symmetrizer[i] * self.matrix[i][j] * x[i] * y[j]
                for i in range(self.n)
                for j in range(self.n)
                if self.matrix[i][j] != 0
            )
        if xw and not yw:
            return sum(
                self.symmetrizer[i] * y[i] * x.coroot_values[i] for i in range(self.n)
            )
        if yw and not xw:
            return self.bilinear(y, x)
        ginv = self._gram_inverse()
        xc = list(x.coroot_values) + list(x.scaling_values)
        yc = list(y.coroot_values) + list(y.scaling_values)
        if len(xc) != len(ginv) or len(yc) != len(ginv):
            raise ValueError("weight coordinate length mismatch")
        return sum(
            xc[i] * ginv[i][j] * yc[j]
            for i in range(len(xc))
            for j in range(len(yc))
            if ginv[i][j] != 0
        )


def validate_gcm(matrix, symmetrizer=None):
    """Check the GCM axioms and compute (or verify) a symmetrizer.

    The symmetrizer is normalized so its smallest entry is 1.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NotGCM("matrix is not square")
        for x in row:
            if int(x) != x:
                raise NotGCM("matrix entries must be integers")
    for i in range(n):
        if matrix[i][i] != 2:
            raise NotGCM("diagonal entry A[%d][%d] != 2" % (i, i))
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] > 0:
                raise NotGCM("positive off-diagonal entry at (%d, %d)" % (i, j))
            if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                raise NotGCM("asymmetric zero pattern at (%d, %d)" % (i, j))

    if symmetrizer is not None:
        d = [Fraction(x) for x in symmetrizer]
        if len(d) != n or any(x <= 0 for x in d):
            raise NotSymmetrizable("symmetrizer must be n positive rationals")
        for i in range(n):
            for j in range(n):
                if d[i] * matrix[i][j] != d[j] * matrix[j][i]:
                    raise NotSymmetrizable("given symmetrizer does not symmetrize A")
    else:
        # d_j / d_i = A[i][j] / A[j][i] along every edge; propagate per
        # component and check consistency on cycles.
        d = [None] * n
        for comp in _components(matrix, range(n)):
            d[comp[0]] = Fraction(1)
            queue = [comp[0]]
            while queue:
                i = queue.pop()
                for j in comp:
                    if matrix[i][j] == 0 or i == j:
                        continue
                    ratio = Fraction(matrix[i][j], matrix[j][i])
                    if d[j] is None:
                        d[j] = d[i] * ratio
                        queue.append(j)
                    elif d[j] != d[i] * ratio:
                        raise NotSymmetrizable(
                            "no positive symmetrizer exists (inconsistent cycle)"
                        )
    lo = min(d)
    d = [x / lo for x in d]
    return GCM(matrix, d)


def classify(gcm, indices=None):
    """Finite/affine/indefinite type of the submatrix on an index subset."""
    if indices is None:
        indices = range(gcm.n)
    indices = sorted(set(indices))
    if not indices:
        raise ValueError("index subset must be nonempty")
    blocks = []
    for comp in _components(gcm.matrix, indices):
        sym = [
            [gcm.symmetrizer[i] * gcm.matrix[i][j] for j in comp] for i in comp
        ]
        pos, neg, zero = linalg.signature(sym)
        if neg == 0 and zero == 0:
            tag = "finite"
        elif neg == 0 and zero == 1:
            tag = "affine"
        else:
            tag = "indefinite"
        blocks.append((comp, tag))
    tags = {t for _, t in blocks}
    if tags == {"finite"}:
        overall = "finite"
    elif "indefinite" in tags:
        overall = "indefinite"
    else:
        overall = "affine"
    return SubmatrixType(overall, tuple(blocks))


def rho(gcm):
    """The Weyl vector normalized by rho(alpha_i_vee) = 1, rho(d_s) = 0."""
    return Weight((Fraction(1),) * gcm.n, (Fraction(0),) * gcm.corank)


def reflect(gcm, i, weight):
    """Simple reflection s_i(nu) = nu - nu(alpha_i_vee) alpha_i."""
    c = weight.coroot_values[i]
    cv = tuple(
        weight.coroot_values[j] - c * gcm.matrix[j][i] for j in range(gcm.n)
    )
    sv = tuple(
        v - c * (1 if s == i else 0)
        for s, v in zip(gcm.special_indices, weight.scaling_values)
    )
    return Weight(cv, sv)


def shifted_action(gcm, word, lam):
    """w * lam = w(lam + rho) - rho, for a word of simple-reflection indices.

    The rightmost letter acts first.
    """
    nu = gcm.add_weights(lam, rho(gcm))
    for i in reversed(word):
        nu = reflect(gcm, i, nu)
    return gcm.add_weights(nu, rho(gcm), sign=-1)


def shifted_deficit(gcm, word, lam):
    """(lam + rho) - w(lam + rho), tracked exactly as a root vector."""
    cv = list(gcm.add_weights(lam, rho(gcm)).coroot_values)
    offset = [0] * gcm.n
    for i in reversed(word):
        c = cv[i]
        if c.denominator != 1:
            raise NotInRootLattice("shifted action leaves the root lattice offset")
        offset[i] += int(c)
        for j in range(gcm.n):
            cv[j] -= c * gcm.matrix[j][i]
    return tuple(offset)
