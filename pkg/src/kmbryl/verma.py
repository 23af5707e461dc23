"""Explicit highest-weight modules for affine sl2.

The algebra is realized as sl2[z,1/z] + C c + C d.  Loop generators are
symbols ('E'|'H'|'F', m) for x z^m, plus 'c' and 'd'.  Verma module
weight spaces carry a PBW monomial basis in the negative generators;
everything else (Shapovalov Gram matrices, radicals, both Brylinski
filtrations) is exact rational linear algebra against straightened
operator words.

L(lam) is never built globally: "u v = 0 in L(lam)" always means "the
straightened image of u v lies in the radical of its weight slice".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg
from .errors import InternalInconsistency
from .gcm import validate_gcm
from .qpoly import QPoly

A1_AFFINE = validate_gcm([[2, -2], [-2, 2]])

# sl2 brackets [x,y] -> list of (basis symbol, coeff); basic form <E,F>=1, <H,H>=2
_SL2_BRACKET = {
    ("E", "F"): (("H", 1),),
    ("F", "E"): (("H", -1),),
    ("H", "E"): (("E", 2),),
    ("E", "H"): (("E", -2),),
    ("H", "F"): (("F", -2),),
    ("F", "H"): (("F", 2),),
}
_SL2_FORM = {("E", "F"): 1, ("F", "E"): 1, ("H", "H"): 2}

# weight of x z^m in simple-root coordinates (alpha0, alpha1); z adds delta
_KIND_WEIGHT = {"E": (0, 1), "H": (0, 0), "F": (0, -1)}


def symbol_weight(sym):
    """Root-lattice weight of a generator symbol (0 for c, d)."""
    if sym in ("c", "d"):
        return (0, 0)
    kind, m = sym
    w = _KIND_WEIGHT[kind]
    return (w[0] + m, w[1] + m)


def is_negative(sym):
    w = symbol_weight(sym)
    return w[0] <= 0 and w[1] <= 0 and w != (0, 0)


def is_cartan(sym):
    return symbol_weight(sym) == (0, 0)


_KIND_ORDER = {"E": 0, "H": 1, "F": 2}


def pbw_key(sym):
    """(principal degree of the depth, kind, loop degree): the PBW order."""
    w = symbol_weight(sym)
    return (-(w[0] + w[1]), _KIND_ORDER[sym[0]], -sym[1])


def bracket_symbols(a, b):
    """[a, b] for generator symbols, as {symbol: Fraction}."""
    out = {}
    if a == "c" or b == "c":
        return out
    if a == "d" or b == "d":
        sign = 1 if a == "d" else -1
        sym = b if a == "d" else a
        if sym == "d":
            return out
        kind, m = sym
        if m:
            out[(kind, m)] = Fraction(sign * m)
        return out
    (k1, m1), (k2, m2) = a, b
    for kind, coeff in _SL2_BRACKET.get((k1, k2), ()):
        out[(kind, m1 + m2)] = out.get((kind, m1 + m2), Fraction(0)) + coeff
    if m1 + m2 == 0 and m1 != 0:
        pair = _SL2_FORM.get((k1, k2))
        if pair:
            out["c"] = out.get("c", Fraction(0)) + Fraction(m1 * pair)
    return {s: v for s, v in out.items() if v}


def bracket(x, y):
    """Bilinear extension of the loop bracket to {symbol: coeff} elements."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for s, v in bracket_symbols(a, b).items():
                w = out.get(s, Fraction(0)) + ca * cb * v
                if w:
                    out[s] = w
                elif s in out:
                    del out[s]
    return out


def cartan_involution(x):
    """Anti-linear Cartan involution, restricted to rational coefficients.

    x z^m + a c + b d -> xbar z^{-m} - a c - b d with Ebar = -F, Hbar = -H.
    """
    flip = {"E": "F", "F": "E", "H": "H"}
    out = {}
    for s, c in x.items():
        if s in ("c", "d"):
            out[s] = out.get(s, 0) - c
        else:
            kind, m = s
            t = (flip[kind], -m)
            out[t] = out.get(t, 0) - c
    return {s: v for s, v in out.items() if v}


def principal_elements():
    """(e, heisenberg generator family): e = E + F z, gens(k) = e z^k."""
    e = {("E", 0): Fraction(1), ("F", 1): Fraction(1)}

    def gens(k):
        return {("E", k): Fraction(1), ("F", k + 1): Fraction(1)}

    return e, gens


def _enumerate_monomials(beta, symbols, start=0):
    if not any(beta):
        yield ()
        return
    for idx in range(start, len(symbols)):
        s = symbols[idx]
        w = symbol_weight(s)
        depth = (-w[0], -w[1])
        if depth[0] > beta[0] or depth[1] > beta[1]:
            continue
        rest = (beta[0] - depth[0], beta[1] - depth[1])
        for tail in _enumerate_monomials(rest, symbols, idx):
            yield (s,) + tail


def pbw_basis(beta):
    """Ordered PBW monomials of depth beta below the highest weight.

    Monomials are tuples of negative generator symbols, nondecreasing in
    the fixed PBW order; the list order is deterministic.
    """
    beta = tuple(int(x) for x in beta)
    if any(x < 0 for x in beta):
        raise ValueError("beta must lie in Q+")
    syms = [("F", 0)]
    for n in range(1, max(beta[0], beta[1]) + 1):
        syms += [("E", -n), ("H", -n), ("F", -n)]
    syms = [s for s in syms if is_negative(s)]
    syms.sort(key=pbw_key)
    out = sorted(
        _enumerate_monomials(beta, syms),
        key=lambda mono: tuple(pbw_key(s) for s in mono),
    )
    return out


@dataclass
class WeightSlice:
    """One Verma weight space: basis, Shapovalov Gram matrix, radical."""

    lam_coroot: tuple
    depth: tuple  # lam - mu in simple-root coordinates
    basis: tuple
    gram: tuple  # rows of Fractions
    radical: tuple  # kernel basis vectors of the Gram matrix
    radical_rank: int

    @property
    def dim_irreducible(self):
        return len(self.basis) - self.radical_rank


@dataclass
class FiltrationProfile:
    jumps: tuple  # (degree, dim of graded piece), zero entries omitted
    poincare: QPoly


class AffineSL2Module:
    """Straightening engine for M(lam) over affine sl2, lam rational."""

    def __init__(self, lam):
        # lam: Weight against A1_AFFINE (coroot order alpha0, alpha1)
        self.lam = lam
        self._lam_h = lam.coroot_values[1]
        self._lam_c = lam.coroot_values[0] + lam.coroot_values[1]
        self._lam_d = lam.scaling_values[0]
        self._act_cache = {}
        self._slice_cache = {}
        self._gen_matrix_cache = {}

    def _cartan_value(self, sym):
        if sym == "c":
            return self._lam_c
        if sym == "d":
            return self._lam_d
        kind, m = sym
        assert kind == "H" and m == 0
        return self._lam_h

    def act_symbol(self, s, mono):
        """Straighten s * mono * v_lam into {normal monomial: coeff}."""
        key = (s, mono)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        if s == "c":  # central: short-circuit the swaps
            out = {mono: self._lam_c} if self._lam_c else {}
        elif mono == ():
            if is_negative(s):
                out = {(s,): Fraction(1)}
            elif is_cartan(s):
                v = self._cartan_value(s)
                out = {(): v} if v else {}
            else:
                out = {}
        elif is_negative(s) and pbw_key(s) <= pbw_key(mono[0]):
            out = {(s,) + mono: Fraction(1)}
        else:
            head, rest = mono[0], mono[1:]
            out = {}
            # s head = head s + [s, head]
            for m, c in self.act_symbol(s, rest).items():
                for m2, c2 in self.act_symbol(head, m).items():
                    w = out.get(m2, Fraction(0)) + c * c2
                    if w:
                        out[m2] = w
                    elif m2 in out:
                        del out[m2]
            for sym, k in bracket_symbols(s, head).items():
                for m, c in self.act_symbol(sym, rest).items():
                    w = out.get(m, Fraction(0)) + k * c
                    if w:
                        out[m] = w
                    elif m in out:
                        del out[m]
        self._act_cache[key] = out
        return out

    def act(self, u, vec):
        """Apply a loop element u ({symbol: coeff}) to {monomial: coeff}."""
        out = {}
        for s, cu in u.items():
            if cu == 0:
                continue
            for mono, cv in vec.items():
                for m2, c2 in self.act_symbol(s, mono).items():
                    w = out.get(m2, Fraction(0)) + cu * cv * c2
                    if w:
                        out[m2] = w
                    elif m2 in out:
                        del out[m2]
        return out

    def act_word(self, word, vec):
        for s in reversed(word):
            vec = self.act({s: Fraction(1)}, vec)
        return vec

    def slice(self, beta):
        """WeightSlice at mu = lam - beta, cached."""
        beta = tuple(int(x) for x in beta)
        cached = self._slice_cache.get(beta)
        if cached is not None:
            return cached
        basis = tuple(pbw_basis(beta))
        n = len(basis)
        gram = [[Fraction(0)] * n for _ in range(n)]
        flip = {"E": "F", "F": "E", "H": "H"}
        for i, mi in enumerate(basis):
            # sigma(m_i): transpose anti-automorphism, raising word
            sigma = tuple((flip[k], -m) for (k, m) in reversed(mi))
            for j in range(n):
                img = self.act_word(sigma, {basis[j]: Fraction(1)})
                gram[i][j] = img.get((), Fraction(0))
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InternalInconsistency(
                        "Shapovalov Gram matrix asymmetric at depth %r" % (beta,)
                    )
        radical = tuple(linalg.nullspace(gram))
        out = WeightSlice(
            lam_coroot=tuple(self.lam.coroot_values),
            depth=beta,
            basis=basis,
            gram=tuple(tuple(r) for r in gram),
            radical=radical,
            radical_rank=len(radical),
        )
        self._slice_cache[beta] = out
        return out

    # -- operator matrices ---------------------------------------------------

    def generator_matrix(self, sym, beta):
        """Matrix of a raising generator from slice beta to slice beta - wt.

        Returns (target depth, rows) with rows indexed by target basis,
        or None when the generator pushes past the highest weight.
        """
        key = (sym, beta)
        if key in self._gen_matrix_cache:
            return self._gen_matrix_cache[key]
        w = symbol_weight(sym)
        target = (beta[0] - w[0], beta[1] - w[1])
        if target[0] < 0 or target[1] < 0:
            self._gen_matrix_cache[key] = None
            return None
        src = self.slice(beta)
        dst = self.slice(target)
        index = {m: i for i, m in enumerate(dst.basis)}
        cols = []
        for mono in src.basis:
            col = [Fraction(0)] * len(dst.basis)
            for m2, c in self.act_symbol(sym, mono).items():
                col[index[m2]] = c
            cols.append(col)
        rows = tuple(
            tuple(cols[j][i] for j in range(len(src.basis)))
            for i in range(len(dst.basis))
        )
        out = (target, rows)
        self._gen_matrix_cache[key] = out
        return out

    def apply_element_states(self, elem, states):
        """Apply {symbol: coeff} to {depth: coordinate list} states."""
        out = {}
        for sym, cu in elem.items():
            for beta, vec in states.items():
                gm = self.generator_matrix(sym, beta)
                if gm is None:
                    continue
                target, rows = gm
                if not rows:
                    continue
                acc = out.setdefault(target, [Fraction(0)] * len(rows))
                for i, row in enumerate(rows):
                    s = sum(r * v for r, v in zip(row, vec) if r and v)
                    if s:
                        acc[i] += cu * s
        return {b: v for b, v in out.items() if any(v)}


def shapovalov_slice(lam, mu):
    """WeightSlice of M(lam) at mu, for affine sl2."""
    model = AffineSL2Module(lam)
    beta = A1_AFFINE.weight_to_root(A1_AFFINE.add_weights(lam, mu, sign=-1))
    if any(x < 0 for x in beta):
        raise ValueError("lam - mu must lie in Q+")
    return model.slice(beta)


def _vanishing_rows(model, operators, beta):
    """Rows expressing 'op v lies in the radical' for each operator word.

    operators: iterable of tuples of loop elements (applied right to left).
    """
    src = model.slice(beta)
    n = len(src.basis)
    rows = []
    unit_states = [
        {beta: [Fraction(1 if j == i else 0) for j in range(n)]}
        for i in range(n)
    ]
    for ops in operators:
        # image coordinates per basis vector, then Gram conditions per depth
        images = []
        for st in unit_states:
            cur = st
            for elem in reversed(ops):
                cur = model.apply_element_states(elem, cur)
            images.append(cur)
        depths = sorted({b for img in images for b in img})
        for b in depths:
            dst = model.slice(b)
            m = len(dst.basis)
            comp = [
                img.get(b, [Fraction(0)] * m) for img in images
            ]
            # Gram(dst) * component == 0
            for grow in dst.gram:
                row = [
                    sum(grow[k] * comp[i][k] for k in range(m))
                    for i in range(n)
                ]
                if any(row):
                    rows.append(row)
    return rows


def _filtration(model, beta, conditions_for_power):
    """Generic increasing filtration by vanishing conditions.

    conditions_for_power(i) yields operator words of degree i+1; F^i is
    the subspace of the irreducible weight space they annihilate.
    """
    src = model.slice(beta)
    n = len(src.basis)
    dim_l = src.dim_irreducible
    cap = sum(beta) + 1
    jumps = []
    prev = 0
    kernels = []
    for i in range(cap + 1):
        rows = _vanishing_rows(model, conditions_for_power(i), beta)
        if rows:
            ker = linalg.nullspace(rows)
        else:
            ker = [
                tuple(Fraction(1 if j == k else 0) for j in range(n))
                for k in range(n)
            ]
        dim = len(ker) - src.radical_rank
        if dim < prev:
            raise AssertionError("filtration not increasing at degree %d" % i)
        if dim > prev:
            jumps.append((i, dim - prev))
        kernels.append(tuple(ker))
        prev = dim
        if dim == dim_l:
            break
    else:
        raise AssertionError("filtration did not exhaust the weight space")
    poly = QPoly({i: d for i, d in jumps})
    profile = FiltrationProfile(jumps=tuple(jumps), poincare=poly)
    return profile, kernels


def _resolve(lam, mu):
    model = AffineSL2Module(lam)
    beta = A1_AFFINE.weight_to_root(A1_AFFINE.add_weights(lam, mu, sign=-1))
    if any(x < 0 for x in beta):
        raise ValueError("lam - mu must lie in Q+")
    return model, tuple(beta)


def _e_conditions(i):
    e, _ = principal_elements()
    return [tuple(e for _ in range(i + 1))]


def _s_conditions(i, kmax):
    _, gens = principal_elements()
    elems = [gens(k) for k in range(kmax + 1)]
    return [
        combo for combo in combinations_with_replacement(elems, i + 1)
    ]


def brylinski_e(lam, mu, model=None):
    """Poincare profile of the principal nilpotent filtration on L(lam)_mu."""
    if model is None:
        model, beta = _resolve(lam, mu)
    else:
        beta = tuple(A1_AFFINE.weight_to_root(A1_AFFINE.add_weights(lam, mu, sign=-1)))
    profile, _ = _filtration(model, beta, _e_conditions)
    return profile


def brylinski_s(lam, mu, model=None):
    """Poincare profile of the principal Heisenberg filtration on L(lam)_mu."""
    if model is None:
        model, beta = _resolve(lam, mu)
    else:
        beta = tuple(A1_AFFINE.weight_to_root(A1_AFFINE.add_weights(lam, mu, sign=-1)))
    kmax = max(beta) if any(beta) else 0
    profile, _ = _filtration(model, beta, lambda i: _s_conditions(i, kmax))
    return profile


def filtration_kernels(lam, mu):
    """(e-kernels, s-kernels, slice) for containment checks in tests."""
    model, beta = _resolve(lam, mu)
    kmax = max(beta) if any(beta) else 0
    _, ek = _filtration(model, beta, _e_conditions)
    _, sk = _filtration(model, beta, lambda i: _s_conditions(i, kmax))
    return ek, sk, model.slice(beta)
