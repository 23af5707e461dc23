"""Lusztig q-analogs of weight multiplicity.

K(beta;q) is assembled by dynamic programming over positive roots (each
root contributes a geometric series per unit of multiplicity); the Weyl
sum is enumerated by a breadth-first search over the Weyl group whose
pruning is exact: along any length-increasing edge the deficit
(lam+rho) - w(lam+rho) grows inside Q+, so a branch whose deficit escapes
the box lam-mu can never contribute.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BoxTooSmall, NotDominant, NotInRootLattice, SingularWeight
from .gcm import rho
from .qpoly import QPoly
from .roots import positive_roots_with_mult


@dataclass(frozen=True)
class WeylContribution:
    word: tuple  # simple-reflection indices, leftmost acts last
    sign: int
    beta: tuple  # w * lam - mu, in Q+


def kostant_partition(beta, table):
    """K(beta;q): q-weighted count of colored positive-root partitions."""
    beta = tuple(int(x) for x in beta)
    if any(x < 0 for x in beta):
        raise ValueError("beta must lie in Q+")
    if not table.dominates(beta):
        raise BoxTooSmall("table box %r does not dominate %r" % (table.box, beta))
    roots = sorted(table.entries.items(), key=lambda rm: (sum(rm[0]), rm[0]))
    dp = {tuple(0 for _ in beta): QPoly.one()}
    for alpha, mult in roots:
        new = {}
        for v in itertools.product(*(range(b + 1) for b in beta)):
            acc = QPoly.zero()
            k = 0
            while True:
                prev = tuple(x - k * a for x, a in zip(v, alpha))
                if any(x < 0 for x in prev):
                    break
                base = dp.get(prev)
                if base is not None and base:
                    acc = acc + base * QPoly.term(k, comb(k + mult - 1, mult - 1))
                k += 1
            if acc:
                new[v] = acc
        dp = new
    return dp.get(beta, QPoly.zero())


def _lam_minus_mu_root(gcm, lam, mu):
    """lam - mu as a root vector in Q+, or None."""
    try:
        beta = gcm.weight_to_root(gcm.add_weights(lam, mu, sign=-1))
    except NotInRootLattice:
        return None
    if any(x < 0 for x in beta):
        return None
    return beta


def contributing_weyl_elements(lam, mu, gcm):
    """All w with w * lam - mu in Q+, with signs, by pruned BFS."""
    lr = gcm.add_weights(lam, rho(gcm))
    if not gcm.is_strictly_dominant(lr):
        raise NotDominant("lam + rho must be strictly dominant")
    box = _lam_minus_mu_root(gcm, lam, mu)
    if box is None:
        return []
    n = gcm.n
    start = (tuple(lr.coroot_values), tuple(0 for _ in range(n)))
    out = [WeylContribution((), 1, box)]
    seen = {start[1]}
    frontier = [(start[0], start[1], (), 1)]
    while frontier:
        nxt = []
        for cv, off, word, sign in frontier:
            for i in range(n):
                c = cv[i]
                if c <= 0:
                    continue
                if c.denominator != 1:
                    raise NotInRootLattice(
                        "Weyl orbit leaves the root-lattice offset grid"
                    )
                off2 = tuple(
                    o + (int(c) if j == i else 0) for j, o in enumerate(off)
                )
                if off2 in seen or any(o > b for o, b in zip(off2, box)):
                    continue
                cv2 = tuple(
                    cv[j] - c * gcm.matrix[j][i] for j in range(n)
                )
                seen.add(off2)
                word2 = (i,) + word
                beta = tuple(b - o for b, o in zip(box, off2))
                out.append(WeylContribution(word2, -sign, beta))
                nxt.append((cv2, off2, word2, -sign))
        frontier = nxt
    return out


def q_multiplicity(lam, mu, gcm):
    """m^lam_mu(q), the alternating Weyl sum of shifted partition counts.

    Returns the zero polynomial when lam - mu is not in Q+.
    """
    contribs = contributing_weyl_elements(lam, mu, gcm)
    if not contribs:
        return QPoly.zero()
    box = contribs[0].beta  # identity deficit is zero, so beta = lam - mu
    table = positive_roots_with_mult(gcm, box)
    total = QPoly.zero()
    for c in contribs:
        total = total + kostant_partition(c.beta, table) * c.sign
    return total


def freudenthal_dim(lam, mu, gcm):
    """dim L(lam)_mu by the Freudenthal recurrence (independent oracle)."""
    if not gcm.is_dominant(lam):
        raise NotDominant("lam must be dominant")
    box = _lam_minus_mu_root(gcm, lam, mu)
    if box is None:
        return 0
    table = positive_roots_with_mult(gcm, box)
    lam_rho = gcm.add_weights(lam, rho(gcm))
    dims = {tuple(0 for _ in box): 1}
    vecs = [
        v
        for v in itertools.product(*(range(b + 1) for b in box))
        if any(v)
    ]
    vecs.sort(key=lambda v: (sum(v), v))
    for beta in vecs:
        # <lam+rho,lam+rho> - <mu'+rho,mu'+rho> for mu' = lam - beta
        den = 2 * gcm.bilinear(lam_rho, beta) - gcm.bilinear(beta, beta)
        rhs = Fraction(0)
        for alpha, mult in table.entries.items():
            k = 1
            while True:
                prev = tuple(b - k * a for b, a in zip(beta, alpha))
                if any(x < 0 for x in prev):
                    break
                d = dims[prev]
                if d:
                    # <(lam - beta) + k alpha, alpha> = <lam - prev, alpha>
                    val = gcm.bilinear(lam, alpha) - gcm.bilinear(prev, alpha)
                    rhs += 2 * mult * val * d
                k += 1
        if den == 0:
            if rhs != 0:
                raise SingularWeight(
                    "Freudenthal denominator vanishes at lam - %r" % (beta,)
                )
            dims[beta] = 0
            continue
        d = rhs / den
        if d.denominator != 1 or d < 0:
            raise SingularWeight(
                "Freudenthal recurrence produced %r at lam - %r" % (d, beta)
            )
        dims[beta] = int(d)
    return dims[box]
