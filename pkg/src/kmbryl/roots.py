"""Positive roots with multiplicities for symmetrizable GCMs.

Real roots come from a Weyl-orbit BFS of the simple roots; general
multiplicities come from Peterson's recurrence, memoized per GCM over the
componentwise box below the requested root.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import gcd

from .errors import InternalInconsistency

# (gcm key, beta) -> c_beta (the recurrence accumulator, a Fraction)
_c_cache = {}
# (gcm key, beta) -> mult
_mult_cache = {}
# gcm key -> list of betas with nonzero c (decomposition support)
_support = {}


def clear_caches():
    _c_cache.clear()
    _mult_cache.clear()
    _support.clear()


class RootTable:
    """Immutable table of positive roots with multiplicity inside a box."""

    def __init__(self, gcm, box, entries):
        self.gcm = gcm
        self.box = tuple(int(x) for x in box)
        self.entries = dict(entries)

    @property
    def height_bound(self):
        return sum(self.box)

    def dominates(self, beta):
        return all(b <= c for b, c in zip(beta, self.box))

    def to_json(self):
        return {
            "gcm_hash": self.gcm.key(),
            "box": list(self.box),
            "entries": [
                {"root": list(r), "mult": m} for r, m in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, gcm, data):
        if data.get("gcm_hash") != gcm.key():
            raise ValueError("root table belongs to a different GCM")
        entries = {
            tuple(int(x) for x in e["root"]): int(e["mult"]) for e in data["entries"]
        }
        return cls(gcm, tuple(int(x) for x in data["box"]), entries)

    def __eq__(self, other):
        return (
            isinstance(other, RootTable)
            and self.gcm == other.gcm
            and self.box == other.box
            and self.entries == other.entries
        )


def real_roots(gcm, height_bound):
    """All real positive roots of height <= height_bound (Weyl-orbit BFS)."""
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    n = gcm.n
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            c = sum(gcm.matrix[i][j] * beta[j] for j in range(n))
            img = tuple(
                b - c * (1 if j == i else 0) for j, b in enumerate(beta)
            )
            if img in seen or any(x < 0 for x in img) or sum(img) > height_bound:
                continue
            seen.add(img)
            queue.append(img)
    return seen


def _box_vectors(box):
    """All nonzero vectors 0 <= v <= box, sorted by height then lex."""
    vecs = [
        v
        for v in itertools.product(*(range(b + 1) for b in box))
        if any(v)
    ]
    vecs.sort(key=lambda v: (sum(v), v))
    return vecs


def _pairing(gcm, x, y):
    return sum(
        gcm.symmetrizer[i] * gcm.matrix[i][j] * x[i] * y[j]
        for i in range(gcm.n)
        for j in range(gcm.n)
        if gcm.matrix[i][j] != 0 and x[i] and y[j]
    )


def _divisors_of_vector(beta):
    g = gcd(*beta)
    return [n for n in range(1, g + 1) if g % n == 0]


def _compute_upto(gcm, box):
    """Fill the mult/c caches for every nonzero vector in the box."""
    key = gcm.key()
    n = gcm.n
    support = _support.setdefault(key, [])
    for beta in _box_vectors(box):
        if (key, beta) in _mult_cache:
            continue
        if sum(beta) == 1:
            _mult_cache[(key, beta)] = 1
            _c_cache[(key, beta)] = Fraction(1)
            support.append(beta)
            continue
        num = Fraction(0)
        # decompositions beta = b1 + b2; c vanishes off root multiples, so
        # it suffices to scan the recorded support for b1
        for b1 in support:
            if sum(b1) >= sum(beta) or any(a > b for a, b in zip(b1, beta)):
                continue
            b2 = tuple(b - a for b, a in zip(beta, b1))
            c2 = _c_cache.get((key, b2), Fraction(0))
            if c2 == 0:
                continue
            num += _pairing(gcm, b1, b2) * _c_cache[(key, b1)] * c2
        two_rho = 2 * sum(gcm.symmetrizer[i] * beta[i] for i in range(n))
        den = _pairing(gcm, beta, beta) - two_rho
        lower = sum(
            Fraction(_mult_cache[(key, tuple(b // d for b in beta))], d)
            for d in _divisors_of_vector(beta)
            if d > 1
        )
        if den == 0:
            if num != 0:
                raise InternalInconsistency(
                    "Peterson denominator vanishes with nonzero numerator at %r"
                    % (beta,)
                )
            mult = Fraction(0)
        else:
            mult = num / den - lower
        if mult.denominator != 1 or mult < 0:
            raise InternalInconsistency(
                "Peterson recurrence produced mult %r at %r" % (mult, beta)
            )
        _mult_cache[(key, beta)] = int(mult)
        c_beta = mult + lower
        _c_cache[(key, beta)] = c_beta
        if c_beta != 0:
            support.append(beta)


def peterson_mult(gcm, beta):
    """dim of the root space at beta, via Peterson's recurrence."""
    beta = tuple(int(x) for x in beta)
    if len(beta) != gcm.n or any(x < 0 for x in beta) or not any(beta):
        raise ValueError("beta must be a nonzero vector in Q+")
    key = gcm.key()
    if (key, beta) not in _mult_cache:
        _compute_upto(gcm, beta)
    return _mult_cache[(key, beta)]


def positive_roots_with_mult(gcm, box):
    """RootTable of every root <= box componentwise, with multiplicities."""
    box = tuple(int(x) for x in box)
    if len(box) != gcm.n or any(x < 0 for x in box):
        raise ValueError("box must be a vector in Q+")
    _compute_upto(gcm, box)
    key = gcm.key()
    entries = {
        beta: _mult_cache[(key, beta)]
        for beta in _box_vectors(box)
        if _mult_cache[(key, beta)] > 0
    }
    return RootTable(gcm, box, entries)


def table_to_json_str(table):
    return json.dumps(table.to_json(), sort_keys=True, separators=(",", ":"))
