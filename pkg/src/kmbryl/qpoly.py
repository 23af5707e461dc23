"""Sparse polynomials in q with arbitrary-precision integer coefficients."""

from __future__ import annotations


class QPoly:
    """Polynomial in q, stored as {exponent: coefficient} with no zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if e < 0:
                    raise ValueError("negative exponent: %r" % (e,))
                v = c.get(e, 0) + v
                if v:
                    c[e] = v
                elif e in c:
                    del c[e]
        self.coeffs = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, exp, coeff=1):
        return cls({exp: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            elif e in out:
                del out[e]
        p = QPoly()
        p.coeffs = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = QPoly()
        p.coeffs = {e: -v for e, v in self.coeffs.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            p = QPoly()
            if other:
                p.coeffs = {e: v * other for e, v in self.coeffs.items()}
            return p
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                elif e in out:
                    del out[e]
        p = QPoly()
        p.coeffs = out
        return p

    __rmul__ = __mul__

    def __call__(self, x):
        return sum(v * x**e for e, v in self.coeffs.items())

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def items(self):
        return sorted(self.coeffs.items())

    def to_pairs(self):
        """[(exponent, coefficient-as-decimal-string)], sorted by exponent."""
        return [[e, str(v)] for e, v in self.items()]

    @classmethod
    def from_pairs(cls, pairs):
        return cls({int(e): int(v) for e, v in pairs})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                parts.append(str(v))
            else:
                qe = "q" if e == 1 else "q^%d" % e
                if v == 1:
                    parts.append(qe)
                elif v == -1:
                    parts.append("-" + qe)
                else:
                    parts.append("%d*%s" % (v, qe))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out
