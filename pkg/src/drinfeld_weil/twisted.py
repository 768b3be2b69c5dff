"""Twisted (Ore) polynomials over a field K with tau the q-power map.

Multiplication follows tau * c = c^q * tau; coefficients may live in a
finite field or in F_q(theta), anything whose elements support field
arithmetic and integer powers.
"""

from __future__ import annotations


class TwistedPoly:
    __slots__ = ("field", "q", "coeffs")

    def __init__(self, field, q: int, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.q = q
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def _check(self, other):
        if not isinstance(other, TwistedPoly):
            raise TypeError("expected TwistedPoly")
        if other.field != self.field or other.q != self.q:
            raise ValueError("twisted ring mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TwistedPoly(self.field, self.q, out)

    def __neg__(self):
        return TwistedPoly(self.field, self.q, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if not isinstance(other, TwistedPoly):
            c = self.field.coerce(other)
            return TwistedPoly(self.field, self.q, [a * c for a in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return TwistedPoly(self.field, self.q, [])
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            qi = self.q ** i
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b ** qi
        return TwistedPoly(self.field, self.q, out)

    def __rmul__(self, other):
        # scalar * twisted: scalars commute onto the left coefficient slot
        c = self.field.coerce(other)
        return TwistedPoly(self.field, self.q, [c * a for a in self.coeffs])

    def __pow__(self, n: int):
        result = TwistedPoly(self.field, self.q, [self.field.one()])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, mu):
        """Evaluate as the additive polynomial sum c_i mu^(q^i)."""
        acc = None
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = c * mu ** (self.q ** i)
            acc = term if acc is None else acc + term
        if acc is None:
            return self.field.zero() if not hasattr(mu, "field") else mu - mu
        return acc

    def map_coeffs(self, fn, field=None):
        return TwistedPoly(field or self.field, self.q, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, TwistedPoly) and self.field == other.field
                and self.q == other.q and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.q, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "TwistedPoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            head = "" if i == 0 else ("tau" if i == 1 else f"tau^{i}")
            cs = str(c)
            if head and cs == "1":
                parts.append(head)
            else:
                parts.append(f"({cs})" + (f"*{head}" if head else ""))
        return "TwistedPoly(" + " + ".join(parts) + ")"


def twisted_mul(a: TwistedPoly, b: TwistedPoly) -> TwistedPoly:
    return a * b
