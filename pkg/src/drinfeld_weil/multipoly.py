"""Sparse multivariate polynomials over a finite field.

Terms are a map from exponent vectors to nonzero coefficients.  The
canonical term order is graded lexicographic (ties broken by variable
index), which fixes the rendered text and LaTeX forms used in reports.
Reduction to per-variable normal form (degree < deg f in each chosen
variable) is by iterated Euclidean division by f(X_i).
"""

from __future__ import annotations

import math


class MPolyRing:
    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.constant(self.field.one())

    def constant(self, c):
        c = self.field.coerce(c)
        if c.is_zero():
            return MPoly(self, {})
        return MPoly(self, {(0,) * self.nvars: c})

    def var(self, i):
        exps = [0] * self.nvars
        exps[i] = 1
        return MPoly(self, {tuple(exps): self.field.one()})

    def term(self, exps, c):
        c = self.field.coerce(c)
        if c.is_zero():
            return MPoly(self, {})
        return MPoly(self, {tuple(exps): c})

    def from_unipoly(self, p, var_index):
        """Image of a univariate polynomial with X_{var_index} substituted."""
        terms = {}
        for k, c in enumerate(p.coeffs):
            if not c.is_zero():
                exps = [0] * self.nvars
                exps[var_index] = k
                terms[tuple(exps)] = self.field.coerce(c)
        return MPoly(self, terms)

    def __eq__(self, other):
        return (isinstance(other, MPolyRing) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"MPolyRing({self.field!r}, {self.names})"


def _term_key(exps):
    # graded lex, descending: bigger total degree first, then lex on exponents
    return (-sum(exps), tuple(-e for e in exps))


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # treat as immutable after construction

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = self.ring.field.coerce(other)
            if c.is_zero():
                return self.ring.zero()
            return MPoly(self.ring, {k: v * c for k, v in self.terms.items()})
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                acc = out.get(k)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree_in(self, var: int) -> int:
        return max((k[var] for k in self.terms), default=0)

    def reduce_mod(self, f, var: int):
        """Normal form modulo f(X_var): substitute X^n -> -(f - X^n)."""
        n = int(f.degree)
        tail = [(-f.coeff(j)) for j in range(n)]  # X^n == sum tail[j] X^j
        terms = dict(self.terms)
        while True:
            high = [k for k in terms if k[var] >= n]
            if not high:
                break
            for k in high:
                # an earlier rewrite in this sweep may have cancelled k
                c = terms.pop(k, None)
                if c is None:
                    continue
                base = list(k)
                base[var] -= n
                for j, a in enumerate(tail):
                    if a.is_zero():
                        continue
                    kk = list(base)
                    kk[var] += j
                    kk = tuple(kk)
                    acc = terms.get(kk)
                    s = c * a if acc is None else acc + c * a
                    if s.is_zero():
                        terms.pop(kk, None)
                    else:
                        terms[kk] = s
        return MPoly(self.ring, terms)

    def hasse_deriv(self, var: int, l: int):
        """l-th Hasse-Schmidt derivative in one variable:
        X^e -> C(e, l) X^(e-l), binomials reduced into the field."""
        if l == 0:
            return self
        out = {}
        for exps, c in self.terms.items():
            e = exps[var]
            if e < l:
                continue
            cc = c * math.comb(e, l)
            if cc.is_zero():
                continue
            kk = list(exps)
            kk[var] = e - l
            kk = tuple(kk)
            acc = out.get(kk)
            s = cc if acc is None else acc + cc
            if s.is_zero():
                out.pop(kk, None)
            else:
                out[kk] = s
        return MPoly(self.ring, out)

    def coeff_in_var(self, var: int, k: int):
        """Coefficient of X_var^k, as a polynomial with X_var removed
        (exponent zeroed) in the same ring."""
        out = {}
        for exps, c in self.terms.items():
            if exps[var] == k:
                kk = list(exps)
                kk[var] = 0
                out[tuple(kk)] = c
        return MPoly(self.ring, out)

    def permute_vars(self, perm):
        """Relabel variables: new exponent of position perm[i] is old i."""
        out = {}
        for exps, c in self.terms.items():
            kk = [0] * len(exps)
            for i, e in enumerate(exps):
                kk[perm[i]] = e
            out[tuple(kk)] = c
        return MPoly(self.ring, out)

    def inject(self, ring, positions):
        """Place variable i of self at positions[i] of a larger ring."""
        out = {}
        for exps, c in self.terms.items():
            kk = [0] * ring.nvars
            for i, e in enumerate(exps):
                kk[positions[i]] = e
            out[tuple(kk)] = ring.field.coerce(c)
        return MPoly(ring, out)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self.ring.constant(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def text(self) -> str:
        """Canonical text form, e.g. "X1*X2 + 2"."""
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self._sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = self.ring.names[i]
                factors.append(name if e == 1 else f"{name}^{e}")
            cs = str(c)
            paren = ("+" in cs or " " in cs)
            if not factors:
                parts.append(f"({cs})" if paren else cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                head = f"({cs})" if paren else cs
                parts.append("*".join([head] + factors))
        return " + ".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self._sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = self.ring.names[i]
                if name.startswith("X") and name[1:].isdigit():
                    name = f"X_{{{name[1:]}}}"
                factors.append(name if e == 1 else f"{name}^{{{e}}}")
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append(" ".join(factors))
            else:
                parts.append(" ".join([cs] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self.text()})"
