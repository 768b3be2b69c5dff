"""f-remainders, Hasse-Schmidt derivatives, and truncated Anderson
generating functions with formal lattice symbols.

The f-remainder of a rational function in t (coefficients in a field K,
typically F_q(theta)) is the unique polynomial of degree < deg f
representing it modulo f: the denominator is cleared by its inverse
mod f, so higher-order poles need no special casing.

A truncated generating function is a finitely supported map from
q-power monomials in formal symbols (Z^{q^i}, products such as
Z1^{q^a} Z2^{q^b}, possibly with repeats) to rational functions in t.
Every value's denominator is a product of factors (theta^{q^j} - t).
Truncation is tracked per symbol: caps[Z] = N means every coefficient
involving Z^{q^k} with k <= N is exact (structural zeros included).
Operations that could produce monomials above a cap drop them, and
comparisons only assert equality inside the shared guard band.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PoleOnModulus
from .fields import embed, make_field
from .modules import DrinfeldModule, ExpCoeffs, exp_coeffs
from .multipoly import MPoly, MPolyRing
from .polys import FracField, PolyRing, RatFunc, UniPoly, inv_mod, lift_poly, poly_gcd
from .weil_ops import dual_map

INF_CAP = 10 ** 9


# ---------------------------------------------------------------------------
# Remainders.

@dataclass(frozen=True)
class RemainderPoly:
    """Polynomial of degree < deg f, as its coefficient tuple."""
    f: UniPoly
    coeffs: tuple

    def coeff(self, i):
        return self.coeffs[i]

    def as_poly(self, ring: PolyRing) -> UniPoly:
        return ring.poly(list(self.coeffs))


def ev_remainder(w, f: UniPoly) -> RemainderPoly:
    """f-remainder of a polynomial or rational function in t."""
    n = int(f.degree)
    if isinstance(w, UniPoly):
        ring = w.ring
        f_l = f if f.ring == ring else lift_poly(f, ring)
        rem = w % f_l
        return RemainderPoly(f, tuple(rem.coeff(i) for i in range(n)))
    ring = w.num.ring
    f_l = f if f.ring == ring else lift_poly(f, ring)
    if poly_gcd(w.den, f_l).degree != 0:
        raise PoleOnModulus(f"denominator {w.den} shares a root with {f}")
    rem = (w.num * inv_mod(w.den, f_l)) % f_l
    return RemainderPoly(f, tuple(rem.coeff(i) for i in range(n)))


def hermite_jets(omega, p: UniPoly, k: int):
    """Roots of p in its splitting field and the jets d_l(omega) there.

    Returns (big_field, embedding, roots, jets) with jets[(j, l)] the
    l-th Hasse-Schmidt derivative of omega at root j, for l < k."""
    Fq = p.ring.field
    d = int(p.degree)
    big = Fq if d == 1 else make_field(Fq.p, Fq.e * d)
    emb = embed(Fq, big)
    ring_big = PolyRing(big, p.ring.var)
    p_big = lift_poly(p, ring_big, emb)
    roots = [x for x in big.elements() if p_big(x).is_zero()]
    if len(roots) != d:
        raise AssertionError("irreducible modulus expected")
    derivs = [hasse_schmidt(omega, l) for l in range(k)]
    jets = {}
    for j, zeta in enumerate(roots):
        for l in range(k):
            dv = derivs[l]
            if isinstance(dv, UniPoly):
                jets[(j, l)] = lift_poly(dv, ring_big, emb)(zeta)
            else:
                num = lift_poly(dv.num, ring_big, emb)(zeta)
                den = lift_poly(dv.den, ring_big, emb)(zeta)
                if den.is_zero():
                    raise PoleOnModulus("omega has a pole on a root of p")
                jets[(j, l)] = num / den
    return big, emb, roots, jets


def remainder_via_interpolation(p: UniPoly, k: int, roots, jets) -> RemainderPoly:
    """Unique polynomial of degree < dk matching all Hasse-Schmidt jets
    delta_l at every root of p (l < k): Lagrange data for k = 1, Hermite
    data beyond.  Coefficients land in the splitting field of p."""
    import math

    from . import linalg

    d = int(p.degree)
    big = roots[0].field
    nunk = d * k
    rows, rhs = [], []
    for j, zeta in enumerate(roots):
        zpow = [big.one()]
        for _ in range(nunk):
            zpow.append(zpow[-1] * zeta)
        for l in range(k):
            row = []
            for m in range(nunk):
                row.append(zpow[m - l] * math.comb(m, l) if m >= l else big.zero())
            if (j, l) not in jets:
                raise ValueError("incomplete jet data")
            rows.append(row)
            rhs.append(jets[(j, l)])
    sol = linalg.solve(rows, rhs, big)
    if sol is None or linalg.rank(rows, big) != nunk:
        raise ValueError("inconsistent or incomplete jet data")
    fk = p ** k
    return RemainderPoly(fk, tuple(sol))


# ---------------------------------------------------------------------------
# Hasse-Schmidt derivatives.

def hasse_schmidt(w, l: int):
    """l-th Taylor coefficient of w(t + X) in X.

    Accepts a polynomial, a rational function, or a truncated generating
    function (termwise).  Uses integer binomials reduced into the field,
    valid in any characteristic."""
    if l == 0:
        return w
    if isinstance(w, UniPoly):
        return w.hasse_deriv(l)
    if isinstance(w, TruncAGF):
        return TruncAGF(w.vfield, w.q,
                        {m: hasse_schmidt(v, l) for m, v in w.terms.items()},
                        dict(w.caps))
    # rational function: series division of num(t+X) by den(t+X)
    KT = w.field
    num_jets = [KT.coerce(w.num.hasse_deriv(j)) for j in range(l + 1)]
    den_jets = [KT.coerce(w.den.hasse_deriv(j)) for j in range(l + 1)]
    inv0 = KT.one() / den_jets[0]
    cs = []
    for j in range(l + 1):
        acc = num_jets[j]
        for i in range(j):
            acc = acc - cs[i] * den_jets[j - i]
        cs.append(acc * inv0)
    return cs[l]


# ---------------------------------------------------------------------------
# q-power monomials in formal lattice symbols.

def mono_mul(m1, m2):
    return tuple(sorted(m1 + m2))


def mono_shift(m, k: int):
    return tuple((sym, i + k) for sym, i in m)


def mono_in_band(m, caps) -> bool:
    return all(sym in caps and i <= caps[sym] for sym, i in m)


def mono_str(m) -> str:
    if not m:
        return "1"
    return "*".join(f"{sym}^q^{i}" for sym, i in m)


def _merge_caps(a, b):
    out = dict(a)
    for sym, cap in b.items():
        out[sym] = min(out.get(sym, INF_CAP), cap)
    return out


def band_monomials(caps):
    """All monomials with each symbol appearing exactly once, exponents
    within the caps, in deterministic order."""
    syms = sorted(caps)
    ranges = [range(caps[s] + 1) for s in syms]
    for combo in itertools.product(*ranges):
        yield tuple(sorted(zip(syms, combo)))


class _SymSeries:
    """Shared mechanics of QExpansion and TruncAGF."""

    __slots__ = ("vfield", "q", "terms", "caps")

    def __init__(self, vfield, q, terms, caps):
        self.vfield = vfield
        self.q = q
        self.terms = {m: v for m, v in terms.items() if not v.is_zero()}
        self.caps = caps

    def _make(self, terms, caps):
        return type(self)(self.vfield, self.q, terms, caps)

    def is_zero(self):
        return not self.terms

    def coeff(self, mono):
        v = self.terms.get(tuple(sorted(mono)))
        return v if v is not None else self.vfield.zero()

    def __add__(self, other):
        if type(other) is not type(self) or other.vfield != self.vfield:
            raise ValueError("series mismatch")
        out = dict(self.terms)
        for m, v in other.terms.items():
            s = out.get(m)
            sv = v if s is None else s + v
            if sv.is_zero():
                out.pop(m, None)
            else:
                out[m] = sv
        return self._make(out, _merge_caps(self.caps, other.caps))

    def __neg__(self):
        return self._make({m: -v for m, v in self.terms.items()}, dict(self.caps))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if type(other) is type(self):
            out = {}
            for m1, v1 in self.terms.items():
                for m2, v2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    v = v1 * v2
                    s = out.get(m)
                    sv = v if s is None else s + v
                    if sv.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = sv
            return self._make(out, _merge_caps(self.caps, other.caps))
        # scalar from the value field (or coercible into it)
        c = self._scalar(other)
        if c.is_zero():
            return self._make({}, dict(self.caps))
        return self._make({m: v * c for m, v in self.terms.items()}, dict(self.caps))

    __rmul__ = __mul__

    def frobenius(self, k: int):
        """Raise coefficients to the q^k power and shift every exponent."""
        if k == 0:
            return self
        out = {mono_shift(m, k): self._frob_value(v, k) for m, v in self.terms.items()}
        caps = {sym: cap + k for sym, cap in self.caps.items()}
        return self._make(out, caps)

    def prune(self, caps=None):
        caps = caps if caps is not None else self.caps
        out = {m: v for m, v in self.terms.items() if mono_in_band(m, caps)}
        return self._make(out, dict(caps))

    def mismatches(self, other):
        """Monomials inside the shared guard band where coefficients differ."""
        caps = _merge_caps(self.caps, other.caps)
        bad = []
        for m in set(self.terms) | set(other.terms):
            if mono_in_band(m, caps) and self.coeff(m) != other.coeff(m):
                bad.append(m)
        return sorted(bad)

    def eq_on_band(self, other) -> bool:
        return not self.mismatches(other)

    def dump(self):
        """Deterministic JSON-friendly map monomial -> value string."""
        return {mono_str(m): str(v) for m, v in sorted(self.terms.items())}

    def __eq__(self, other):
        return (type(other) is type(self) and self.vfield == other.vfield
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def __repr__(self):
        inner = " + ".join(f"({v})*{mono_str(m)}" for m, v in sorted(self.terms.items()))
        return f"{type(self).__name__}({inner or '0'})"


class QExpansion(_SymSeries):
    """Finitely supported q-expansion with coefficients in F_q(theta)."""

    def _scalar(self, c):
        return self.vfield.coerce(c)

    def _frob_value(self, v, k):
        return v ** (self.q ** k)


class TruncAGF(_SymSeries):
    """Truncated generating function: values are rational functions in t."""

    def _scalar(self, c):
        if isinstance(c, RatFunc) and c.field == self.vfield.ring.field:
            # a constant from K sits inside K(t)
            return self.vfield.coerce(self.vfield.ring.constant(c))
        return self.vfield.coerce(c)

    def _frob_value(self, v, k):
        qk = self.q ** k
        num = v.num.map_coeffs(lambda c: c ** qk)
        den = v.den.map_coeffs(lambda c: c ** qk)
        return RatFunc(v.field, num, den)


def twist(w, k: int):
    """k-th Frobenius twist: coefficients to the q^k, poles and lattice
    monomials shifted accordingly."""
    return w.frobenius(k)


# ---------------------------------------------------------------------------
# Generating functions and their remainders.

def t_fraction_field(M: DrinfeldModule) -> FracField:
    return FracField(PolyRing(M.base, "t"))


def agf(M: DrinfeldModule, sym: str, N: int, ec: ExpCoeffs | None = None) -> TruncAGF:
    """Truncated generating function sum_{i<=N} e_i Z^{q^i} / (theta^{q^i} - t)."""
    ec = ec or exp_coeffs(M, N)
    if ec.depth() < N:
        raise ValueError("exponential data shallower than requested depth")
    K = M.base
    KT = t_fraction_field(M)
    Rt = KT.ring
    terms = {}
    for i in range(N + 1):
        ei = ec.e[i]
        if ei.is_zero():
            continue
        den = Rt.poly([M.theta ** (M.q ** i), -K.one()])
        terms[((sym, i),)] = RatFunc(KT, Rt.constant(ei), den)
    return TruncAGF(KT, M.q, terms, {sym: N})


def exp_qexp(M: DrinfeldModule, c, sym: str, N: int, ec: ExpCoeffs | None = None) -> QExpansion:
    """Truncated exp_phi(c * Z) = sum_{i<=N} e_i c^{q^i} Z^{q^i}, computed
    directly from the exponential data (no truncation loss)."""
    ec = ec or exp_coeffs(M, N)
    terms = {}
    for i in range(N + 1):
        v = ec.e[i] * c ** (M.q ** i)
        if not v.is_zero():
            terms[((sym, i),)] = v
    return QExpansion(M.base, M.q, terms, {sym: N})


def phi_apply_qexp(M: DrinfeldModule, a, qe: QExpansion) -> QExpansion:
    """Drinfeld action of a(x) on a q-expansion, pruned to its guard band."""
    tw = M.phi_of(a)
    acc = QExpansion(qe.vfield, qe.q, {}, dict(qe.caps))
    for i, c in enumerate(tw.coeffs):
        if c.is_zero():
            continue
        acc = acc + qe.frobenius(i) * c
    return acc.prune(_merge_caps(acc.caps, qe.caps))


def agf_remainder(w: TruncAGF, f: UniPoly):
    """f-remainder of a truncated generating function: a list of deg f
    q-expansions (the coefficients of t^0 ... t^{n-1})."""
    n = int(f.degree)
    K = w.vfield.ring.field
    slots = [dict() for _ in range(n)]
    for m, v in w.terms.items():
        rem = ev_remainder(v, f)
        for i in range(n):
            c = rem.coeffs[i]
            if not c.is_zero():
                slots[i][m] = c
    return [QExpansion(K, w.q, slot, dict(w.caps)) for slot in slots]


def c_coeffs(M: DrinfeldModule, f: UniPoly, N: int, sym: str = "Z",
             ec: ExpCoeffs | None = None):
    """Coefficients C_{z,0} ... C_{z,n-1} of the f-remainder of the
    truncated generating function, as exact q-expansions."""
    ec = ec or exp_coeffs(M, N)
    return agf_remainder(agf(M, sym, N, ec), f)


def moore_series(ws) -> TruncAGF:
    """Moore determinant of generating functions: det(twist(w_j, i))."""
    ws = list(ws)
    r = len(ws)
    if r == 1:
        return ws[0]
    vfield, q = ws[0].vfield, ws[0].q
    acc = None
    for perm in itertools.permutations(range(r)):
        inversions = sum(1 for i in range(r) for j in range(i + 1, r)
                         if perm[i] > perm[j])
        prod = ws[perm[0]]
        for i in range(1, r):
            prod = prod * ws[perm[i]].frobenius(i)
        if inversions % 2:
            prod = -prod
        acc = prod if acc is None else acc + prod
    return acc


def mp_coeffs(p: UniPoly, l: int):
    """Coefficients E_i^(l)(x) of t^i in O_p^(2)(x, t)^(l+1) mod p(t),
    i < deg p; each has degree < (l+1) deg p."""
    field = p.ring.field
    d = int(p.degree)
    ring = MPolyRing(field, ("x", "t"))
    terms = {}
    for k in range(d):
        dk = dual_map(p, k)
        for j, c in enumerate(dk.coeffs):
            if not c.is_zero():
                terms[(j, k)] = c
    O = MPoly(ring, terms)
    P = (O ** (l + 1)).reduce_mod(p, 1)
    rx = PolyRing(field, "x")
    out = []
    for i in range(d):
        ci = P.coeff_in_var(1, i)
        coeffs = [field.zero()] * (ci.degree_in(0) + 1 if not ci.is_zero() else 0)
        for exps, c in ci.terms.items():
            coeffs[exps[0]] = c
        out.append(rx.poly(coeffs))
    return out
