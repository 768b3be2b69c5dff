"""Drinfeld modules over finite A-fields and over F_q(theta).

A module of rank r is the F_q-algebra map sending x to
phi_x = theta + g_1 tau + ... + g_r tau^r with g_r nonzero, tau the
q-power Frobenius.  Finite bases F_{q^m} support torsion computation
(the kernel of phi_f found by exact F_q-linear algebra inside an
explicitly built splitting extension); the rational base F_q(theta)
supports the exponential coefficients used by generating functions.

The exponential data stores e_i = 1/D_i (so that e_i = 0 is allowed,
e.g. when g_1 = 0) with e_0 = 1 and

    e_i (theta^{q^i} - theta) = sum_{j=1}^{min(i,r)} g_j e_{i-j}^{q^j},

obtained by matching z^{q^i} coefficients in phi_x(exp(z)) = exp(theta z).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import BadCharacteristic, SplittingFieldTooLarge
from .fields import Embedding, FiniteField, RelativeBasis, embed, make_field, min_poly_over
from .polys import FracField, PolyRing, UniPoly, poly_gcd
from .twisted import TwistedPoly


class DrinfeldModule:
    def __init__(self, q_field: FiniteField, base, theta, g, embed_scalars=None):
        if embed_scalars is None:
            if isinstance(base, FiniteField) and base == q_field:
                embed_scalars = lambda c: c  # noqa: E731
            elif isinstance(base, FracField) and base.ring.field == q_field:
                embed_scalars = base.coerce
            else:
                raise ValueError("embed_scalars required for this base field")
        self.q_field = q_field
        self.q = q_field.order
        self.base = base
        self.embed_scalars = embed_scalars
        self.theta = theta
        self.g = tuple(g)
        if not self.g or self.g[-1].is_zero():
            raise ValueError("top coefficient g_r must be nonzero")

    @property
    def rank(self) -> int:
        return len(self.g)

    def x_ring(self) -> PolyRing:
        return PolyRing(self.q_field, "x")

    def phi_x(self) -> TwistedPoly:
        return TwistedPoly(self.base, self.q, (self.theta,) + self.g)

    def phi_of(self, a) -> TwistedPoly:
        """Image of a(x) under the module map (Horner in the twisted ring)."""
        if not isinstance(a, UniPoly):
            a = self.x_ring().poly(a)
        tw_x = self.phi_x()
        acc = TwistedPoly(self.base, self.q, [])
        for c in reversed(a.coeffs):
            acc = acc * tw_x + TwistedPoly(self.base, self.q, [self.embed_scalars(c)])
        return acc

    def phi_apply(self, a, mu):
        """phi_a evaluated at mu (the diamond action of a(x))."""
        return self.phi_of(a).apply(mu)

    def exterior(self) -> "DrinfeldModule":
        """Rank-one module theta + (-1)^(r-1) g_r tau."""
        sign = 1 if (self.rank - 1) % 2 == 0 else -1
        g1 = self.g[-1] if sign == 1 else -self.g[-1]
        return DrinfeldModule(self.q_field, self.base, self.theta, (g1,),
                              self.embed_scalars)

    def describe(self):
        if isinstance(self.base, FiniteField):
            return {"field": self.base.describe(),
                    "q": self.q,
                    "theta": list(self.theta.coeffs),
                    "g": [list(gi.coeffs) for gi in self.g]}
        return {"base": "F_q(theta)", "q": self.q,
                "theta": str(self.theta), "g": [str(gi) for gi in self.g]}


@dataclass
class ExpCoeffs:
    """Truncated exponential data e_0..e_N with e_i = 1/D_i."""
    module: DrinfeldModule
    e: tuple

    def depth(self) -> int:
        return len(self.e) - 1

    def recursion_residual(self, i: int):
        """e_i (theta^{q^i} - theta) - sum_j g_j e_{i-j}^{q^j}; zero when consistent."""
        M = self.module
        q, theta = M.q, M.theta
        acc = self.e[i] * (theta ** (q ** i) - theta)
        for j in range(1, min(i, M.rank) + 1):
            acc = acc - M.g[j - 1] * self.e[i - j] ** (q ** j)
        return acc


def exp_coeffs(M: DrinfeldModule, N: int) -> ExpCoeffs:
    if not isinstance(M.base, FracField):
        raise ValueError("exponential coefficients need the F_q(theta) base")
    K = M.base
    q, theta = M.q, M.theta
    e = [K.one()]
    for i in range(1, N + 1):
        rhs = K.zero()
        for j in range(1, min(i, M.rank) + 1):
            rhs = rhs + M.g[j - 1] * e[i - j] ** (q ** j)
        e.append(rhs / (theta ** (q ** i) - theta))
    return ExpCoeffs(M, tuple(e))


# ---------------------------------------------------------------------------
# Torsion over finite A-fields.

@dataclass
class TorsionBasis:
    module: DrinfeldModule
    module_ext: DrinfeldModule
    field_ext: FiniteField
    embed_base: Embedding
    rel: RelativeBasis
    points: list
    f: UniPoly
    s: int

    def dimension(self) -> int:
        return len(self.points)

    def cardinality(self) -> int:
        return self.module.q ** len(self.points)

    def all_points(self):
        """Every element of the torsion module, deterministically ordered."""
        qf = self.module.q_field
        scalars = list(qf.elements())
        emb = self.module_ext.embed_scalars
        for combo in itertools.product(scalars, repeat=len(self.points)):
            acc = self.field_ext.zero()
            for c, pt in zip(combo, self.points):
                if not c.is_zero():
                    acc = acc + emb(c) * pt
            yield acc

    def describe(self):
        return {"splitting_field": self.field_ext.describe(),
                "s": self.s,
                "cardinality": self.cardinality(),
                "basis": [list(pt.coeffs) for pt in self.points]}


def characteristic_poly(M: DrinfeldModule) -> UniPoly:
    """Minimal polynomial of theta over F_q: the A-characteristic."""
    if not isinstance(M.base, FiniteField):
        raise ValueError("characteristic defined for finite A-fields only")
    rel = RelativeBasis(M.base, M.q_field, M.embed_scalars)
    coeffs = min_poly_over(M.theta, rel)
    return M.x_ring().poly(coeffs)


def _kernel_in_field(M_big: DrinfeldModule, f: UniPoly, rel: RelativeBasis):
    """F_q-basis of ker(phi_f) inside the given base field of M_big."""
    phi_f = M_big.phi_of(f)
    big = M_big.base
    dim = rel.dim
    w = big.gen()
    wpow = [big.one()]
    for _ in range(dim - 1):
        wpow.append(wpow[-1] * w)
    cols = [rel.coords(phi_f.apply(b)) for b in wpow]
    mat = [[cols[c][r_] for c in range(dim)] for r_ in range(dim)]
    kernel = linalg.nullspace(mat, M_big.q_field)
    return [rel.lift(vec) for vec in kernel]


def torsion_basis(M: DrinfeldModule, f: UniPoly, s_cap: int = 12) -> TorsionBasis:
    """Least splitting extension F_{q^{ms}} where phi_f has full kernel.

    Candidate extensions are scanned in increasing degree; the result is
    the smallest s whose kernel reaches F_q-dimension r * deg f."""
    if not isinstance(M.base, FiniteField):
        raise ValueError("torsion requires a finite A-field base")
    if not f.is_monic():
        raise ValueError("modulus must be monic")
    char = characteristic_poly(M)
    if poly_gcd(f, char).degree != 0:
        raise BadCharacteristic(f"f shares the factor gcd(f, {char}) with the A-characteristic")
    want = M.rank * int(f.degree)
    base = M.base
    for s in range(1, s_cap + 1):
        big = base if s == 1 else make_field(base.p, base.e * s)
        emb_base = embed(base, big)
        comp = (lambda eb: (lambda c: eb(M.embed_scalars(c))))(emb_base)
        rel = RelativeBasis(big, M.q_field, comp)
        M_ext = DrinfeldModule(M.q_field, big, emb_base(M.theta),
                               [emb_base(gi) for gi in M.g], comp)
        points = _kernel_in_field(M_ext, f, rel)
        if len(points) == want:
            return TorsionBasis(M, M_ext, big, emb_base, rel, points, f, s)
        if len(points) > want:
            raise AssertionError("kernel larger than the torsion rank allows")
    raise SplittingFieldTooLarge(f"no splitting field found with s <= {s_cap}")


def kernel_in_splitting_field(M_like: DrinfeldModule, f: UniPoly, rel: RelativeBasis):
    """Kernel of phi_f for a module already living in a chosen field
    (used to locate the exterior module's torsion inside the splitting
    field of the original module)."""
    return _kernel_in_field(M_like, f, rel)


def a_module_basis(tb: TorsionBasis):
    """An A/f-module basis (mu_1 ... mu_r) of the torsion module.

    Scans points in deterministic order, keeping a point only when its
    A-orbit enlarges the F_q-span by a full deg f dimensions."""
    M, f = tb.module, tb.f
    n = int(f.degree)
    r = M.rank
    xp = M.x_ring().gen()
    powers = [M.x_ring().one()]
    for _ in range(n - 1):
        powers.append(powers[-1] * xp)
    chosen = []
    span_rows = []
    current_rank = 0
    for pt in tb.all_points():
        if pt.is_zero():
            continue
        cand_rows = []
        for a in powers:
            img = tb.module_ext.phi_of(a).apply(pt)
            cand_rows.append(tb.rel.coords(img))
        new_rank = linalg.rank(span_rows + cand_rows, M.q_field)
        if new_rank == current_rank + n:
            chosen.append(pt)
            span_rows = span_rows + cand_rows
            current_rank = new_rank
            if len(chosen) == r:
                return chosen
    raise AssertionError("no A/f-module basis found")
