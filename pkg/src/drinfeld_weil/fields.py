"""Exact arithmetic in small finite fields F_{p^e}.

A field is a descriptor (p, e, modulus) plus an element factory.  The
modulus is a monic irreducible of degree e over F_p given as a
coefficient list, constant term first; elements are residue polynomials
of degree < e stored as length-e tuples of ints.  All values are
immutable, equality is structural, and every operation is a pure
function, so instances can be shared freely between threads.
"""

from __future__ import annotations

import itertools

from . import linalg


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# int-list polynomial helpers over F_p (constant term first), used for
# modulus bookkeeping only.  Element arithmetic lives on FieldElem.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, m, p):
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while a and len(a) - 1 >= dm:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        _trim(a)
    return a


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while _trim(b):
        a, b = b, _pmod(a, b, p)
    return a


def _ppow_mod(base, exp, m, p):
    result = [1]
    base = _pmod(list(base), m, p)
    while exp:
        if exp & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        exp >>= 1
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(m, p):
    """Deterministic irreducibility test for a monic m over F_p."""
    d = len(m) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    # x^{p^d} == x mod m, and x^{p^{d/l}} - x coprime to m for prime l | d
    frob = [0, 1]
    powers = {}
    for k in range(1, d + 1):
        frob = _ppow_mod(frob, p, m, p)
        powers[k] = frob
    xd = list(powers[d])
    diff_d = _trim([((xd[i] if i < len(xd) else 0) - (1 if i == 1 else 0)) % p
                    for i in range(max(len(xd), 2))])
    if _pmod(diff_d, m, p):
        return False
    for ell in _prime_divisors(d):
        xk = powers[d // ell]
        diff = _trim([((xk[i] if i < len(xk) else 0) - (1 if i == 1 else 0)) % p
                      for i in range(max(len(xk), 2))])
        g = _pgcd(list(m), diff, p)
        if len(g) - 1 != 0:
            return False
    return True


def _smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Coefficient tuples (a_0, ..., a_{e-1}) are compared left to right.
    """
    for low in itertools.product(range(p), repeat=e):
        m = list(low) + [1]
        if _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElem:
    """Element of a FiniteField: residue polynomial, constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs  # tuple of length field.e, ints in [0, p)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.order - 2)

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.elem(other)
        return (isinstance(other, FieldElem) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        if self.field.e == 1:
            return str(self.coeffs[0])
        parts = []
        for k in range(self.field.e - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            if k == 0:
                parts.append(str(a))
            else:
                var = "y" if k == 1 else f"y^{k}"
                parts.append(var if a == 1 else f"{a}*{var}")
        return " + ".join(parts) if parts else "0"


class FiniteField:
    """F_{p^e} = F_p[y] / (modulus)."""

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = _smallest_irreducible(p, e)
        modulus = [c % p for c in modulus]
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.e = e
        self.modulus = tuple(modulus)
        self.order = p ** e
        # reduction table: y^k for k in [e, 2e-2]
        red = []
        cur = [(-c) % p for c in modulus[:-1]]  # y^e
        red.append(tuple(cur))
        for _ in range(e - 2):
            cur = cur[:]  # y^(k+1) = y * y^k reduced
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                cur = [(a - carry * c) % p for a, c in zip(cur, modulus[:-1])]
            red.append(tuple(cur))
        self._red = red

    def elem(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError("field mismatch")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.e - 1)
            return FieldElem(self, tuple(coeffs))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.e:
            raise ValueError("coefficient list longer than extension degree")
        coeffs += [0] * (self.e - len(coeffs))
        return FieldElem(self, tuple(coeffs))

    # hook for generic code that coerces scalars into a field
    coerce = elem

    def zero(self) -> FieldElem:
        return self.elem(0)

    def one(self) -> FieldElem:
        return self.elem(1)

    def gen(self) -> FieldElem:
        """Class of y (equals 0 + 1*y); for e = 1 this is 1."""
        if self.e == 1:
            return self.one()
        return self.elem([0, 1])

    def elements(self):
        """All p^e elements, in lexicographic coefficient order."""
        for digits in itertools.product(range(self.p), repeat=self.e):
            yield FieldElem(self, digits)

    def _mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p, e = self.p, self.e
        if e == 1:
            return FieldElem(self, ((a.coeffs[0] * b.coeffs[0]) % p,))
        conv = [0] * (2 * e - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:e]]
        for k in range(e, 2 * e - 1):
            c = conv[k] % p
            if c:
                table = self._red[k - e]
                out = [(o + c * t) % p for o, t in zip(out, table)]
        return FieldElem(self, tuple(out))

    def describe(self):
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


def make_field(p: int, e: int = 1, modulus=None) -> FiniteField:
    """Validated field descriptor; picks the smallest modulus when omitted."""
    return FiniteField(p, e, modulus)


def field_from_json(obj) -> FiniteField:
    return make_field(int(obj["p"]), int(obj["e"]), obj.get("modulus"))


# ---------------------------------------------------------------------------
# Embeddings and relative vector-space structure.

class Embedding:
    """Ring embedding of a subfield into an extension, gen -> image."""

    def __init__(self, small: FiniteField, big: FiniteField, image: FieldElem):
        self.small = small
        self.big = big
        self.image = image
        pows = [big.one()]
        for _ in range(small.e - 1):
            pows.append(pows[-1] * image)
        self._pows = pows

    def __call__(self, x: FieldElem) -> FieldElem:
        if x.field != self.small:
            raise ValueError("element not in source field")
        acc = self.big.zero()
        for c, w in zip(x.coeffs, self._pows):
            if c:
                acc = acc + w * c
        return acc


def _frobenius_matrix(field: FiniteField, k: int):
    """Matrix of x -> x^(p^k) on the F_p-basis {y^i}, columns = images."""
    fp = FiniteField(field.p)
    cols = []
    for i in range(field.e):
        img = field.elem([0] * i + [1]) ** (field.p ** k)
        cols.append(img.coeffs)
    return [[fp.elem(cols[j][i]) for j in range(field.e)] for i in range(field.e)]


def embed(small: FiniteField, big: FiniteField) -> Embedding:
    """The embedding sending small.gen() to its smallest root in big."""
    if small == big:
        return Embedding(small, big, big.gen())
    if small.p != big.p or big.e % small.e != 0:
        raise ValueError("no embedding: source is not a subfield")
    if small.e == 1:
        return Embedding(small, big, big.one())
    fp = FiniteField(small.p)
    frob = _frobenius_matrix(big, small.e)
    mat = [[frob[i][j] - (fp.one() if i == j else fp.zero()) for j in range(big.e)]
           for i in range(big.e)]
    kernel = linalg.nullspace(mat, fp)
    roots = []
    for digits in itertools.product(range(small.p), repeat=len(kernel)):
        vec = [0] * big.e
        for d, basis_vec in zip(digits, kernel):
            if d:
                for i, b in enumerate(basis_vec):
                    vec[i] = (vec[i] + d * b.coeffs[0]) % big.p
        cand = big.elem(vec)
        # evaluate small's modulus at cand
        acc = big.zero()
        for c in reversed(small.modulus):
            acc = acc * cand + c
        if acc.is_zero():
            roots.append(cand)
    if not roots:
        raise AssertionError("subfield root not found")
    img = min(roots, key=lambda x: x.coeffs)
    return Embedding(small, big, img)


class RelativeBasis:
    """big as a vector space over small, with basis {big.gen()^i}.

    Provides coordinates of big elements as vectors over small; the
    power basis works because big.gen() generates big over any subfield.
    """

    def __init__(self, big: FiniteField, small: FiniteField, emb: Embedding):
        if big.e % small.e != 0:
            raise ValueError("not an extension")
        self.big = big
        self.small = small
        self.emb = emb
        self.dim = big.e // small.e
        fp = FiniteField(big.p)
        self._fp = fp
        w = big.gen()
        wpow = [big.one()]
        for _ in range(self.dim - 1):
            wpow.append(wpow[-1] * w)
        cols = []
        for i in range(self.dim):
            for j in range(small.e):
                basis_elem = emb(small.elem([0] * j + [1])) * wpow[i]
                cols.append(basis_elem.coeffs)
        mat = [[fp.elem(cols[c][r]) for c in range(big.e)] for r in range(big.e)]
        self._inv = linalg.inverse(mat, fp)
        self._wpow = wpow

    def coords(self, x: FieldElem):
        """Coordinates of x over small, length dim."""
        vec = [self._fp.elem(c) for c in x.coeffs]
        digits = linalg.mat_vec(self._inv, vec, self._fp)
        out = []
        for i in range(self.dim):
            chunk = [digits[i * self.small.e + j].coeffs[0] for j in range(self.small.e)]
            out.append(self.small.elem(chunk))
        return out

    def lift(self, vec):
        acc = self.big.zero()
        for c, w in zip(vec, self._wpow):
            acc = acc + self.emb(c) * w
        return acc


def min_poly_over(x: FieldElem, rel: RelativeBasis):
    """Minimal polynomial of x over rel.small, as a coefficient list
    (constant first, monic)."""
    small = rel.small
    vectors = [rel.coords(rel.big.one())]
    power = rel.big.one()
    for k in range(1, rel.dim + 1):
        power = power * x
        vk = rel.coords(power)
        # solve sum_i c_i * vectors[i] = vk over small
        mat = [[vectors[i][row] for i in range(k)] for row in range(rel.dim)]
        rhs = [vk[row] for row in range(rel.dim)]
        sol = linalg.solve(mat, rhs, small)
        if sol is not None:
            return [-c for c in sol] + [small.one()]
        vectors.append(vk)
    raise AssertionError("minimal polynomial not found")  # unreachable
