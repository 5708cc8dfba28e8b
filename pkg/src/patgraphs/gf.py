"""Exact arithmetic in GF(p**f).

A field element is a plain int in [0, q): its base-p digits, least
significant first, are the coefficients of the residue polynomial.  The
modulus is the lexicographically least monic irreducible of degree f
under the same digit encoding, so independent runs agree on every
element label.  Multiplication runs off exp/log tables built from the
least primitive element; the fields in play never exceed a few thousand
elements, so the tables are cheap.
"""

from __future__ import annotations

from typing import NamedTuple

from .numth import factorize, is_prime

# polynomials over Z_p: tuples of ints, constant term first, no trailing zeros


def _ptrim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(a) - len(m), -1, -1):
        c = a[i + len(m) - 1] % p
        if c:
            c = c * inv_lead % p
            for j, mj in enumerate(m):
                a[i + j] = (a[i + j] - c * mj) % p
    return _ptrim(a)


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, e, m, p):
    out = (1,)
    while e:
        if e & 1:
            out = _pmulmod(out, a, m, p)
        a = _pmulmod(a, a, m, p)
        e >>= 1
    return out


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0)
                    - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)
    return a


def _is_irreducible(m, p):
    """Rabin test: m of degree f is irreducible over Z_p iff
    x**(p**f) = x mod m and gcd(x**(p**(f/l)) - x, m) = 1 for primes l | f."""
    f = len(m) - 1
    x = (0, 1)
    if _ppowmod(x, p**f, m, p) != _pmod(x, m, p):
        return False
    for ell in factorize(f):
        h = _ppowmod(x, p ** (f // ell), m, p)
        if len(_pgcd(_psub(h, x, p), m, p)) != 1:
            return False
    return True


class UnitGenerators(NamedTuple):
    """Generators of the 2-part and the odd part of the unit group."""

    two_part: int
    odd_part: int


class GF:
    """The field GF(p**f) on the integer element encoding."""

    def __init__(self, p: int, f: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if f < 1:
            raise ValueError(f"f = {f} must be positive")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = self._find_modulus()
        self._build_tables()

    def _find_modulus(self) -> tuple[int, ...]:
        p, f = self.p, self.f
        if f == 1:
            return (0, 1)
        for code in range(self.q):
            cand = tuple(self.digits(code)) + (1,)
            if _is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible modulus found")

    def _build_tables(self):
        q = self.q
        self.generator = self._least_primitive()
        exp = [0] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, self.generator)
        if acc != 1:
            raise AssertionError("primitive element table did not close")
        self._exp = exp
        self._log = log

    def _least_primitive(self) -> int:
        if self.q == 2:
            return 1
        primes = list(factorize(self.q - 1))
        for g in range(2, self.q):
            if all(self._raw_pow(g, (self.q - 1) // ell) != 1 for ell in primes):
                return g
        raise AssertionError("no primitive element found")

    # -- encoding -----------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Base-p coefficient vector of a, constant term first, length f."""
        out = []
        for _ in range(self.f):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def undigits(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int):
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")

    # -- arithmetic ---------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        prod = _pmulmod(tuple(self.digits(a)), tuple(self.digits(b)),
                        self.modulus, self.p)
        return self.undigits(list(prod) + [0] * self.f)

    def _raw_pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._raw_mul(out, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return out

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.f == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.undigits([x + y for x, y in
                              zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.f == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.undigits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero in GF")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        self._check(a)
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        d = self.q - 1
        for ell in factorize(d):
            while d % ell == 0 and self.pow(a, d // ell) == 1:
                d //= ell
        return d

    # -- distinguished elements ---------------------------------------------

    def unit_generators(self) -> UnitGenerators:
        """Split the unit group as <two_part> x <odd_part>.

        two_part = g**(odd part of q-1) generates the Sylow 2-subgroup,
        odd_part = g**(2-part of q-1) the complement, for the least
        primitive element g.  For even q the 2-part generator is 1.
        """
        m = self.q - 1
        two = m & -m if m else 1
        odd = m // two if m else 1
        return UnitGenerators(self.pow(self.generator, odd),
                              self.pow(self.generator, two))

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))


def make_field(q: int) -> GF:
    """GF(q) for a prime power q."""
    from .numth import prime_power

    pf = prime_power(q)
    if pf is None:
        raise ValueError(f"q = {q} is not a prime power")
    return GF(*pf)
