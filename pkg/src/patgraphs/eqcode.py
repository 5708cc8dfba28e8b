"""Equidistant two-dimensional codes cut out of a twisted shift matrix.

Vectors are lists (or tuples) of field-element ints and matrices are
lists of row vectors; the acting matrix multiplies on the right, so an
invariant subspace C satisfies C * A <= C.  The decomposition machinery
factors the characteristic polynomial and splits isotypic kernels by
spinning cyclic vectors, which is all that semisimple matrices need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import GF
from .numth import factorize, validate_parameters

Poly = tuple[int, ...]  # coefficients over GF(q), constant term first
Vec = tuple[int, ...]
Mat = list[list[int]]

# -- polynomial arithmetic over GF(q) ----------------------------------------


def poly_trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(k: GF, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly_trim([k.add(a[i] if i < len(a) else 0,
                            b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(k: GF, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly_trim([k.sub(a[i] if i < len(a) else 0,
                            b[i] if i < len(b) else 0) for i in range(n)])


def poly_scale(k: GF, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(k.mul(c, x) for x in a)


def poly_mul(k: GF, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = k.add(out[i + j], k.mul(ai, bj))
    return poly_trim(out)


def poly_monic(k: GF, a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    inv = k.inv(a[-1])
    return tuple(k.mul(inv, c) for c in a)


def poly_divmod(k: GF, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = k.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            c = k.mul(c, inv_lead)
            quo[i] = c
            for j, bj in enumerate(b):
                if bj:
                    a[i + j] = k.sub(a[i + j], k.mul(c, bj))
    return poly_trim(quo), poly_trim(a)


def poly_gcd(k: GF, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(k, a, b)[1]
    return poly_monic(k, a)


def poly_mulmod(k: GF, a: Poly, b: Poly, m: Poly) -> Poly:
    return poly_divmod(k, poly_mul(k, a, b), m)[1]


def poly_powmod(k: GF, a: Poly, e: int, m: Poly) -> Poly:
    out: Poly = (1,)
    a = poly_divmod(k, a, m)[1]
    while e:
        if e & 1:
            out = poly_mulmod(k, out, a, m)
        a = poly_mulmod(k, a, a, m)
        e >>= 1
    return out


def poly_deriv(k: GF, a: Poly) -> Poly:
    out = []
    for i in range(1, len(a)):
        c = 0
        for _ in range(i % k.p):
            c = k.add(c, a[i])
        out.append(c)
    return poly_trim(out)


def _poly_from_index(k: GF, t: int) -> Poly:
    out = []
    while t:
        t, d = divmod(t, k.q)
        out.append(d)
    return poly_trim(out)


def _pth_root(k: GF, a: Poly) -> Poly:
    """p-th root of a polynomial with zero derivative (all exponents
    divisible by p); coefficientwise inverse Frobenius."""
    out = []
    for i in range(0, len(a), k.p):
        out.append(k.pow(a[i], k.q // k.p) if a[i] else 0)
    assert all(c == 0 for i, c in enumerate(a) if i % k.p), "not a p-th power"
    return poly_trim(out)


def poly_radical(k: GF, g: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of g."""
    g = poly_monic(k, g)
    if len(g) <= 1:
        return (1,)
    dg = poly_deriv(k, g)
    if not dg:
        return poly_radical(k, _pth_root(k, g))
    u = poly_gcd(k, g, dg)
    v = poly_divmod(k, g, u)[0]  # factors whose multiplicity p does not divide
    w = u
    while True:
        d = poly_gcd(k, w, v)
        if len(d) <= 1:
            break
        w = poly_divmod(k, w, d)[0]
    if len(w) <= 1:
        return poly_monic(k, v)
    return poly_mul(k, poly_monic(k, v), poly_radical(k, w))


def _distinct_degree(k: GF, r: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree r into (product of degree-d irreducibles, d)."""
    out = []
    x: Poly = (0, 1)
    h = poly_divmod(k, x, r)[1]
    d = 0
    while len(r) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_powmod(k, h, k.q, r)
        g = poly_gcd(k, poly_sub(k, h, x), r)
        if len(g) > 1:
            out.append((g, d))
            r = poly_divmod(k, r, g)[0]
            h = poly_divmod(k, h, r)[1]
    if len(r) > 1:
        out.append((r, len(r) - 1))
    return out


def _equal_degree(k: GF, g: Poly, d: int) -> list[Poly]:
    """Split a monic product of distinct degree-d irreducibles.

    Trial elements come from the fixed integer enumeration of
    polynomials, so runs are deterministic.
    """
    if len(g) - 1 == d:
        return [g]
    limit = len(g) - 1
    for t in range(k.q, k.q ** (limit + 1)):
        h = _poly_from_index(k, t)
        w = poly_gcd(k, h, g)
        if 1 < len(w) < len(g):
            pass  # h shares a factor with g; already a split
        elif k.p == 2:
            tr: Poly = ()
            cur = poly_divmod(k, h, g)[1]
            for _ in range(k.f * d):
                tr = poly_add(k, tr, cur)
                cur = poly_mulmod(k, cur, cur, g)
            w = poly_gcd(k, tr, g)
        else:
            e = (k.q**d - 1) // 2
            w = poly_powmod(k, h, e, g)
            w = poly_gcd(k, poly_sub(k, w, (1,)), g)
        if 1 < len(w) < len(g):
            rest = poly_divmod(k, g, w)[0]
            return _equal_degree(k, w, d) + _equal_degree(k, rest, d)
    raise AssertionError("equal-degree trial sequence exhausted")


def irreducible_factors(k: GF, g: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, canonically sorted."""
    g = poly_monic(k, poly_trim(g))
    if len(g) <= 1:
        raise ValueError("cannot factor a constant polynomial")
    found = []
    for block, d in _distinct_degree(k, poly_radical(k, g)):
        found.extend(_equal_degree(k, block, d))
    out = []
    for f in sorted(set(found), key=lambda f: (len(f), f)):
        m = 0
        rest = g
        while True:
            quo, rem = poly_divmod(k, rest, f)
            if rem:
                break
            m += 1
            rest = quo
        out.append((f, m))
    assert sum((len(f) - 1) * m for f, m in out) == len(g) - 1
    return out


def poly_order(k: GF, g: Poly) -> int:
    """Least e with g | x**e - 1, for irreducible g with g(0) != 0."""
    if not g or g[0] == 0:
        raise ValueError("polynomial order needs a nonzero constant term")
    d = len(g) - 1
    e = k.q**d - 1
    for ell in factorize(e):
        while e % ell == 0 and poly_powmod(k, (0, 1), e // ell, g) == (1,):
            e //= ell
    return e


# -- matrices over GF(q) ------------------------------------------------------


def mat_identity(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_scalar(n: int, c: int) -> Mat:
    return [[c if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(k: GF, a: Mat, b: Mat) -> Mat:
    add, mul = k.add, k.mul
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for j, c in enumerate(row):
            if c:
                brow = b[j]
                if c == 1:
                    acc = [add(x, y) for x, y in zip(acc, brow)]
                else:
                    acc = [add(x, mul(c, y)) for x, y in zip(acc, brow)]
        out.append(acc)
    return out


def vec_mat(k: GF, v, a: Mat) -> Vec:
    add, mul = k.add, k.mul
    acc = [0] * len(a[0])
    for j, c in enumerate(v):
        if c:
            arow = a[j]
            if c == 1:
                acc = [add(x, y) for x, y in zip(acc, arow)]
            else:
                acc = [add(x, mul(c, y)) for x, y in zip(acc, arow)]
    return tuple(acc)


def mat_pow(k: GF, a: Mat, e: int) -> Mat:
    out = mat_identity(len(a))
    while e:
        if e & 1:
            out = mat_mul(k, out, a)
        a = mat_mul(k, a, a)
        e >>= 1
    return out


def mat_transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def mat_order(k: GF, a: Mat, multiple: int) -> int:
    """Exact multiplicative order given a known multiple of it."""
    ident = mat_identity(len(a))
    if mat_pow(k, a, multiple) != ident:
        raise ValueError("claimed order multiple does not annihilate")
    e = multiple
    for ell in factorize(multiple):
        while e % ell == 0 and mat_pow(k, a, e // ell) == ident:
            e //= ell
    return e


def rref(k: GF, rows) -> tuple[Vec, ...]:
    """Reduced row echelon form; returns the nonzero rows, pivots 1."""
    rows = [list(r) for r in rows]
    if not rows:
        return ()
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = k.inv(rows[rank][col])
        if inv != 1:
            rows[rank] = [k.mul(inv, c) for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [k.sub(x, k.mul(c, y))
                           for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return tuple(tuple(r) for r in rows[:rank] if any(r))


def vec_reduce(k: GF, v, basis) -> Vec:
    """Reduce v against RREF basis rows; zero result means membership."""
    v = list(v)
    for row in basis:
        piv = next(j for j, c in enumerate(row) if c)
        if v[piv]:
            c = v[piv]
            v = [k.sub(x, k.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def right_nullspace(k: GF, m: Mat) -> tuple[Vec, ...]:
    """Basis of {x : m x = 0}, returned as rows in RREF."""
    ncols = len(m[0])
    r = rref(k, m)
    pivots = [next(j for j, c in enumerate(row) if c) for row in r]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for row, piv in zip(r, pivots):
            v[piv] = k.neg(row[j])
        basis.append(v)
    return rref(k, basis)


def left_nullspace(k: GF, m: Mat) -> tuple[Vec, ...]:
    return right_nullspace(k, mat_transpose(m))


def mat_poly_eval(k: GF, g: Poly, a: Mat) -> Mat:
    """g(a) by Horner's rule."""
    n = len(a)
    out = mat_scalar(n, g[-1]) if g else mat_scalar(n, 0)
    for c in reversed(g[:-1]):
        out = mat_mul(k, out, a)
        for i in range(n):
            out[i][i] = k.add(out[i][i], c)
    return out


def charpoly(k: GF, a: Mat) -> Poly:
    """Characteristic polynomial via Hessenberg reduction."""
    n = len(a)
    h = [row[:] for row in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[m], h[piv] = h[piv], h[m]
            for row in h:
                row[m], row[piv] = row[piv], row[m]
        inv = k.inv(h[m][m - 1])
        for i in range(m + 1, n):
            if h[i][m - 1]:
                u = k.mul(h[i][m - 1], inv)
                h[i] = [k.sub(x, k.mul(u, y)) for x, y in zip(h[i], h[m])]
                for r in range(n):
                    h[r][m] = k.add(h[r][m], k.mul(u, h[r][i]))
    polys: list[Poly] = [(1,)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        pm = poly_sub(k, (0,) + prev, poly_scale(k, prev, h[m - 1][m - 1]))
        prod = 1
        for i in range(m - 2, -1, -1):
            prod = k.mul(prod, h[i + 1][i])
            if prod == 0:
                break
            coef = k.mul(h[i][m - 1], prod)
            if coef:
                pm = poly_sub(k, pm, poly_scale(k, polys[i], coef))
        polys.append(pm)
    cp = polys[n]
    assert len(cp) == n + 1
    return cp


# -- codes and the shift matrix ----------------------------------------------


@dataclass(frozen=True)
class Code:
    """A linear code given by its canonical RREF basis."""

    field: GF
    n: int
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return not any(vec_reduce(self.field, v, self.basis))

    def codewords(self):
        """All q**dim codewords, scanned in coefficient order."""
        k = self.field
        coeffs = [0] * self.dim
        total = k.q**self.dim
        for idx in range(total):
            t = idx
            for i in range(self.dim):
                t, coeffs[i] = divmod(t, k.q)
            w = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    w = [k.add(x, k.mul(c, y)) for x, y in zip(w, row)]
            yield tuple(w)

    def nonzero_codewords(self):
        for w in self.codewords():
            if any(w):
                yield w


def make_code(field: GF, rows) -> Code:
    basis = rref(field, rows)
    if not basis:
        raise ValueError("a code needs at least one nonzero generator")
    return Code(field, len(basis[0]), basis)


def weight(v) -> int:
    return sum(1 for c in v if c)


def weight_profile(code: Code) -> dict[int, int]:
    out: dict[int, int] = {}
    for w in code.nonzero_codewords():
        wt = weight(w)
        out[wt] = out.get(wt, 0) + 1
    return out


def is_equidistant(code: Code) -> bool:
    return len(weight_profile(code)) == 1


def coordinate_kernels(code: Code) -> list[tuple[Vec, ...]]:
    """For each coordinate i, the subcode of words vanishing at i."""
    k = code.field
    out = []
    for i in range(code.n):
        col = [[row[i]] for row in code.basis]
        combos = left_nullspace(k, col) if any(row[i] for row in code.basis) \
            else rref(k, mat_identity(code.dim))
        rows = []
        for cmb in combos:
            v = [0] * code.n
            for c, row in zip(cmb, code.basis):
                if c:
                    v = [k.add(x, k.mul(c, y)) for x, y in zip(v, row)]
            rows.append(v)
        out.append(rref(k, rows))
    return out


@dataclass(frozen=True)
class ShiftMatrix:
    """The twisted cyclic shift acting on F_q**n, n = q + 1."""

    field: GF
    n: int
    diag: tuple[int, ...]
    mat: tuple[Vec, ...]
    order: int
    power_scalar: int  # mat**n is this scalar

    def rows(self) -> Mat:
        return [list(r) for r in self.mat]


def build_shift_matrix(field: GF) -> ShiftMatrix:
    """Diagonal-times-rotation matrix whose n-th power is the scalar
    eta * lambda**2; its order is exactly n * (q - 1)."""
    q = field.q
    n = q + 1
    eta, lam = field.unit_generators()
    etalam = field.mul(eta, lam)
    diag = [etalam] * n
    diag[1] = lam
    a = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = diag[i]
    a[n - 1][0] = diag[n - 1]
    scalar = field.mul(eta, field.mul(lam, lam))
    if mat_pow(field, a, n) != mat_scalar(n, scalar):
        raise AssertionError("shift matrix power identity failed")
    order = mat_order(field, a, n * (q - 1))
    if order != n * (q - 1):
        raise AssertionError(
            f"shift matrix order {order} != n(q-1) = {n * (q - 1)}")
    return ShiftMatrix(field, n, tuple(diag), tuple(tuple(r) for r in a),
                       order, scalar)


# -- invariant decomposition ---------------------------------------------------


@dataclass(frozen=True)
class Component:
    code: Code
    factor: Poly
    order: int  # order of the restricted action
    kernel_order: int
    faithful: bool


@dataclass(frozen=True)
class InvariantDecomposition:
    field: GF
    order: int  # order of the full matrix
    components: tuple[Component, ...]
    degenerate: bool
    change_of_basis: tuple[Vec, ...]  # stacked component bases, invertible


def _spin(k: GF, v: Vec, a: Mat, d: int) -> tuple[Vec, ...]:
    rows = [tuple(v)]
    for _ in range(d - 1):
        rows.append(vec_mat(k, rows[-1], a))
    out = rref(k, rows)
    assert len(out) == d, "cyclic vector spun to the wrong dimension"
    return out


def decompose_invariant(mat, field: GF) -> InvariantDecomposition:
    """Split F_q**n into minimal invariant subspaces of a semisimple matrix.

    Raises ValueError when the matrix is singular or its multiplicative
    order is divisible by the characteristic (both mean non-semisimple
    input, which the spinning construction does not cover).
    """
    a = [list(r) for r in mat]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    cp = charpoly(field, a)
    factors = irreducible_factors(field, cp)
    if any(f == (0, 1) for f, _ in factors):
        raise ValueError("matrix is singular; no finite order")
    full_order = 1
    orders = {}
    for f, _ in factors:
        orders[f] = poly_order(field, f)
        full_order = full_order * orders[f] // math.gcd(full_order, orders[f])
    components = []
    for f, mult in factors:
        d = len(f) - 1
        kern = left_nullspace(field, mat_poly_eval(field, f, a))
        if len(kern) != d * mult:
            raise ValueError(
                "matrix order divisible by the characteristic "
                f"(isotypic kernel of {f} has dimension {len(kern)}, "
                f"expected {d * mult})")
        if mult == 1:
            bases = [kern]
        else:
            bases = []
            span: tuple[Vec, ...] = ()
            for v in kern:
                if span and not any(vec_reduce(field, v, span)):
                    continue
                comp = _spin(field, v, a, d)
                bases.append(comp)
                span = rref(field, list(span) + list(comp))
                if len(bases) == mult:
                    break
            assert len(bases) == mult, "isotypic splitting came up short"
        for basis in bases:
            for row in basis:
                img = vec_mat(field, row, a)
                assert not any(vec_reduce(field, img, basis)), \
                    "component is not invariant"
            ko = full_order // orders[f]
            components.append(Component(Code(field, n, basis), f,
                                        orders[f], ko, ko == 1))
    components.sort(key=lambda c: c.code.basis)
    cob = [list(r) for c in components for r in c.code.basis]
    assert len(cob) == n and len(rref(field, cob)) == n, \
        "components do not sum directly to the full space"
    return InvariantDecomposition(field, full_order, tuple(components),
                                  full_order == 1,
                                  tuple(tuple(r) for r in cob))


# -- the code-finding driver ---------------------------------------------------


@dataclass(frozen=True)
class EqcodeResult:
    field: GF
    shift: ShiftMatrix
    decomposition: InvariantDecomposition
    code: Code


def equidistant_code_pipeline(q: int) -> EqcodeResult:
    """Build the shift matrix for q, decompose, and pick the canonical
    faithful two-dimensional component."""
    ps = validate_parameters(q)
    if not ps.valid:
        raise ValueError(f"q = {q} rejected: {ps.violation}")
    field = GF(ps.p, ps.f)
    shift = build_shift_matrix(field)
    dec = decompose_invariant(shift.rows(), field)
    for comp in dec.components:
        if comp.faithful and comp.code.dim == 2:
            return EqcodeResult(field, shift, dec, comp.code)
    raise AssertionError(f"no faithful 2-dimensional component for q = {q}")


def find_faithful_irreducible_code(q: int) -> Code:
    return equidistant_code_pipeline(q).code


def is_regular_on_nonzero(code: Code, shift: ShiftMatrix) -> bool:
    """True when the shift powers sweep out every nonzero codeword from
    the first basis vector, i.e. the cyclic action is regular."""
    k = code.field
    target = k.q**code.dim - 1
    start = code.basis[0]
    seen = {start}
    v = start
    for _ in range(target - 1):
        v = vec_mat(k, v, shift.rows())
        if not code.contains(v):
            raise AssertionError("code is not invariant under the shift")
        if v in seen:
            break
        seen.add(v)
    return len(seen) == target
