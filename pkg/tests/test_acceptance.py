"""Acceptance criteria, one test per criterion.

Each test prints one PASS/FAIL line (visible with pytest -s) and
enforces its runtime budget.  Frozen orders come from independent
oracle runs recorded in the unit suites.
"""

import functools
import random
import time

from patgraphs.construct import (
    bipartite_construction,
    compare_theta_readings,
    product_action_construction,
    valency64_construction,
)
from patgraphs.eqcode import (
    build_shift_matrix,
    decompose_invariant,
    equidistant_code_pipeline,
    irreducible_factors,
    is_regular_on_nonzero,
    mat_mul,
    mat_pow,
    mat_scalar,
    rref,
    weight_profile,
)
from patgraphs.gf import GF, make_field
from patgraphs.graphcert import (
    certify,
    edge_stabilizer,
    enumerate_small_graph,
    graph_girth,
    local_certificate,
    two_arc_orbit_count,
)
from patgraphs.permgrp import (
    DirectPower,
    PermGroup,
    coset_action,
    filtered_intersection_with_product,
    perm_from_cycles,
)


def criterion(number, budget_seconds, summary):
    """Print one PASS/FAIL line for the criterion and enforce its
    runtime budget."""
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException:
                dt = time.perf_counter() - t0
                print(f"ACCEPTANCE {number}: FAIL ({dt:.1f}s) {summary}")
                raise
            dt = time.perf_counter() - t0
            line = f"ACCEPTANCE {number}: PASS ({dt:.1f}s) {summary}"
            if detail:
                line += f" [{detail}]"
            print(line)
            assert dt < budget_seconds, (
                f"criterion {number} exceeded its {budget_seconds}s budget: "
                f"{dt:.1f}s")
        return wrapper
    return deco


@criterion(1, 3.0, "equidistant [q+1,2]_q codes for q in {4, 7, 8}")
def test_criterion_1_equidistant_codes():
    for q in (4, 7, 8):
        t0 = time.perf_counter()
        res = equidistant_code_pipeline(q)
        code = res.code
        assert code.dim == 2 and code.n == q + 1
        chosen = [c for c in res.decomposition.components
                  if c.code == code]
        assert len(chosen) == 1 and chosen[0].faithful
        profile = weight_profile(code)
        assert profile == {q: q * q - 1}
        assert is_regular_on_nonzero(code, res.shift)
        assert time.perf_counter() - t0 < 1.0, f"q = {q} took too long"


@criterion(2, 1.0, "q = 7 decomposes into 4 two-dimensional faithful "
                   "components")
def test_criterion_2_mersenne_full_decomposition():
    res = equidistant_code_pipeline(7)
    comps = res.decomposition.components
    assert len(comps) == 4
    assert all(c.code.dim == 2 for c in comps)
    assert all(c.faithful for c in comps)


@criterion(3, 1.0, "shift-matrix identities order = n(q-1), A^n scalar")
def test_criterion_3_shift_matrix_identities():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 16):
        field = make_field(q)
        shift = build_shift_matrix(field)
        n = q + 1
        assert shift.order == n * (q - 1)
        eta, lam = field.unit_generators()
        scalar = field.mul(eta, field.mul(lam, lam))
        assert shift.power_scalar == scalar
        assert mat_pow(field, shift.rows(), n) == mat_scalar(n, scalar)


@criterion(4, 30.0, "q = 4 pipeline: |G| = 3888000000, valency 16, "
                    "case i")
def test_criterion_4_pipeline_q4():
    pa = product_action_construction(4)
    cert = certify(pa)
    assert cert.local.group_order == 3_888_000_000
    assert cert.local.stabilizer_order == 240
    assert cert.valency == 16
    assert cert.local.intersection_order == 15
    assert cert.local.locally_2transitive
    assert cert.local.connected
    assert cert.theorem1_case == "i" and cert.case_witness == 5
    assert pa.n == 5


@criterion(5, 300.0, "q = 7 pipeline: |G| = 168^8*16, valency 49, "
                     "subdirect projections of order 21, case iii")
def test_criterion_5_pipeline_q7():
    pa = product_action_construction(7)
    cert = certify(pa)
    assert cert.local.group_order == 168**8 * 16
    assert cert.valency == 49
    assert cert.local.connected and cert.local.locally_2transitive
    d = pa.block_degree
    M = DirectPower(pa.seed.T, pa.n)
    meet = filtered_intersection_with_product(pa.H, M)
    for i in range(pa.n):
        proj = {x[i * d:(i + 1) * d] for x in meet.elements()}
        proj = PermGroup([tuple(y - i * d for y in x) for x in proj],
                         degree=d)
        assert proj.order() == 21, f"projection {i}"
    assert pa.non_diagonal
    assert not cert.diagonal_type
    assert cert.theorem1_case == "iii"


@criterion(6, 960.0, "valency-64 instance on 21 blocks")
def test_criterion_6_valency64():
    t0 = time.perf_counter()
    reports = compare_theta_readings()
    viable = [r for r in reports if r.rejected is None]
    assert len(viable) == 2, "both admissible twist readings must survive"
    first = viable[0]
    assert first.component_count == 13
    assert sorted(first.dimensions) == [1, 2, 3, 3] + [6] * 9
    assert first.regular_count == 6
    linear_elapsed = time.perf_counter() - t0
    assert linear_elapsed < 60.0, "linear-algebra part over budget"

    t0 = time.perf_counter()
    v64 = valency64_construction()
    cert = certify(v64)
    # the order-6 S_3 normalizing group: non-abelian with three
    # involutions; it is the centralizer of theta in the socle, and the
    # full normalizer of <theta> measures 18 (recorded, not hidden)
    cen = v64.tc.centralizer
    assert cen.order() == 6
    orders = sorted(
        next(k for k in (1, 2, 3, 6)
             if all(y == i for i, y in enumerate(_ppow(x, k))))
        for x in cen.elements())
    assert orders == [1, 2, 2, 2, 3, 3], "not the S_3 signature"
    normalizer_order = v64.tc.normalizer.order()
    assert normalizer_order == 18
    # one edge involution up to double cosets modulo the H-normalizing
    # involution; the two raw double cosets are swapped by it
    assert v64.classes_up_to_normalizer == 1
    assert v64.double_coset_classes == 2
    assert cert.valency == 64
    assert cert.local.connected
    vertices = cert.local.group_order // cert.local.stabilizer_order
    assert vertices == 2**57 * 3**42 * 7**21
    assert 504**21 == vertices * 2**6
    group_elapsed = time.perf_counter() - t0
    assert group_elapsed < 900.0, "group part over budget"
    return (f"centralizer 6 (S_3), normalizer {normalizer_order}, "
            f"2 double cosets merging to 1 class, linear "
            f"{linear_elapsed:.1f}s, group {group_elapsed:.1f}s")


def _ppow(x, k):
    y = tuple(range(len(x)))
    for _ in range(k):
        y = tuple(x[i] for i in y)
    return y


@criterion(7, 30.0, "p = 5 bipartite pipeline, both families")
def test_criterion_7_bipartite_p5():
    for family in ("symmetric", "pgl2"):
        bc = bipartite_construction(5, family)
        cert = certify(bc)
        assert cert.valency == 5
        assert bc.H.order() == 80
        assert bc.K.order() == 16
        assert bc.H.order() // bc.K.order() == 5
        es = edge_stabilizer(bc.H, bc.o)
        assert es.order() == bc.K.order()
        assert all(es.contains(x) for x in bc.K.gens)
        assert cert.local.locally_2transitive
        assert cert.g_swaps_halves
        assert cert.local.connected
        assert bc.G.order() == 60**4 * 16
        assert cert.double_cover_verdict == "is_not"
        assert cert.diagonal_type
        meet = bc.meet
        assert meet.order() == 10
        d = bc.block_degree
        for i in range(bc.n):
            slices = {x[i * d:(i + 1) * d] for x in meet.elements()}
            assert len(slices) == 10, "projection is not injective"


@criterion(8, 5.0, "toy enumerations match K_4 and Petersen with "
                   "certificate agreement")
def test_criterion_8_toy_oracle_equivalence():
    cases = [
        (4, [[(0, 1)], [(0, 1, 2, 3)]], [[(0, 1)], [(0, 1, 2)]],
         [(2, 3)], 4, 3, 3),
        (5, [[(0, 1)], [(0, 1, 2, 3, 4)]],
         [[(0, 1)], [(2, 3)], [(2, 3, 4)]],
         [(0, 2), (1, 3)], 10, 3, 5),
    ]
    for degree, ggens, hgens, g, nverts, val, girth in cases:
        G = PermGroup([perm_from_cycles(degree, c) for c in ggens])
        H = PermGroup([perm_from_cycles(degree, c) for c in hgens])
        edge = perm_from_cycles(degree, g)
        sg = enumerate_small_graph(G, H, edge)
        assert sg.vertices == nverts
        assert all(sg.degree(v) == val for v in range(nverts))
        assert graph_girth(sg) == girth
        cert = local_certificate(G.order(), H, edge)
        assert cert.valency == sg.degree(0)
        ca = coset_action(G, H)
        orbits = two_arc_orbit_count(sg, list(ca.group.gens))
        assert cert.locally_2transitive == (orbits == 1)
        assert orbits == 1


@criterion(9, 60.0, "property suites: field axioms, BSGS orders, "
                    "decomposition reconstruction")
def test_criterion_9_property_suites():
    rng = random.Random(20240817)
    # field axioms on random triples, q up to 2**10
    for p, f in ((2, 1), (2, 5), (2, 10), (3, 4), (5, 3), (7, 2),
                 (11, 2), (31, 1), (997, 1)):
        k = GF(p, f)
        for _ in range(30):
            a, b, c = (rng.randrange(k.q) for _ in range(3))
            assert k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c))
            assert k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c))
            assert k.add(a, k.neg(a)) == 0
            if a:
                assert k.mul(a, k.inv(a)) == 1

    # BSGS order equals the product of fundamental orbit lengths, and
    # matches brute-force element counts when small
    for _ in range(100):
        degree = rng.randrange(4, 8)
        gens = []
        for _ in range(2):
            img = list(range(degree))
            rng.shuffle(img)
            gens.append(tuple(img))
        grp = PermGroup(gens, degree=degree)
        prod = 1
        for orb in grp.fundamental_orbits():
            prod *= len(orb)
        assert grp.order() == prod
        if grp.order() <= 5040:
            assert grp.order() == len(grp.elements())

    # invariant decomposition reconstructs random semisimple matrices
    for p in (2, 3, 7):
        k = GF(p, 1)
        for _ in range(4):
            dims, polys = 0, []
            while dims < 20 - 4:
                deg = rng.randrange(1, 5)
                cand = tuple(rng.randrange(k.q) for _ in range(deg)) + (1,)
                if cand[0] == 0:
                    continue
                gpoly = irreducible_factors(k, cand)[0][0]
                if len(gpoly) == 1 or gpoly[0] == 0 or gpoly in polys:
                    continue
                polys.append(gpoly)
                dims += len(gpoly) - 1
            n = dims
            a = [[0] * n for _ in range(n)]
            off = 0
            for gpoly in polys:
                d = len(gpoly) - 1
                for i in range(d - 1):
                    a[off + i + 1][off + i] = 1
                for i in range(d):
                    a[off + i][off + d - 1] = k.neg(gpoly[i])
                off += d
            while True:
                s = [[rng.randrange(k.q) for _ in range(n)]
                     for _ in range(n)]
                if len(rref(k, s)) == n:
                    break
            conj = mat_mul(k, mat_mul(k, _invert(k, s), a), s)
            dec = decompose_invariant(conj, k)
            assert sorted(c.code.dim for c in dec.components) == \
                sorted(len(gpoly) - 1 for gpoly in polys)
            assert len(rref(k, [list(r) for r in dec.change_of_basis])) == n


def _invert(k, m):
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(m)]
    red = rref(k, aug)
    assert len(red) == n
    return [list(row[n:]) for row in red]
