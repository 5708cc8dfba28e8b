"""Equidistant two-dimensional codes from the twisted shift matrix.

For a prime power q with q + 1 = 2**s * r**t (and s >= 2 when q is
odd), the diagonal-times-rotation matrix on F_q**(q+1) has order
q**2 - 1 and its minimal invariant subspaces include a faithful
two-dimensional one.  That subspace is a [q+1, 2]_q code all of whose
nonzero words have weight exactly q, and the shift permutes those
q**2 - 1 words in a single cycle.
"""

from patgraphs.eqcode import (
    equidistant_code_pipeline,
    is_regular_on_nonzero,
    weight_profile,
)

for q in (4, 7, 8):
    res = equidistant_code_pipeline(q)
    code = res.code
    print(f"q = {q}: [{code.n},{code.dim}]_{q} code")
    print(f"  basis rows: {list(code.basis)}")
    print(f"  shift order {res.shift.order} = (q+1)(q-1), "
          f"A^(q+1) = scalar {res.shift.power_scalar}")
    print(f"  weight profile of nonzero words: {weight_profile(code)}")
    print(f"  single shift orbit on nonzero words: "
          f"{is_regular_on_nonzero(code, res.shift)}")
    dims = [c.code.dim for c in res.decomposition.components]
    faithful = sum(1 for c in res.decomposition.components if c.faithful)
    print(f"  full space splits as dimensions {dims}, {faithful} faithful")
    print()

# q = 7 is Mersenne: the whole of F_7**8 splits into two-dimensional
# faithful components, not just one distinguished plane
res = equidistant_code_pipeline(7)
assert all(c.code.dim == 2 and c.faithful
           for c in res.decomposition.components)
print("q = 7 (Mersenne): every component is a faithful plane")
