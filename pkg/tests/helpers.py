"""Independent brute-force oracles and small fixture sets.

Everything here recomputes from first principles (full tensor expansion,
exact complex-rational arithmetic) without going through the library's
factorized predicates, so it can serve as the second route in dual checks.
"""

from __future__ import annotations

from fractions import Fraction

from nwe import ProductState, StateSet, SystemShape, basis_ket


def expand(state: ProductState) -> list[int]:
    """Full tensor of a product state as a dense integer vector of length prod(dims)."""
    vec = [1]
    for lv in state.locals:
        vec = [x * c for x in vec for c in lv.coeffs]
    return vec


def brute_force_inner(a: ProductState, b: ProductState) -> int:
    return sum(x * y for x, y in zip(expand(a), expand(b)))


# exact complex numbers as (real Fraction, imag Fraction) pairs
CZERO = (Fraction(0), Fraction(0))


def cadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def embedded_operator(matrix, shape: SystemShape, t: int):
    """Kronecker product I x ... x E_t x ... x I as a dense complex matrix."""
    total = shape.total_dim()
    dims = shape.dims
    after = 1
    for d in dims[t + 1 :]:
        after *= d
    dt = dims[t]
    block = dims[t] * after
    op = [[CZERO] * total for _ in range(total)]
    for p in range(total):
        pre, rem = divmod(p, block)
        pt, post = divmod(rem, after)
        for qt in range(dt):
            q = pre * block + qt * after + post
            op[p][q] = (matrix.real[pt][qt], matrix.imag[pt][qt])
    return op


def measured_overlap(a: ProductState, b: ProductState, matrix, t: int):
    """<a| (I x ... x E_t x ... x I) |b> via the fully expanded tensors."""
    op = embedded_operator(matrix, a.shape, t)
    va, vb = expand(a), expand(b)
    acc = CZERO
    for p, ap in enumerate(va):
        if not ap:
            continue
        for q, bq in enumerate(vb):
            if not bq:
                continue
            acc = cadd(acc, cmul((Fraction(ap * bq), Fraction(0)), op[p][q]))
    return acc


def computational_basis_set(dims: tuple[int, ...]) -> StateSet:
    """All product computational basis states over the given dims."""
    shape = SystemShape(dims)
    indices = [()]
    for d in dims:
        indices = [idx + (i,) for idx in indices for i in range(d)]
    states = tuple(
        ProductState(
            shape,
            tuple(basis_ket(d, i) for d, i in zip(dims, idx)),
            label="|" + "".join(map(str, idx)) + ">",
        )
        for idx in indices
    )
    return StateSet(shape, states, provenance="user")


def without_stopper(sset: StateSet) -> StateSet:
    states = tuple(s for s in sset.states if not all(all(c == 1 for c in lv.coeffs) for lv in s.locals))
    return StateSet(sset.shape, states, provenance=sset.provenance + "-no-stopper")
