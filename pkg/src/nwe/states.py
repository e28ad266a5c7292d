"""Exact integer tensor-product states and orthogonality predicates.

A multipartite product state is stored unnormalized as one dense integer
coefficient vector per party; the full state is the implied tensor product.
Because the inner product of two product states factorizes party by party,
orthogonality is decided exactly with integer arithmetic alone.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

DEFAULT_DIM_CAP = 64


class DimensionError(ValueError):
    """Vector lengths or system shapes do not match."""


class NonOrthogonalSetError(ValueError):
    """A state set required to be pairwise orthogonal is not."""

    def __init__(self, pairs: list[tuple[int, int]]):
        self.pairs = list(pairs)
        super().__init__(f"state set is not pairwise orthogonal; violating pairs: {self.pairs}")


def dim_cap() -> int:
    """Per-party dimension cap (default 64); override via NWE_DIM_CAP."""
    return int(os.environ.get("NWE_DIM_CAP", DEFAULT_DIM_CAP))


@dataclass(frozen=True)
class SystemShape:
    """Dimension vector (d_1, ..., d_n) of an n-party system, n >= 2, d_k >= 2."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) < 2:
            raise DimensionError(f"need at least 2 parties, got {len(self.dims)}")
        cap = dim_cap()
        for k, d in enumerate(self.dims):
            if d < 2:
                raise DimensionError(f"party {k}: dimension must be >= 2, got {d}")
            if d > cap:
                raise DimensionError(f"party {k}: dimension {d} exceeds cap {cap} (NWE_DIM_CAP)")

    @property
    def n(self) -> int:
        return len(self.dims)

    def total_dim(self) -> int:
        return math.prod(self.dims)


@dataclass(frozen=True)
class LocalVector:
    """One party's integer coefficient vector; at least one entry nonzero.

    Coefficients may be arbitrary integers. The built-in constructions only
    ever emit -1, 0, 1, but the verification engines accept any integer
    vectors, so user-supplied sets are not restricted.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise DimensionError("local vector must not be empty")
        if not any(self.coeffs):
            raise DimensionError("local vector must have at least one nonzero coefficient")

    def __len__(self) -> int:
        return len(self.coeffs)

    def support(self) -> tuple[int, ...]:
        """Indices of nonzero coefficients, ascending."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def scaled(self, factor: int) -> LocalVector:
        if factor == 0:
            raise DimensionError("scaling factor must be nonzero")
        return LocalVector(tuple(factor * c for c in self.coeffs))


def basis_ket(dim: int, i: int) -> LocalVector:
    """|i> as a length-dim coefficient vector."""
    if not 0 <= i < dim:
        raise DimensionError(f"basis index {i} out of range for dimension {dim}")
    return LocalVector(tuple(1 if k == i else 0 for k in range(dim)))


def diff_ket(dim: int, a: int, b: int) -> LocalVector:
    """|a> - |b> (unnormalized |a-b>)."""
    if not (0 <= a < dim and 0 <= b < dim) or a == b:
        raise DimensionError(f"invalid difference ket indices ({a},{b}) for dimension {dim}")
    return LocalVector(tuple((1 if k == a else 0) - (1 if k == b else 0) for k in range(dim)))


def flat_ket(dim: int) -> LocalVector:
    """|0> + |1> + ... + |dim-1> (all coefficients 1)."""
    return LocalVector((1,) * dim)


@dataclass(frozen=True)
class ProductState:
    """A product state: one LocalVector per party over a fixed shape."""

    shape: SystemShape
    locals: tuple[LocalVector, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "locals", tuple(self.locals))
        if len(self.locals) != self.shape.n:
            raise DimensionError(
                f"state has {len(self.locals)} local vectors for {self.shape.n} parties"
            )
        for k, lv in enumerate(self.locals):
            if len(lv) != self.shape.dims[k]:
                raise DimensionError(
                    f"party {k}: local vector length {len(lv)} != dimension {self.shape.dims[k]}"
                )

    def with_label(self, label: str) -> ProductState:
        return ProductState(self.shape, self.locals, label)


@dataclass(frozen=True)
class StateSet:
    """Ordered collection of product states over one shape."""

    shape: SystemShape
    states: tuple[ProductState, ...]
    provenance: str = "user"

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        for idx, s in enumerate(self.states):
            if s.shape != self.shape:
                raise DimensionError(f"state {idx} has shape {s.shape.dims}, set has {self.shape.dims}")

    def __len__(self) -> int:
        return len(self.states)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.label if s.label is not None else f"#{i}" for i, s in enumerate(self.states))


def local_inner(u: LocalVector, v: LocalVector) -> int:
    """Exact inner product of two real integer local vectors."""
    if len(u) != len(v):
        raise DimensionError(f"local vector lengths differ: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u.coeffs, v.coeffs))


def inner_factors(a: ProductState, b: ProductState) -> tuple[int, ...]:
    """Per-party inner products; their product is the full inner product <a|b>."""
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape.dims} vs {b.shape.dims}")
    return tuple(local_inner(u, v) for u, v in zip(a.locals, b.locals))


def are_orthogonal(a: ProductState, b: ProductState) -> bool:
    """True iff <a|b> == 0, i.e. at least one per-party factor vanishes."""
    return any(f == 0 for f in inner_factors(a, b))


def check_pairwise_orthogonality(sset: StateSet) -> list[tuple[int, int]]:
    """All index pairs (i, j), i < j, that are NOT orthogonal, in lexicographic order."""
    bad: list[tuple[int, int]] = []
    states = sset.states
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            if not are_orthogonal(states[i], states[j]):
                bad.append((i, j))
    return bad


def stopper(shape: SystemShape) -> ProductState:
    """The all-ones product state; non-orthogonal to every nonnegative state."""
    return ProductState(shape, tuple(flat_ket(d) for d in shape.dims), label="S")


def is_stopper(state: ProductState) -> bool:
    return all(all(c == 1 for c in lv.coeffs) for lv in state.locals)


def find_stopper(sset: StateSet) -> int | None:
    """Index of the all-ones state, or None. Unique in any orthogonal set."""
    for idx, s in enumerate(sset.states):
        if is_stopper(s):
            return idx
    return None
