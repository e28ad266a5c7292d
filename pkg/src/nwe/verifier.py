"""Exact decision oracle for triviality of orthogonality-preserving measurements.

The unknown measurement element on party t is a complex Hermitian d x d
matrix E = S + iA with S real symmetric and A real antisymmetric. Its real
degrees of freedom are laid out as d(d+1)/2 symmetric coordinates S[a,b]
(a <= b) followed by d(d-1)/2 antisymmetric coordinates A[a,b] (a < b).
Every state pair whose other-party factors are all nonzero contributes one
row on each block (u^T S v = 0 and u^T A v = 0, u and v real). Gaussian
elimination over exact rationals then decides triviality: the measurement is
forced trivial iff the nullspace is exactly the span of the identity.

A Nontrivial verdict means a nontrivial orthogonality-preserving first
measurement exists on that party; it does not by itself prove that the set
is LOCC-distinguishable.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .states import (
    NonOrthogonalSetError,
    StateSet,
    check_pairwise_orthogonality,
    inner_factors,
)

STATUS_TRIVIAL = "Trivial"
STATUS_NONTRIVIAL = "Nontrivial"


def sym_index(dim: int, a: int, b: int) -> int:
    """Coordinate of S[a,b], a <= b, within [0, d(d+1)/2)."""
    if not 0 <= a <= b < dim:
        raise IndexError(f"bad symmetric coordinate ({a},{b}) for dimension {dim}")
    return a * dim - a * (a - 1) // 2 + (b - a)


def anti_index(dim: int, a: int, b: int) -> int:
    """Coordinate of A[a,b], a < b, within [d(d+1)/2, d*d)."""
    if not 0 <= a < b < dim:
        raise IndexError(f"bad antisymmetric coordinate ({a},{b}) for dimension {dim}")
    return dim * (dim + 1) // 2 + a * (dim - 1) - a * (a - 1) // 2 + (b - a - 1)


def identity_coords(dim: int) -> tuple[int, ...]:
    coords = [0] * (dim * dim)
    for a in range(dim):
        coords[sym_index(dim, a, a)] = 1
    return tuple(coords)


@dataclass(frozen=True)
class MeasurementConstraintSystem:
    """Integer constraint rows over the d*d real unknowns of one party."""

    party: int
    dim: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def num_unknowns(self) -> int:
        return self.dim * self.dim


@dataclass(frozen=True)
class HermitianMatrix:
    """Exact-rational Hermitian matrix, stored as real and imaginary parts."""

    real: tuple[tuple[Fraction, ...], ...]
    imag: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.real)

    def is_identity_multiple(self) -> bool:
        d = self.dim
        lead = self.real[0][0]
        for a in range(d):
            for b in range(d):
                if self.imag[a][b] != 0:
                    return False
                if a == b:
                    if self.real[a][a] != lead:
                        return False
                elif self.real[a][b] != 0:
                    return False
        return True

    def entry_strings(self) -> list[list[str]]:
        """Entries as exact fraction strings, e.g. "1/2" or "0+1/3i"."""
        out = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                re, im = self.real[a][b], self.imag[a][b]
                if im == 0:
                    row.append(str(re))
                else:
                    sign = "+" if im > 0 else "-"
                    row.append(f"{re}{sign}{abs(im)}i")
            out.append(row)
        return out


@dataclass(frozen=True)
class TrivialityVerdict:
    party: int
    status: str
    nullspace_dim: int
    witness: HermitianMatrix | None

    @property
    def trivial(self) -> bool:
        return self.status == STATUS_TRIVIAL


def coords_to_matrix(vec, dim: int) -> HermitianMatrix:
    """Reassemble a coordinate vector into the Hermitian matrix it encodes."""
    real = [[Fraction(0)] * dim for _ in range(dim)]
    imag = [[Fraction(0)] * dim for _ in range(dim)]
    for a in range(dim):
        real[a][a] = Fraction(vec[sym_index(dim, a, a)])
        for b in range(a + 1, dim):
            s = Fraction(vec[sym_index(dim, a, b)])
            w = Fraction(vec[anti_index(dim, a, b)])
            real[a][b] = real[b][a] = s
            imag[a][b] = w
            imag[b][a] = -w
    return HermitianMatrix(tuple(map(tuple, real)), tuple(map(tuple, imag)))


def matrix_to_coords(mat: HermitianMatrix) -> tuple[Fraction, ...]:
    dim = mat.dim
    vec = [Fraction(0)] * (dim * dim)
    for a in range(dim):
        vec[sym_index(dim, a, a)] = mat.real[a][a]
        for b in range(a + 1, dim):
            vec[sym_index(dim, a, b)] = mat.real[a][b]
            vec[anti_index(dim, a, b)] = mat.imag[a][b]
    return tuple(vec)


def _pair_rows(u: tuple[int, ...], v: tuple[int, ...], dim: int) -> tuple[list[int], list[int]]:
    size = dim * dim
    srow = [0] * size
    arow = [0] * size
    for a, ua in enumerate(u):
        if not ua:
            continue
        for b, vb in enumerate(v):
            if not vb:
                continue
            w = ua * vb
            if a == b:
                srow[sym_index(dim, a, a)] += w
            elif a < b:
                srow[sym_index(dim, a, b)] += w
                arow[anti_index(dim, a, b)] += w
            else:
                srow[sym_index(dim, b, a)] += w
                arow[anti_index(dim, b, a)] -= w
    return srow, arow


def _assemble_checked(sset: StateSet, t: int) -> MeasurementConstraintSystem:
    dim = sset.shape.dims[t]
    states = sset.states
    rows: list[tuple[int, ...]] = []
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            factors = inner_factors(states[i], states[j])
            other = 1
            for k, f in enumerate(factors):
                if k != t:
                    other *= f
            if other == 0:
                continue
            u = states[i].locals[t].coeffs
            v = states[j].locals[t].coeffs
            srow, arow = _pair_rows(u, v, dim)
            # identity membership: the diagonal coefficients sum to u.v,
            # which must vanish because the pair is orthogonal on party t
            assert sum(srow[sym_index(dim, a, a)] for a in range(dim)) == 0
            if any(srow):
                rows.append(tuple(srow))
            if any(arow):
                rows.append(tuple(arow))
    return MeasurementConstraintSystem(t, dim, tuple(rows))


def assemble(sset: StateSet, t: int) -> MeasurementConstraintSystem:
    """Constraint system for party t of a pairwise orthogonal set."""
    if not 0 <= t < sset.shape.n:
        raise IndexError(f"party {t} out of range for {sset.shape.n} parties")
    violations = check_pairwise_orthogonality(sset)
    if violations:
        raise NonOrthogonalSetError(violations)
    return _assemble_checked(sset, t)


def _rref(rows, ncols: int) -> tuple[list[int], list[list[Fraction]]]:
    """Reduced row echelon form with first-nonzero-column pivoting.

    Rows are consumed in the given order; the returned pivot columns are
    ascending with matching normalized rows.
    """
    pivots: list[int] = []
    reduced: list[list[Fraction]] = []
    for raw in rows:
        r = [Fraction(x) for x in raw]
        for p, row in zip(pivots, reduced):
            c = r[p]
            if c:
                for k in range(ncols):
                    if row[k]:
                        r[k] -= c * row[k]
        pc = next((k for k in range(ncols) if r[k]), None)
        if pc is None:
            continue
        lead = r[pc]
        if lead != 1:
            r = [x / lead for x in r]
        for idx, row in enumerate(reduced):
            c = row[pc]
            if c:
                reduced[idx] = [x - c * y for x, y in zip(row, r)]
        pos = bisect_left(pivots, pc)
        pivots.insert(pos, pc)
        reduced.insert(pos, r)
    return pivots, reduced


def rank(system: MeasurementConstraintSystem) -> int:
    return len(_rref(system.rows, system.num_unknowns)[0])


def nullspace(system: MeasurementConstraintSystem) -> list[tuple[Fraction, ...]]:
    """Exact-rational basis of the solution space, deterministic order."""
    ncols = system.num_unknowns
    pivots, reduced = _rref(system.rows, ncols)
    pivot_set = set(pivots)
    basis: list[tuple[Fraction, ...]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for p, row in zip(pivots, reduced):
            if row[free]:
                vec[p] = -row[free]
        basis.append(tuple(vec))
    assert len(basis) == ncols - len(pivots)
    return basis


def _dot(row, vec) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(row, vec) if a), Fraction(0))


def _verdict_from_system(system: MeasurementConstraintSystem) -> TrivialityVerdict:
    dim = system.dim
    basis = nullspace(system)
    ident = identity_coords(dim)
    for row in system.rows:
        assert _dot(row, ident) == 0
    if len(basis) == 1:
        matrix = coords_to_matrix(basis[0], dim)
        assert matrix.is_identity_multiple()
        return TrivialityVerdict(system.party, STATUS_TRIVIAL, 1, None)
    witness = None
    for vec in basis:
        trace = sum(vec[sym_index(dim, a, a)] for a in range(dim))
        coef = Fraction(trace, dim)
        residual = tuple(x - coef * e for x, e in zip(vec, ident))
        if any(residual):
            witness = coords_to_matrix(residual, dim)
            break
    assert witness is not None and not witness.is_identity_multiple()
    return TrivialityVerdict(system.party, STATUS_NONTRIVIAL, len(basis), witness)


def verdict(sset: StateSet, t: int) -> TrivialityVerdict:
    """Trivial iff the only solutions are scalar multiples of the identity.

    On Nontrivial, the witness is a nullspace element with its identity
    component projected out: an exact Hermitian matrix satisfying every
    constraint and independent of the identity.
    """
    return _verdict_from_system(assemble(sset, t))


def verify_all(sset: StateSet) -> list[TrivialityVerdict]:
    """One verdict per party; the set is certified nonlocal iff all Trivial."""
    violations = check_pairwise_orthogonality(sset)
    if violations:
        raise NonOrthogonalSetError(violations)
    return [
        _verdict_from_system(_assemble_checked(sset, t)) for t in range(sset.shape.n)
    ]


def certified_nonlocal(verdicts) -> bool:
    return all(v.trivial for v in verdicts)
