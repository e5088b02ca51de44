"""Reduced simplicial cochain complexes and inclusion-induced maps.

The reduced complex always includes the empty face in degree -1; the void
complex has no cochains at all, so every one of its cohomology groups is
zero, while the irrelevant complex {∅} has a single class in degree -1.
Faces of a given size are ordered lexicographically by their sorted vertex
tuples and coboundary signs follow the position parity of the inserted
vertex, so every matrix here is deterministic.
"""

from dataclasses import dataclass

from .combinatorics import SimplicialComplex, bits_of, is_subcomplex
from .errors import ContractError, InputError
from .linalg import (
    ExactMatrix,
    Field,
    HomologySpace,
    homology_space,
    rank,
)

# ---------------------------------------------------------------------------
# cochain complexes
# ---------------------------------------------------------------------------


def coboundary_matrix(field: Field, faces_small, faces_big) -> ExactMatrix:
    """Coboundary from faces of size s to faces of size s+1.

    Entry (tau, sigma) is (-1)^j when sigma = tau minus its j-th vertex.
    """
    index = {f: i for i, f in enumerate(faces_small)}
    out = ExactMatrix(field, len(faces_big), len(faces_small))
    one = field.one()
    for r, tau in enumerate(faces_big):
        sign = one
        for v in bits_of(tau):
            sigma = tau ^ (1 << v)
            c = index.get(sigma)
            if c is not None:
                out.data[r][c] = sign
            sign = field.neg(sign)
    return out


@dataclass(frozen=True)
class CochainComplex:
    """Reduced cochain complex of a simplicial complex over a field.

    ``basis[s]`` lists faces with s vertices (cochain degree q = s - 1);
    ``coboundaries[s]`` maps degree s-1 cochains to degree s cochains.
    """

    source: SimplicialComplex
    field: Field
    basis: tuple[tuple[int, ...], ...]
    coboundaries: tuple[ExactMatrix, ...]

    def space_dim(self, q: int) -> int:
        s = q + 1
        if 0 <= s < len(self.basis):
            return len(self.basis[s])
        return 0

    def coboundary(self, q: int):
        """The map out of degree q, or None when the target is trivial."""
        s = q + 1
        if 0 <= s < len(self.coboundaries):
            return self.coboundaries[s]
        return None


def cochain_complex(cx: SimplicialComplex, field: Field) -> CochainComplex:
    """Full reduced cochain complex; verifies coboundary∘coboundary = 0."""
    if cx.is_void:
        return CochainComplex(cx, field, (), ())
    top = cx.dim() + 1
    basis = tuple(tuple(cx.faces_of_size(s)) for s in range(top + 1))
    cobs = tuple(
        coboundary_matrix(field, basis[s], basis[s + 1]) for s in range(top)
    )
    for s in range(len(cobs) - 1):
        if not cobs[s + 1].matmul(cobs[s]).is_zero_matrix():
            raise ContractError("coboundary does not square to zero")
    return CochainComplex(cx, field, basis, cobs)


def _local_matrices(cx: SimplicialComplex, q: int, field: Field):
    """(faces at q, d_out, d_in) without building the whole complex."""
    f_mid = cx.faces_of_size(q + 1)
    f_up = cx.faces_of_size(q + 2)
    f_down = cx.faces_of_size(q)
    d_out = coboundary_matrix(field, f_mid, f_up)
    d_in = coboundary_matrix(field, f_down, f_mid) if f_down else None
    return f_mid, d_out, d_in


def reduced_cohomology_dim(cx: SimplicialComplex, q: int, field: Field) -> int:
    """dim of reduced cohomology in degree q.

    Conventions: void complex -> 0 everywhere; irrelevant complex -> 1 at
    q = -1; q = -2 -> 0 unconditionally.
    """
    if q < -2:
        raise InputError(f"cohomological degree {q} below -2")
    if q == -2 or cx.is_void:
        return 0
    f_mid, d_out, d_in = _local_matrices(cx, q, field)
    h = len(f_mid) - rank(d_out)
    if d_in is not None:
        h -= rank(d_in)
    if h < 0:
        raise ContractError("negative cohomology dimension")
    return h


def reduced_cohomology_dims_all(cx: SimplicialComplex, field: Field) -> dict[int, int]:
    """Nonzero reduced cohomology dimensions by degree, computed in one pass."""
    if cx.is_void:
        return {}
    top = cx.dim()
    faces = [cx.faces_of_size(s) for s in range(top + 2)]
    ranks = [
        rank(coboundary_matrix(field, faces[s], faces[s + 1]))
        for s in range(top + 1)
    ]
    dims = {}
    for q in range(-1, top + 1):
        s = q + 1
        h = len(faces[s])
        if s < len(ranks):
            h -= ranks[s]
        if s >= 1:
            h -= ranks[s - 1]
        if h < 0:
            raise ContractError("negative cohomology dimension")
        if h:
            dims[q] = h
    return dims


def reduced_homology_dim(cx: SimplicialComplex, q: int, field: Field) -> int:
    """Reduced simplicial homology via the transposed (chain) matrices."""
    if q < -2:
        raise InputError(f"homological degree {q} below -2")
    if q == -2 or cx.is_void:
        return 0
    f_mid, d_out, d_in = _local_matrices(cx, q, field)
    boundary_in = d_out.transpose()
    h = len(f_mid) - rank(boundary_in)
    if d_in is not None:
        h -= rank(d_in.transpose())
    if h < 0:
        raise ContractError("negative homology dimension")
    return h


def cohomology_space(cx: SimplicialComplex, q: int, field: Field) -> HomologySpace:
    """Degree-q reduced cohomology with explicit cocycle representatives."""
    if q == -2 or cx.is_void:
        return homology_space(field, 0, None, None)
    _, d_out, d_in = _local_matrices(cx, q, field)
    return homology_space(field, d_out.cols, d_out, d_in)


# ---------------------------------------------------------------------------
# inclusion-induced maps
# ---------------------------------------------------------------------------


def face_projection(field, faces_small, faces_big) -> ExactMatrix:
    """Cochain restriction along an inclusion: picks the common coordinates."""
    index = {f: i for i, f in enumerate(faces_big)}
    out = ExactMatrix(field, len(faces_small), len(faces_big))
    one = field.one()
    for r, f in enumerate(faces_small):
        out.data[r][index[f]] = one
    return out


@dataclass(frozen=True)
class CochainRestriction:
    """Degreewise restriction of cochains of ``big`` to faces of ``small``."""

    small: CochainComplex
    big: CochainComplex
    mats: tuple[ExactMatrix, ...]  # per face size s

    def at_degree(self, q: int) -> ExactMatrix:
        s = q + 1
        if 0 <= s < len(self.mats):
            return self.mats[s]
        return ExactMatrix(self.small.field, self.small.space_dim(q), self.big.space_dim(q))


def restriction_cochain_map(
    small: SimplicialComplex, big: SimplicialComplex, field: Field
) -> CochainRestriction:
    """The cochain map dual to an inclusion of complexes; checked to commute."""
    if not is_subcomplex(small, big):
        raise InputError("first complex is not a subcomplex of the second")
    small_cc = cochain_complex(small, field)
    big_cc = cochain_complex(big, field)
    nsizes = len(small_cc.basis)
    mats = tuple(
        face_projection(field, small_cc.basis[s], big_cc.basis[s]) for s in range(nsizes)
    )
    for s in range(nsizes - 1):
        left = small_cc.coboundaries[s].matmul(mats[s])
        right_full = big_cc.coboundaries[s]
        right = mats[s + 1].matmul(right_full)
        if left != right:
            raise ContractError("restriction does not commute with coboundaries")
    return CochainRestriction(small_cc, big_cc, mats)


def induced_cohomology_map(
    small: SimplicialComplex, big: SimplicialComplex, q: int, field: Field
) -> ExactMatrix:
    """Matrix of the restriction-induced map H^q(big) -> H^q(small).

    Rows are indexed by the deterministic cohomology basis of ``small``,
    columns by that of ``big``.
    """
    if not is_subcomplex(small, big):
        raise InputError("first complex is not a subcomplex of the second")
    if q == -2:
        return ExactMatrix(field, 0, 0)
    h_small = cohomology_space(small, q, field)
    h_big = cohomology_space(big, q, field)
    if h_small.dim == 0 or h_big.dim == 0:
        return ExactMatrix(field, h_small.dim, h_big.dim)
    proj = face_projection(
        field, small.faces_of_size(q + 1), big.faces_of_size(q + 1)
    )
    return h_small.express(proj.matmul(h_big.reps))
