"""Exact linear algebra over Q and prime fields F_p.

Scalars are plain Python objects: ``fractions.Fraction`` over Q, ints in
[0, p) over F_p.  Matrices are dense row-major lists; everything at the
scale of this package is at most a few thousand rows.  Rank over Q uses
Bareiss fraction-free elimination on an integer-cleared copy so that
intermediate values stay integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import ContractError, InputError

# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class Field:
    """A field of scalars.  ``kind`` is 'rationals' or 'prime_field'."""

    kind: str

    def key(self):
        raise NotImplementedError

    def __repr__(self):
        return self.name()


class RationalField(Field):
    kind = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def key(self):
        return ("Q",)

    def name(self):
        return "Q"


class PrimeField(Field):
    kind = "prime_field"

    def __init__(self, p: int):
        if not 2 <= p < 2**31:
            raise InputError(f"prime modulus {p} outside [2, 2^31)")
        for d in range(2, p):
            if d * d > p:
                break
            if p % d == 0:
                raise InputError(f"{p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def key(self):
        return ("F", self.p)

    def name(self):
        return f"F{self.p}"


QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def prime_field(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class ExactMatrix:
    """Dense matrix with entries in a fixed field, reduced at construction."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero()
            self.data = [[z] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise InputError("matrix data shape mismatch")
            self.data = [[field.coerce(x) for x in row] for row in data]

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field, n):
        m = cls(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, field, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(field, r, c, rows)

    def copy(self):
        return ExactMatrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    def transpose(self):
        out = ExactMatrix(self.field, self.cols, self.rows)
        for i in range(self.rows):
            row = self.data[i]
            for j in range(self.cols):
                out.data[j][i] = row[j]
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise InputError("matmul shape mismatch")
        f = self.field
        out = ExactMatrix(f, self.rows, other.cols)
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = arow[k]
                if f.is_zero(a):
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    __matmul__ = matmul

    def scaled(self, c) -> "ExactMatrix":
        f = self.field
        c = f.coerce(c)
        return ExactMatrix(
            f, self.rows, self.cols, [[f.mul(c, x) for x in row] for row in self.data]
        )

    def mul_vector(self, vec):
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero()
            row = self.data[i]
            for j, v in enumerate(vec):
                if not f.is_zero(v):
                    acc = f.add(acc, f.mul(row[j], v))
            out.append(acc)
        return out

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero_matrix(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for row in self.data for x in row)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.field.key() == other.field.key()
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"ExactMatrix({self.field.name()}, {self.rows}x{self.cols})"

    def pretty(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)


def hstack(field, blocks, rows):
    """Concatenate matrices (all with ``rows`` rows) side by side."""
    data = [[] for _ in range(rows)]
    for b in blocks:
        if b.rows != rows:
            raise InputError("hstack row mismatch")
        for i in range(rows):
            data[i].extend(b.data[i])
    cols = sum(b.cols for b in blocks)
    out = ExactMatrix(field, rows, cols)
    out.data = data if rows else []
    return out


def block_matrix(field, row_dims, col_dims, blocks) -> ExactMatrix:
    """Assemble from a dict (block_row, block_col) -> ExactMatrix."""
    rows = sum(row_dims)
    cols = sum(col_dims)
    out = ExactMatrix(field, rows, cols)
    roff = [0]
    for d in row_dims:
        roff.append(roff[-1] + d)
    coff = [0]
    for d in col_dims:
        coff.append(coff[-1] + d)
    for (bi, bj), blk in blocks.items():
        if blk.rows != row_dims[bi] or blk.cols != col_dims[bj]:
            raise InputError("block shape mismatch")
        r0, c0 = roff[bi], coff[bj]
        for i in range(blk.rows):
            out.data[r0 + i][c0 : c0 + blk.cols] = blk.data[i]
    return out


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _rank_bareiss(int_rows) -> int:
    """Fraction-free Gaussian elimination on integer rows."""
    m = [row[:] for row in int_rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivval = m[rank][c]
        for i in range(rank + 1, nrows):
            mic = m[i][c]
            rowr = m[rank]
            rowi = m[i]
            for j in range(c + 1, ncols):
                rowi[j] = (pivval * rowi[j] - mic * rowr[j]) // prev
            rowi[c] = 0
        prev = pivval
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(mat: ExactMatrix) -> int:
    """Exact rank; Bareiss over Q, ordinary elimination over F_p."""
    if mat.rows == 0 or mat.cols == 0:
        return 0
    if mat.field.kind == "rationals":
        int_rows = []
        for row in mat.data:
            scale = lcm(*(x.denominator for x in row)) if row else 1
            int_rows.append([int(x * scale) for x in row])
        return _rank_bareiss(int_rows)
    _, pivots = rref(mat)
    return len(pivots)


def rank_naive(mat: ExactMatrix) -> int:
    """Rank by plain field-arithmetic elimination (cross-check for Bareiss)."""
    _, pivots = rref(mat)
    return len(pivots)


def rref(mat: ExactMatrix):
    """Reduced row echelon form; returns (rref ExactMatrix, pivot columns).

    Deterministic: columns scanned left to right, first nonzero row used as
    pivot.
    """
    f = mat.field
    m = [row[:] for row in mat.data]
    nrows, ncols = mat.rows, mat.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not f.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not f.is_zero(m[i][c]):
                factor = m[i][c]
                rowr = m[r]
                m[i] = [f.sub(x, f.mul(factor, rowr[j])) for j, x in enumerate(m[i])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = ExactMatrix(f, nrows, ncols)
    out.data = m
    return out, pivots


def kernel_basis(mat: ExactMatrix) -> ExactMatrix:
    """Columns form a deterministic basis of ker(mat); A @ K = 0."""
    f = mat.field
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(mat.cols) if c not in pivset]
    out = ExactMatrix(f, mat.cols, len(free))
    one = f.one()
    for k, c in enumerate(free):
        out.data[c][k] = one
        for r, pc in enumerate(pivots):
            out.data[pc][k] = f.neg(red.data[r][c])
    return out


def solve_matrix(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Some X with a @ X = b; raises ContractError if inconsistent."""
    if a.rows != b.rows:
        raise InputError("solve shape mismatch")
    f = a.field
    aug = hstack(f, [a, b], a.rows)
    red, pivots = rref(aug)
    for pc in pivots:
        if pc >= a.cols:
            raise ContractError("inconsistent linear system")
    x = ExactMatrix(f, a.cols, b.cols)
    for r, pc in enumerate(pivots):
        x.data[pc] = red.data[r][a.cols :]
    return x


def independent_columns(mat: ExactMatrix) -> list[int]:
    """Indices of a deterministic maximal independent column subset."""
    _, pivots = rref(mat)
    return pivots


# ---------------------------------------------------------------------------
# complexes of based vector spaces
# ---------------------------------------------------------------------------


class VectorSpaceComplex:
    """dims d_0..d_m with maps[p] : position p+1 -> position p, d∘d = 0."""

    __slots__ = ("field", "dims", "maps")

    def __init__(self, field, dims, maps, check: bool = True):
        dims = tuple(dims)
        maps = tuple(maps)
        if len(maps) != max(len(dims) - 1, 0):
            raise InputError("need one map per consecutive pair of positions")
        for p, m in enumerate(maps):
            if m.rows != dims[p] or m.cols != dims[p + 1]:
                raise InputError(f"map {p} has shape {m.rows}x{m.cols}, "
                                 f"expected {dims[p]}x{dims[p+1]}")
        if check:
            for p in range(len(maps) - 1):
                if not maps[p].matmul(maps[p + 1]).is_zero_matrix():
                    raise ContractError(f"composability d∘d != 0 at position {p}")
        self.field = field
        self.dims = dims
        self.maps = maps

    def __len__(self):
        return len(self.dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * d for p, d in enumerate(self.dims))


def homology_dims(cx: VectorSpaceComplex) -> list[int]:
    """H_p = dim ker(maps[p-1]) - rank(maps[p]) with boundary conventions."""
    ranks = [rank(m) for m in cx.maps]
    out = []
    for p, d in enumerate(cx.dims):
        h = d
        if p > 0:
            h -= ranks[p - 1]
        if p < len(cx.maps):
            h -= ranks[p]
        if h < 0:
            raise ContractError("negative homology dimension")
        out.append(h)
    return out


def transpose_reverse(cx: VectorSpaceComplex) -> VectorSpaceComplex:
    """Reverse positions and transpose maps (the dual complex)."""
    dims = tuple(reversed(cx.dims))
    maps = tuple(m.transpose() for m in reversed(cx.maps))
    return VectorSpaceComplex(cx.field, dims, maps)


@dataclass(frozen=True)
class HomologySpace:
    """Homology at one position, with chosen cycle representatives.

    ``reps`` is (space_dim x dim): columns are cocycle/cycle representatives
    whose classes form a basis.  ``image`` is a basis of the boundary
    subspace.  Bases are deterministic given the ambient ordered basis.
    """

    field: Field
    space_dim: int
    dim: int
    reps: ExactMatrix
    image: ExactMatrix

    def express(self, vectors: ExactMatrix) -> ExactMatrix:
        """Classes of cycle columns in the representative basis.

        Solves [image | reps] x = v and returns the reps part; raises
        ContractError when a column is not a cycle modulo boundaries.
        """
        if self.dim == 0:
            return ExactMatrix(self.field, 0, vectors.cols)
        basis = hstack(self.field, [self.image, self.reps], self.space_dim)
        x = solve_matrix(basis, vectors)
        return ExactMatrix(
            self.field,
            self.dim,
            vectors.cols,
            [x.data[self.image.cols + i] for i in range(self.dim)],
        )


def homology_space(field, dim, d_out, d_in) -> HomologySpace:
    """Homology of  <- d_out - [this space] <- d_in -  made explicit.

    d_out maps out of the space (may be None), d_in into it (may be None).
    Representatives are kernel basis columns completing the image pivots,
    chosen in canonical column order.
    """
    if d_out is not None and d_out.cols != dim:
        raise InputError("d_out shape mismatch")
    if d_in is not None and d_in.rows != dim:
        raise InputError("d_in shape mismatch")
    ker = kernel_basis(d_out) if d_out is not None else ExactMatrix.identity(field, dim)
    if d_in is not None:
        img_cols = independent_columns(d_in)
        image = ExactMatrix(
            field, dim, len(img_cols), [[d_in.data[i][j] for j in img_cols] for i in range(dim)]
        )
    else:
        image = ExactMatrix(field, dim, 0)
    stacked = hstack(field, [image, ker], dim)
    piv = independent_columns(stacked)
    rep_cols = [c - image.cols for c in piv if c >= image.cols]
    reps = ExactMatrix(
        field, dim, len(rep_cols), [[ker.data[i][j] for j in rep_cols] for i in range(dim)]
    )
    return HomologySpace(field, dim, len(rep_cols), reps, image)


class ChainMap:
    """Degreewise map between two complexes, commuting with differentials."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: VectorSpaceComplex, target: VectorSpaceComplex, blocks,
                 check: bool = True):
        blocks = tuple(blocks)
        if len(blocks) != len(source.dims) or len(source.dims) != len(target.dims):
            raise InputError("chain map needs one block per position")
        for p, b in enumerate(blocks):
            if b.rows != target.dims[p] or b.cols != source.dims[p]:
                raise InputError(f"chain map block {p} shape mismatch")
        if check:
            for p in range(len(blocks) - 1):
                left = target.maps[p].matmul(blocks[p + 1])
                right = blocks[p].matmul(source.maps[p])
                if left != right:
                    raise ContractError(f"chain map does not commute at position {p}")
        self.source = source
        self.target = target
        self.blocks = blocks


def complex_homology_space(cx: VectorSpaceComplex, p: int) -> HomologySpace:
    d_out = cx.maps[p - 1] if p > 0 else None
    d_in = cx.maps[p] if p < len(cx.maps) else None
    return homology_space(cx.field, cx.dims[p], d_out, d_in)


def induced_map_on_homology(f: ChainMap, p: int) -> ExactMatrix:
    """Matrix of H_p(f) in the deterministic homology bases."""
    src = complex_homology_space(f.source, p)
    tgt = complex_homology_space(f.target, p)
    if src.dim == 0 or tgt.dim == 0:
        return ExactMatrix(f.source.field, tgt.dim, src.dim)
    mapped = f.blocks[p].matmul(src.reps)
    return tgt.express(mapped)
