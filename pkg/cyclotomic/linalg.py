"""
Dense exact matrices over Q(zeta_L).

Rank, kernel and solve all go through SparseEchelon, so there is one elimination
routine in the engine and one pivot rule (leftmost nonzero column).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Union

from cyclotomic.field import CycNum, as_cyc
from cyclotomic.sparse import SparseEchelon, SparseVec, sparse_kernel
from utils.errors import InconsistentSystem, ParameterOutOfRange

logger = logging.getLogger(__name__)

Entry = Union[int, Fraction, CycNum]


class CycMatrix:
    """Row-major rows x cols grid of CycNum sharing one conductor."""
    __slots__ = ("rows", "cols", "conductor", "_data")

    def __init__(self, data: Sequence[Sequence[Entry]], conductor: Optional[int] = None, cols: Optional[int] = None):
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        if conductor is None:
            conductor = 1
            for row in data:
                for entry in row:
                    if isinstance(entry, CycNum):
                        conductor = lcm(conductor, entry.conductor)
        self.conductor = conductor
        grid: List[List[CycNum]] = []
        for row in data:
            if len(row) != self.cols:
                raise ParameterOutOfRange(f"ragged matrix row of length {len(row)}, expected {self.cols}")
            grid.append([as_cyc(entry, conductor) for entry in row])
        self._data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int) -> CycMatrix:
        zero = CycNum.zero(conductor)
        return cls([[zero] * cols for _ in range(rows)], conductor, cols=cols)

    @classmethod
    def identity(cls, size: int, conductor: int) -> CycMatrix:
        zero, one = CycNum.zero(conductor), CycNum.one(conductor)
        return cls([[one if r == c else zero for c in range(size)] for r in range(size)], conductor, cols=size)

    @classmethod
    def diagonal(cls, entries: Sequence[Entry], conductor: int) -> CycMatrix:
        size = len(entries)
        zero = CycNum.zero(conductor)
        return cls([[entries[r] if r == c else zero for c in range(size)] for r in range(size)], conductor, cols=size)

    @classmethod
    def from_columns(cls, columns: Sequence[SparseVec], nrows: int, conductor: int) -> CycMatrix:
        out = cls.zeros(nrows, len(columns), conductor)
        for c, column in enumerate(columns):
            for r, value in column.items():
                out._data[r][c] = as_cyc(value, conductor)
        return out

    @classmethod
    def block_diagonal(cls, blocks: Sequence[CycMatrix]) -> CycMatrix:
        conductor = 1
        for block in blocks:
            conductor = lcm(conductor, block.conductor)
        size = sum(b.rows for b in blocks)
        out = cls.zeros(size, size, conductor)
        offset = 0
        for block in blocks:
            for r in range(block.rows):
                for c in range(block.cols):
                    out._data[offset + r][offset + c] = as_cyc(block._data[r][c], conductor)
            offset += block.rows
        return out

    def __getitem__(self, key):
        r, c = key
        return self._data[r][c]

    def __setitem__(self, key, value: Entry) -> None:
        r, c = key
        self._data[r][c] = as_cyc(value, self.conductor)

    def row(self, r: int) -> List[CycNum]:
        return list(self._data[r])

    def column(self, c: int) -> List[CycNum]:
        return [self._data[r][c] for r in range(self.rows)]

    def lift(self, L: int) -> CycMatrix:
        if L == self.conductor:
            return self
        return CycMatrix([[x.lift(L) for x in row] for row in self._data], L, cols=self.cols)

    def _aligned(self, other: CycMatrix):
        common = lcm(self.conductor, other.conductor)
        return self.lift(common), other.lift(common)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        a, b = self._aligned(other)
        return all(x == y for ra, rb in zip(a._data, b._data) for x, y in zip(ra, rb))

    __hash__ = None

    def __add__(self, other: CycMatrix) -> CycMatrix:
        a, b = self._aligned(other)
        return CycMatrix([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a._data, b._data)], a.conductor, cols=a.cols)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        a, b = self._aligned(other)
        return CycMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a._data, b._data)], a.conductor, cols=a.cols)

    def scale(self, factor: Entry) -> CycMatrix:
        if isinstance(factor, CycNum) and factor.conductor != self.conductor:
            common = lcm(factor.conductor, self.conductor)
            return self.lift(common).scale(factor.lift(common))
        return CycMatrix([[x * factor for x in row] for row in self._data], self.conductor, cols=self.cols)

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        if self.cols != other.rows:
            raise ParameterOutOfRange(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self._aligned(other)
        zero = CycNum.zero(a.conductor)
        out = []
        for ra in a._data:
            row = []
            for c in range(b.cols):
                acc = zero
                for k, x in enumerate(ra):
                    if x:
                        y = b._data[k][c]
                        if y:
                            acc = acc + x * y
                row.append(acc)
            out.append(row)
        return CycMatrix(out, a.conductor, cols=b.cols)

    def apply(self, vec: SparseVec) -> SparseVec:
        """Matrix times a sparse column vector."""
        out: SparseVec = {}
        for c, value in vec.items():
            for r in range(self.rows):
                x = self._data[r][c]
                if x:
                    out[r] = out[r] + x * value if r in out else x * value
        return {r: v for r, v in out.items() if v}

    def kron(self, other: CycMatrix) -> CycMatrix:
        a, b = self._aligned(other)
        out = []
        for ra in a._data:
            for rb in b._data:
                out.append([x * y for x in ra for y in rb])
        return CycMatrix(out, a.conductor, cols=a.cols * b.cols)

    def transpose(self) -> CycMatrix:
        return CycMatrix([self.column(c) for c in range(self.cols)], self.conductor, cols=self.rows)

    def is_zero(self) -> bool:
        return all(not x for row in self._data for x in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            (x == 1) if r == c else (not x) for r, row in enumerate(self._data) for c, x in enumerate(row)
        )

    def sparse_rows(self) -> List[SparseVec]:
        return [{c: x for c, x in enumerate(row) if x} for row in self._data]

    def sparse_columns(self) -> List[SparseVec]:
        return [{r: self._data[r][c] for r in range(self.rows) if self._data[r][c]} for c in range(self.cols)]

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self._data]

    def __repr__(self) -> str:
        return f"CycMatrix({self.rows}x{self.cols}, L={self.conductor}, {self._data!r})"


def rank(M: CycMatrix) -> int:
    echelon = SparseEchelon(M.cols)
    echelon.extend(M.sparse_rows())
    return echelon.rank


def kernel_basis(M: CycMatrix) -> List[List[CycNum]]:
    """Right null space as dense coordinate vectors, one per free column."""
    zero = CycNum.zero(M.conductor)
    out = []
    for vec in sparse_kernel(M.sparse_rows(), M.cols, M.conductor):
        out.append([vec.get(c, zero) for c in range(M.cols)])
    return out


def solve(M: CycMatrix, rhs: Sequence[Entry]) -> List[CycNum]:
    """One solution x of M x = rhs (free variables set to zero)."""
    if len(rhs) != M.rows:
        raise ParameterOutOfRange(f"right-hand side has {len(rhs)} entries, matrix has {M.rows} rows")
    L = M.conductor
    for value in rhs:
        if isinstance(value, CycNum):
            L = lcm(L, value.conductor)
    A = M.lift(L)
    echelon = SparseEchelon(A.cols + 1)
    for r, row in enumerate(A.sparse_rows()):
        value = as_cyc(rhs[r], L)
        if value:
            row[A.cols] = value
        echelon.add(row)
    if A.cols in echelon.rows:
        logger.debug(f"solve: inconsistent {A.rows}x{A.cols} system")
        raise InconsistentSystem(f"{A.rows}x{A.cols} system has no solution")
    zero = CycNum.zero(L)
    x = [zero] * A.cols
    for pivot, row in echelon.rows.items():
        x[pivot] = row.get(A.cols, zero)
    return x


def inverse(M: CycMatrix) -> CycMatrix:
    if M.rows != M.cols:
        raise ParameterOutOfRange(f"cannot invert a {M.rows}x{M.cols} matrix")
    ident = CycMatrix.identity(M.rows, M.conductor)
    try:
        columns = [solve(M, ident.column(c)) for c in range(M.cols)]
    except InconsistentSystem as e:
        raise InconsistentSystem("matrix is singular") from e
    if rank(M) < M.rows:
        raise InconsistentSystem("matrix is singular")
    return CycMatrix(columns, M.conductor).transpose()


def row_space_intersection(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    """Basis (as rows, reduced echelon form) of rowspace(A) intersected with rowspace(B)."""
    if A.cols != B.cols:
        raise ParameterOutOfRange(f"row spaces live in different dimensions {A.cols} and {B.cols}")
    a, b = A._aligned(B)
    L = a.conductor
    # columns are the spanning vectors of A followed by the negated ones of B
    gens = a.sparse_rows() + [{c: -x for c, x in row.items()} for row in b.sparse_rows()]
    system: List[SparseVec] = [dict() for _ in range(a.cols)]
    for j, vec in enumerate(gens):
        for c, x in vec.items():
            system[c][j] = x
    relations = sparse_kernel(system, len(gens), L)
    echelon = SparseEchelon(a.cols)
    arows = a.sparse_rows()
    for rel in relations:
        combo: SparseVec = {}
        for j, coeff in rel.items():
            if j < a.rows:
                for c, x in arows[j].items():
                    combo[c] = combo[c] + coeff * x if c in combo else coeff * x
        echelon.add({c: x for c, x in combo.items() if x})
    zero = CycNum.zero(L)
    rows = [[vec.get(c, zero) for c in range(a.cols)] for vec in echelon.basis()]
    return CycMatrix(rows, L, cols=a.cols)


def as_matrix(rows: Iterable[Sequence[Entry]], conductor: Optional[int] = None) -> CycMatrix:
    return CycMatrix([list(r) for r in rows], conductor)
