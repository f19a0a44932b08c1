"""
Sparse Gaussian elimination over Q(zeta_L).

Vectors are plain dicts {column index: CycNum} with zero entries dropped.
The pivot of a row is its smallest column index, so callers choose which
basis element gets eliminated first simply by how they number the columns.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional

from cyclotomic.field import CycNum

logger = logging.getLogger(__name__)

SparseVec = Dict[int, CycNum]


def sparse_axpy(target: SparseVec, scale: CycNum, source: SparseVec) -> None:
    """target += scale * source, in place."""
    for idx, value in source.items():
        updated = target[idx] + scale * value if idx in target else scale * value
        if updated:
            target[idx] = updated
        else:
            target.pop(idx, None)


def sparse_scale(vec: SparseVec, scale: CycNum) -> SparseVec:
    return {idx: value * scale for idx, value in vec.items()}


def clean(vec: SparseVec) -> SparseVec:
    return {idx: value for idx, value in vec.items() if value}


class SparseEchelon:
    """
    Incremental row echelon form with unit pivots.

    Rows are kept fully reduced (no row has a nonzero entry at another row's pivot),
    which makes kernels and normal forms readable directly off the stored rows.
    """

    def __init__(self, ncols: Optional[int] = None):
        self.ncols = ncols
        self.rows: Dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """Remainder of vec after eliminating every pivot column."""
        work = clean(dict(vec))
        for pivot in sorted(self.rows):
            coeff = work.get(pivot)
            if coeff is not None:
                sparse_axpy(work, -coeff, self.rows[pivot])
        return work

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    def add(self, vec: SparseVec) -> bool:
        """Insert vec; returns False when it was already in the row space."""
        work = self.reduce(vec)
        if not work:
            return False
        pivot = min(work)
        inv = work[pivot].inverse()
        row = sparse_scale(work, inv)
        for other_pivot, other in self.rows.items():
            coeff = other.get(pivot)
            if coeff is not None:
                sparse_axpy(other, -coeff, row)
        self.rows[pivot] = row
        return True

    def extend(self, vectors: Iterable[SparseVec]) -> int:
        added = 0
        for vec in vectors:
            if self.add(vec):
                added += 1
        return added

    def basis(self) -> List[SparseVec]:
        return [self.rows[p] for p in sorted(self.rows)]


def sparse_kernel(rows: Iterable[SparseVec], ncols: int, conductor: int) -> List[SparseVec]:
    """
    Basis of {x : r . x = 0 for every row r}, one vector per free column.

    The returned vectors are ordered by their free column and have a 1 there.
    """
    echelon = SparseEchelon(ncols)
    echelon.extend(rows)
    one = CycNum.one(conductor)
    free = [c for c in range(ncols) if c not in echelon.rows]
    basis: List[SparseVec] = []
    for f in free:
        vec: SparseVec = {f: one}
        for pivot, row in echelon.rows.items():
            coeff = row.get(f)
            if coeff is not None:
                vec[pivot] = -coeff
        basis.append(vec)
    logger.debug(f"sparse kernel: {ncols} columns, rank {echelon.rank}, nullity {len(basis)}")
    return basis
