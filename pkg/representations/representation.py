"""Modules given by one matrix per generator, acting on column vectors."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from cyclotomic.field import CycNum
from cyclotomic.linalg import CycMatrix, inverse
from cyclotomic.sparse import SparseVec, sparse_kernel
from hopf.presentation import HopfPresentation
from hopf.rewriting import LinComb, Word
from representations.labels import RepLabel
from utils.errors import PresentationMismatch

logger = logging.getLogger(__name__)


@dataclass
class ModuleCheck:
    ok: bool
    violated: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


class Representation:
    """
    A module over a Hopf presentation.

    Parameters:
    -----------
    hopf : HopfPresentation
        the algebra acting
    matrices : list of CycMatrix
        matrices[g] is the action of generator g; column j is the image of basis vector j
    label : RepLabel or None
        catalog label when the module is a named one
    reducible : bool
        True for the convenience labels that split into two one-dimensional summands
    """

    def __init__(
        self,
        hopf: HopfPresentation,
        matrices: Sequence[CycMatrix],
        label: Optional[RepLabel] = None,
        reducible: bool = False,
    ):
        if len(matrices) != hopf.ngens:
            raise PresentationMismatch(f"{len(matrices)} matrices for {hopf.ngens} generators of {hopf.name}")
        dims = {(M.rows, M.cols) for M in matrices}
        if len(dims) != 1 or next(iter(dims))[0] != next(iter(dims))[1]:
            raise PresentationMismatch(f"generator matrices have shapes {sorted(dims)}")
        self.hopf = hopf
        self.conductor = hopf.conductor
        self.matrices = [M.lift(self.conductor) if M.conductor != self.conductor else M for M in matrices]
        self.dimension = matrices[0].rows
        self.label = label
        self.reducible = reducible
        self._word_cache: Dict[Word, CycMatrix] = {}

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"<Representation{tag} of {self.hopf.name}, dim {self.dimension}>"

    def matrix_of_word(self, word: Word) -> CycMatrix:
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            result = CycMatrix.identity(self.dimension, self.conductor)
        elif len(word) == 1:
            result = self.matrices[word[0]]
        else:
            result = self.matrix_of_word(word[:-1]) @ self.matrices[word[-1]]
        self._word_cache[word] = result
        return result

    def matrix_of(self, lc: LinComb) -> CycMatrix:
        out = CycMatrix.zeros(self.dimension, self.dimension, self.conductor)
        for word, coeff in lc.items():
            out = out + self.matrix_of_word(word).scale(coeff)
        return out

    def check_is_module(self) -> ModuleCheck:
        """Every defining relation must hold as a matrix identity."""
        for rel in self.hopf.relations():
            if self.matrix_of_word(rel.lhs) != self.matrix_of(rel.rhs_lincomb()):
                logger.debug(f"{self!r} violates {rel.name}")
                return ModuleCheck(False, rel.name)
        return ModuleCheck(True)

    def tensor(self, other: Representation) -> Representation:
        """self ⊗ other with g acting by sum c * rho1(w1) ⊗ rho2(w2) over Delta(g)."""
        if other.hopf is not self.hopf:
            raise PresentationMismatch(f"{self.hopf.name} vs {other.hopf.name}")
        size = self.dimension * other.dimension
        mats = []
        for g in range(self.hopf.ngens):
            acc = CycMatrix.zeros(size, size, self.conductor)
            for coeff, w1, w2 in self.hopf.coproduct(g):
                acc = acc + self.matrix_of_word(w1).kron(other.matrix_of_word(w2)).scale(coeff)
            mats.append(acc)
        return Representation(self.hopf, mats)

    def direct_sum(self, other: Representation) -> Representation:
        if other.hopf is not self.hopf:
            raise PresentationMismatch(f"{self.hopf.name} vs {other.hopf.name}")
        mats = [CycMatrix.block_diagonal([a, b]) for a, b in zip(self.matrices, other.matrices)]
        return Representation(self.hopf, mats)

    def change_basis(self, P: CycMatrix) -> Representation:
        """The same module written in the basis given by the columns of P."""
        P_inv = inverse(P)
        return Representation(self.hopf, [P_inv @ M @ P for M in self.matrices], self.label, self.reducible)

    def acts_as_identity(self, word: Word) -> bool:
        return self.matrix_of_word(word).is_identity()

    def character_value(self, word: Word) -> CycNum:
        M = self.matrix_of_word(word)
        total = CycNum.zero(self.conductor)
        for i in range(self.dimension):
            total = total + M[i, i]
        return total


def check_is_module(rep: Representation) -> ModuleCheck:
    return rep.check_is_module()


def tensor(rep1: Representation, rep2: Representation) -> Representation:
    return rep1.tensor(rep2)


def tensor_power(rep: Representation, k: int) -> Representation:
    result = rep
    for _ in range(k - 1):
        result = result.tensor(rep)
    return result


def direct_sum(reps: List[Representation]) -> Representation:
    result = reps[0]
    for rep in reps[1:]:
        result = result.direct_sum(rep)
    return result


def intertwiners(source: Representation, target: Representation) -> List[CycMatrix]:
    """
    Basis of Hom_H(source, target): matrices M with M source(g) = target(g) M.

    The unknown M[r][c] has index r * dim(source) + c.
    """
    if source.hopf is not target.hopf:
        raise PresentationMismatch(f"{source.hopf.name} vs {target.hopf.name}")
    ds, dt = source.dimension, target.dimension
    L = target.conductor
    rows: List[SparseVec] = []
    for g in range(source.hopf.ngens):
        S = source.matrices[g]
        T = target.matrices[g]
        for r in range(dt):
            for c in range(ds):
                eq: SparseVec = {}
                for k in range(ds):
                    x = S[k, c]
                    if x:
                        idx = r * ds + k
                        eq[idx] = eq[idx] + x if idx in eq else x
                for k in range(dt):
                    x = T[r, k]
                    if x:
                        idx = k * ds + c
                        eq[idx] = eq[idx] - x if idx in eq else -x
                eq = {i: v for i, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    out = []
    for vec in sparse_kernel(rows, dt * ds, L):
        M = CycMatrix.zeros(dt, ds, L)
        for idx, value in vec.items():
            M[idx // ds, idx % ds] = value
        out.append(M)
    return out
