"""
Generic degree-by-degree engine for T(V)/(R), independent of any rewriting rules.

Degree-d tensors are numbered in descending lexicographic order, so row reduction
of the ideal component I_d = sum V^{⊗a} ⊗ R ⊗ V^{⊗b} pivots on the largest word and
the surviving columns (standard monomials) are the smallest words of each class.
For the algebras built here these coincide with the closed-form normal words.
"""
from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Tuple

from cyclotomic.field import CycNum
from cyclotomic.linalg import CycMatrix
from cyclotomic.sparse import SparseEchelon, SparseVec, sparse_axpy
from hopf.rewriting import Word
from algebras.gradedAlgebra import DegreeBasis, GradedAlgebraSpec
from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

MAX_TENSOR_DEGREE = 12


class TensorQuotientEngine:
    """
    Parameters:
    -----------
    algebra : GradedAlgebraSpec
        supplies V, R and the H-module on V; its rewriting rules are not used
    """

    def __init__(self, algebra: GradedAlgebraSpec):
        self.algebra = algebra
        self.dim_v = algebra.dim_v
        self.one = CycNum.one(algebra.conductor)
        self._ideals: Dict[int, SparseEchelon] = {}
        self._bases: Dict[int, DegreeBasis] = {}
        self._tensor_action: Dict[Tuple[int, Word], SparseVec] = {}

    def _check_degree(self, d: int) -> None:
        if d < 0 or d > MAX_TENSOR_DEGREE:
            raise ParameterOutOfRange(f"tensor engine supports degrees 0..{MAX_TENSOR_DEGREE}, got {d}")

    def index_of(self, word: Word) -> int:
        """Position of a word among all words of its length, largest word first."""
        value = 0
        for letter in word:
            value = value * self.dim_v + letter
        return self.dim_v ** len(word) - 1 - value

    def word_at(self, index: int, d: int) -> Word:
        value = self.dim_v ** d - 1 - index
        letters = []
        for _ in range(d):
            value, letter = divmod(value, self.dim_v)
            letters.append(letter)
        return tuple(reversed(letters))

    def _words(self, d: int):
        return itertools.product(range(self.dim_v), repeat=d)

    def ideal(self, d: int) -> SparseEchelon:
        self._check_degree(d)
        echelon = self._ideals.get(d)
        if echelon is not None:
            return echelon
        echelon = SparseEchelon(self.dim_v ** d)
        if d >= 2:
            for a in range(d - 1):
                for left in self._words(a):
                    for right in self._words(d - 2 - a):
                        for rel in self.algebra.relations:
                            vec: SparseVec = {}
                            for pair, coeff in rel.items():
                                x, y = divmod(pair, self.dim_v)
                                vec[self.index_of(tuple(left) + (x, y) + tuple(right))] = coeff
                            echelon.add(vec)
        logger.debug(f"{self.algebra.name}: ideal in degree {d} has dimension {echelon.rank}")
        self._ideals[d] = echelon
        return echelon

    def degree_basis(self, d: int) -> DegreeBasis:
        cached = self._bases.get(d)
        if cached is None:
            ideal = self.ideal(d)
            free = [self.word_at(i, d) for i in range(self.dim_v ** d) if i not in ideal.rows]
            cached = DegreeBasis(d, sorted(free))
            self._bases[d] = cached
        return cached

    def reduce(self, tensor: Dict[Word, CycNum], d: int) -> SparseVec:
        """Coordinates, over the standard monomials, of the class of a degree-d tensor."""
        vec = {self.index_of(w): c for w, c in tensor.items() if c}
        remainder = self.ideal(d).reduce(vec)
        basis = self.degree_basis(d)
        return {basis.index[self.word_at(i, d)]: c for i, c in remainder.items()}

    def act_on_word(self, generator: int, word: Word) -> Dict[Word, CycNum]:
        """g acting on a pure tensor, through Delta(g) and the module on V."""
        key = (generator, word)
        cached = self._tensor_action.get(key)
        if cached is not None:
            return {self.word_at(i, len(word)): c for i, c in cached.items()}
        H = self.algebra.hopf
        if not word:
            eps = H.counit(generator)
            result = {(): eps} if eps else {}
        else:
            x, rest = word[0], word[1:]
            acc: SparseVec = {}
            for coeff, w1, w2 in H.coproduct(generator):
                left = self.algebra.module.matrix_of_word(w1).column(x)
                right = self.act_word_on_tensor(w2, rest)
                for y, a in enumerate(left):
                    if not a:
                        continue
                    for r, b in right.items():
                        sparse_axpy(acc, self.one, {self.index_of((y,) + r): coeff * a * b})
            result = {self.word_at(i, len(word)): c for i, c in acc.items()}
        self._tensor_action[key] = {self.index_of(w): c for w, c in result.items()}
        return result

    def act_word_on_tensor(self, hopf_word: Word, word: Word) -> Dict[Word, CycNum]:
        current: Dict[Word, CycNum] = {word: self.one}
        for g in reversed(hopf_word):
            nxt: SparseVec = {}
            for w, c in current.items():
                for w2, c2 in self.act_on_word(g, w).items():
                    sparse_axpy(nxt, c, {self.index_of(w2): c2})
            current = {self.word_at(i, len(word)): c for i, c in nxt.items()}
        return current

    def graded_action(self, generator: int, d: int) -> CycMatrix:
        basis = self.degree_basis(d)
        cols: List[SparseVec] = []
        for mono in basis.monomials:
            cols.append(self.reduce(self.act_on_word(generator, mono), d))
        return CycMatrix.from_columns(cols, basis.dimension, self.algebra.conductor)

    def agrees_with_closed_form(self, d: int) -> bool:
        """Same monomials and the same action matrices as the rewriting engine."""
        closed = self.algebra.degree_basis(d)
        if closed.monomials != self.degree_basis(d).monomials:
            logger.warning(f"{self.algebra.name}: generic and closed-form bases differ in degree {d}")
            return False
        for g in range(self.algebra.hopf.ngens):
            if self.graded_action(g, d) != self.algebra.graded_action(g, d):
                logger.warning(f"{self.algebra.name}: action of generator {g} differs in degree {d}")
                return False
        return True
