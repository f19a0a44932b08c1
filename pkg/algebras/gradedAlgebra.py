"""
Quadratic algebras A = T(V)/(R) carrying an H-action, with normal-form bases per degree.

Letters are indexed like the basis of the degree-one module V (u = 0, v = 1, t = 2).
A relation is a sparse vector over V ⊗ V with index i * dim V + j for e_i ⊗ e_j.
The closed-form engine multiplies with a confluent rewriting system whose rules
always replace a word by graded-lex smaller ones (u < v < t).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from cyclotomic.field import CycNum
from cyclotomic.linalg import CycMatrix
from cyclotomic.sparse import SparseEchelon, SparseVec, sparse_axpy
from hopf.presentation import HopfPresentation
from hopf.rewriting import LinComb, RewritingSystem, Rule, Word, lc_add_into, word_string
from representations.labels import RepLabel
from representations.representation import Representation
from utils.errors import ParameterOutOfRange, UnstableRelations

logger = logging.getLogger(__name__)

TAGS = ("skew-2gen", "u2cv2", "ore-over-base")


@dataclass
class DegreeBasis:
    """Normal monomials of one degree; coordinates are positions in `monomials`."""
    degree: int
    monomials: List[Word]
    index: Dict[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {w: k for k, w in enumerate(self.monomials)}

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def section(self, k: int) -> Word:
        """Tensor representative of the k-th normal monomial."""
        return self.monomials[k]


@dataclass
class OreLayer:
    base: "GradedAlgebraSpec"
    sigma: CycMatrix
    t_label: RepLabel
    t_rep: Representation


class GradedAlgebraSpec:
    """
    A graded H-module algebra generated in degree one.

    Parameters:
    -----------
    name : str
        e.g. "Aminus", "A3plus", "KP-c"
    hopf : HopfPresentation
        the acting Hopf algebra
    module : Representation
        H-module structure on V = span of the letters
    letters : list of str
        letter names, in the order of the basis of V
    relations : list of SparseVec
        spanning vectors of R inside V ⊗ V
    rules : list of Rule
        rewriting rules for the closed-form engine, equivalent to R
    tag : str
        closed-form basis shape, one of TAGS
    params : dict
        parameters the algebra was built from (i, j, epsilon, c ...)
    ore : OreLayer or None
        base algebra, sigma and t-module for Ore extensions
    """

    def __init__(
        self,
        name: str,
        hopf: HopfPresentation,
        module: Representation,
        letters: Sequence[str],
        relations: Sequence[SparseVec],
        rules: Sequence[Rule],
        tag: str,
        params: Optional[Dict[str, object]] = None,
        ore: Optional[OreLayer] = None,
        check_stable: bool = True,
    ):
        if tag not in TAGS:
            raise ParameterOutOfRange(f"unknown algebra tag {tag!r}")
        if module.dimension != len(letters):
            raise ParameterOutOfRange(f"{len(letters)} letters for a {module.dimension}-dimensional module")
        self.name = name
        self.hopf = hopf
        self.module = module
        self.letters = list(letters)
        self.relations = [dict(r) for r in relations]
        self.tag = tag
        self.params = dict(params or {})
        self.ore = ore
        self.conductor = hopf.conductor
        self.one = CycNum.one(self.conductor)
        self.system = RewritingSystem(rules, len(letters), self.conductor, check=True)
        self.inner_faithful: Optional[bool] = None
        self.notes: List[str] = []
        if module.reducible or (ore is not None and ore.base.module.reducible):
            self.notes.append("reducible degree-one module; theorems do not apply")
        self._bases: Dict[int, DegreeBasis] = {}
        self._gen_cols: Dict[Tuple[int, int], List[SparseVec]] = {}
        self._word_cols: Dict[Tuple[Word, int, int], SparseVec] = {}
        self._letter_products: Dict[Tuple[int, int, int], SparseVec] = {}
        self._products: Dict[Tuple[int, int, int, int], SparseVec] = {}
        if check_stable:
            check_relations_stable(self)

    def __repr__(self) -> str:
        return f"<GradedAlgebraSpec {self.name} over {self.hopf.name}>"

    @property
    def dim_v(self) -> int:
        return len(self.letters)

    def word(self, text: str) -> Word:
        """Parse a letter word such as "uvu" or "uut"."""
        try:
            return tuple(self.letters.index(ch) for ch in text)
        except ValueError as e:
            raise ParameterOutOfRange(f"{text!r} is not a word in {self.letters}") from e

    def word_text(self, word: Word) -> str:
        return word_string(word, self.letters)

    # bases and coordinates

    def degree_basis(self, d: int) -> DegreeBasis:
        if d < 0:
            raise ParameterOutOfRange(f"degree {d} is negative")
        basis = self._bases.get(d)
        if basis is None:
            basis = DegreeBasis(d, self.system.irreducible_words(d))
            self._bases[d] = basis
        return basis

    def coordinates(self, lc: LinComb) -> Tuple[int, SparseVec]:
        """Normalize a homogeneous combination of letter words into (degree, coordinates)."""
        degrees = {len(w) for w in lc}
        if len(degrees) > 1:
            raise ParameterOutOfRange(f"element is not homogeneous (degrees {sorted(degrees)})")
        d = degrees.pop() if degrees else 0
        basis = self.degree_basis(d)
        out: SparseVec = {}
        for word, coeff in lc.items():
            for nw, c in self.system.normal_form(word).items():
                k = basis.index[nw]
                value = out[k] + coeff * c if k in out else coeff * c
                if value:
                    out[k] = value
                else:
                    out.pop(k, None)
        return d, out

    def element(self, terms: Sequence[Tuple[object, str]]) -> Tuple[int, SparseVec]:
        """Coordinates of sum c * word, words given as letter strings."""
        lc: LinComb = {}
        for coeff, text in terms:
            value = coeff if isinstance(coeff, CycNum) else CycNum.from_rational(self.conductor, coeff)
            lc_add_into(lc, {self.word(text): value})
        return self.coordinates(lc)

    def to_lincomb(self, vec: SparseVec, d: int) -> LinComb:
        basis = self.degree_basis(d)
        return {basis.monomials[k]: c for k, c in vec.items()}

    def format(self, vec: SparseVec, d: int) -> str:
        if not vec:
            return "0"
        basis = self.degree_basis(d)
        parts = []
        for k in sorted(vec):
            parts.append(f"({vec[k]!r})*{self.word_text(basis.monomials[k])}")
        return " + ".join(parts)

    # multiplication

    def _letter_times(self, letter: int, d: int, k: int) -> SparseVec:
        key = (letter, d, k)
        cached = self._letter_products.get(key)
        if cached is None:
            word = (letter,) + self.degree_basis(d).monomials[k]
            _, cached = self.coordinates({word: self.one})
            self._letter_products[key] = cached
        return cached

    def monomial_product(self, d1: int, i: int, d2: int, j: int) -> SparseVec:
        key = (d1, i, d2, j)
        cached = self._products.get(key)
        if cached is None:
            word = self.degree_basis(d1).monomials[i] + self.degree_basis(d2).monomials[j]
            _, cached = self.coordinates({word: self.one})
            self._products[key] = cached
        return cached

    def multiply(self, a: SparseVec, d1: int, b: SparseVec, d2: int) -> SparseVec:
        out: SparseVec = {}
        for i, x in a.items():
            for j, y in b.items():
                sparse_axpy(out, x * y, self.monomial_product(d1, i, d2, j))
        return out

    # H-action

    def action_columns(self, generator: int, d: int) -> List[SparseVec]:
        """
        Columns of the action of a generator on A_d, by
        g(x * rest) = sum c (w1 x)(w2 rest) over Delta(g) = sum c w1 ⊗ w2.
        """
        key = (generator, d)
        cached = self._gen_cols.get(key)
        if cached is not None:
            return cached
        basis = self.degree_basis(d)
        H = self.hopf
        if d == 0:
            eps = H.counit(generator)
            cols = [{0: eps} if eps else {}]
        else:
            lower = self.degree_basis(d - 1)
            cols = []
            for mono in basis.monomials:
                x, rest = mono[0], lower.index[mono[1:]]
                col: SparseVec = {}
                for coeff, w1, w2 in H.coproduct(generator):
                    left = self.module.matrix_of_word(w1).column(x)
                    right = self.act_word_on_monomial(w2, d - 1, rest)
                    for y, a in enumerate(left):
                        if not a:
                            continue
                        for k, b in right.items():
                            sparse_axpy(col, coeff * a * b, self._letter_times(y, d - 1, k))
                cols.append(col)
        self._gen_cols[key] = cols
        logger.debug(f"{self.name}: action of {H.generator_names[generator]} on degree {d} ({basis.dimension} monomials)")
        return cols

    def act_word_on_monomial(self, word: Word, d: int, k: int) -> SparseVec:
        key = (word, d, k)
        cached = self._word_cols.get(key)
        if cached is None:
            cached = self.act_word(word, d, {k: self.one})
            self._word_cols[key] = cached
        return cached

    def act_word(self, word: Word, d: int, vec: SparseVec) -> SparseVec:
        current = dict(vec)
        for g in reversed(word):
            cols = self.action_columns(g, d)
            nxt: SparseVec = {}
            for k, c in current.items():
                sparse_axpy(nxt, c, cols[k])
            current = nxt
        return current

    def act(self, generator: int, d: int, vec: SparseVec) -> SparseVec:
        return self.act_word((generator,), d, vec)

    def graded_action(self, generator: int, d: int) -> CycMatrix:
        basis = self.degree_basis(d)
        return CycMatrix.from_columns(self.action_columns(generator, d), basis.dimension, self.conductor)

    def degree_module(self, d: int) -> Representation:
        """A_d as an H-module."""
        return Representation(self.hopf, [self.graded_action(g, d) for g in range(self.hopf.ngens)])

    def hilbert_function(self, D: int) -> List[int]:
        return [self.degree_basis(d).dimension for d in range(D + 1)]

    def to_json(self) -> dict:
        rel_vectors = []
        for rel in self.relations:
            rel_vectors.append({str(k): v.to_json() for k, v in sorted(rel.items())})
        doc = {
            "name": self.name,
            "family": self.hopf.family,
            "hopf_parameters": dict(self.hopf.params),
            "parameters": {k: (v.to_json() if isinstance(v, CycNum) else v) for k, v in self.params.items()},
            "letters": list(self.letters),
            "tag": self.tag,
            "degree_one_module": [str(self.module.label)] if self.module.label else None,
            "relations": rel_vectors,
            "inner_faithful": self.inner_faithful,
        }
        if self.ore is not None:
            doc["sigma"] = self.ore.sigma.to_json()
            doc["t_label"] = str(self.ore.t_label)
            doc["degree_one_module"] = [str(self.ore.base.module.label), str(self.ore.t_label)]
        return doc


def check_relations_stable(A: GradedAlgebraSpec) -> bool:
    """Rank test: every generator maps the relation space R into itself under the V ⊗ V action."""
    square = A.module.tensor(A.module)
    span = SparseEchelon(A.dim_v ** 2)
    span.extend(A.relations)
    for g in range(A.hopf.ngens):
        M = square.matrices[g]
        for rel in A.relations:
            image = M.apply(rel)
            if not span.contains(image):
                name = A.hopf.generator_names[g]
                logger.debug(f"{A.name}: relation space not stable under {name}")
                raise UnstableRelations(name, A.name)
    return True


def degree_basis(A: GradedAlgebraSpec, d: int) -> DegreeBasis:
    return A.degree_basis(d)


def graded_action(A: GradedAlgebraSpec, generator: int, d: int) -> CycMatrix:
    return A.graded_action(generator, d)


def skew_two_generator(
    name: str,
    hopf: HopfPresentation,
    module: Representation,
    c: CycNum,
    params: Optional[Dict[str, object]] = None,
) -> GradedAlgebraSpec:
    """k<u,v>/(c uv - vu): vu rewrites to c uv, basis u^a v^b."""
    L = hopf.conductor
    one = CycNum.one(L)
    relation = {0 * 2 + 1: c, 1 * 2 + 0: -one}
    rules = [Rule.make((1, 0), {(0, 1): c}, "vu")]
    merged = {"c": c, **(params or {})}
    return GradedAlgebraSpec(name, hopf, module, ["u", "v"], [relation], rules, "skew-2gen", merged)


def u_square_c_v_square(
    name: str,
    hopf: HopfPresentation,
    module: Representation,
    c: CycNum,
    params: Optional[Dict[str, object]] = None,
) -> GradedAlgebraSpec:
    """k<u,v>/(u^2 - c v^2): basis u^i (vu)^j v^l with l in {0, 1}."""
    if not c:
        raise ParameterOutOfRange("u^2 - c v^2 needs c != 0")
    L = hopf.conductor
    one = CycNum.one(L)
    relation = {0: one, 3: -c}
    rules = [
        Rule.make((1, 1), {(0, 0): c.inverse()}, "vv"),
        Rule.make((1, 0, 0), {(0, 0, 1): one}, "vuu"),
    ]
    merged = {"c": c, **(params or {})}
    return GradedAlgebraSpec(name, hopf, module, ["u", "v"], [relation], rules, "u2cv2", merged)
