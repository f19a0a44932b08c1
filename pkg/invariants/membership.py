"""
Subalgebra membership in small graded rings, with a witness expression.

A witness is a linear combination of generator words: the key (0, 2, 2) stands for
g0 * g2 * g2. Spans are grown degree by degree, each basis vector remembering the
expression it came from.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from cyclotomic.field import CycNum
from hopf.rewriting import LinComb, RewritingSystem, Rule, Word, lc_add_into, lc_equal, lc_scale, lc_string
from utils.errors import ParameterOutOfRange, UnsupportedRing

logger = logging.getLogger(__name__)

RING_CONDUCTOR = 2
RING_NAMES = ("commutative", "skew", "lemma")


class GradedRing:
    """
    A ring k<letters>/(rules), graded by letter weights.

    Parameters:
    -----------
    name : str
        "commutative", "skew" or "lemma"
    letters : str
        one character per generator, e.g. "xyzw"
    rules : list of Rule
        confluent rewriting rules; checked on construction
    weights : list of int
        degree of each letter
    """

    def __init__(self, name: str, letters: str, rules: Sequence[Rule], weights: Sequence[int]):
        self.name = name
        self.letters = letters
        self.weights = list(weights)
        self.conductor = RING_CONDUCTOR
        self.one = CycNum.one(self.conductor)
        self.system = RewritingSystem(rules, len(letters), self.conductor, check=True)

    def __repr__(self) -> str:
        return f"<GradedRing {self.name} in {self.letters}>"

    def word(self, text: str) -> Word:
        try:
            return tuple(self.letters.index(ch) for ch in text)
        except ValueError as e:
            raise ParameterOutOfRange(f"{text!r} uses letters outside {self.letters}") from e

    def element(self, terms: Sequence[Tuple[object, str]]) -> LinComb:
        out: LinComb = {}
        for coeff, text in terms:
            value = coeff if isinstance(coeff, CycNum) else CycNum.from_rational(self.conductor, coeff)
            lc_add_into(out, self.system.normal_form(self.word(text)), value)
        return out

    def multiply(self, a: LinComb, b: LinComb) -> LinComb:
        out: LinComb = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                lc_add_into(out, self.system.normal_form(w1 + w2), c1 * c2)
        return out

    def add(self, a: LinComb, b: LinComb, scale: Optional[CycNum] = None) -> LinComb:
        out = dict(a)
        lc_add_into(out, b, scale)
        return out

    def degree(self, element: LinComb) -> int:
        degrees = {sum(self.weights[x] for x in w) for w in element}
        if len(degrees) != 1:
            raise ParameterOutOfRange(f"element is not homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    def text(self, element: LinComb) -> str:
        return lc_string(element, list(self.letters))


def commutative_plane() -> GradedRing:
    one = CycNum.one(RING_CONDUCTOR)
    return GradedRing("commutative", "xy", [Rule.make((1, 0), {(0, 1): one}, "yx")], [1, 1])


def skew_plane() -> GradedRing:
    """k_{-1}[x, y]: yx = -xy."""
    one = CycNum.one(RING_CONDUCTOR)
    return GradedRing("skew", "xy", [Rule.make((1, 0), {(0, 1): -one}, "yx")], [1, 1])


def lemma_ring(alpha: int = 3, k: int = 1) -> GradedRing:
    """
    k<x,y,z,w> with x, y commuting with everything except that xy = alpha z^{2k};
    z and w do not commute. deg x = deg y = k, deg z = deg w = 1.
    """
    if alpha == 0 or k < 1:
        raise ParameterOutOfRange(f"lemma ring needs alpha != 0 and k >= 1, got alpha={alpha}, k={k}")
    one = CycNum.one(RING_CONDUCTOR)
    x, y, z, w = 0, 1, 2, 3
    z_power = (z,) * (2 * k)
    rules = [
        Rule.make((y, x), {(x, y): one}, "yx"),
        Rule.make((z, x), {(x, z): one}, "zx"),
        Rule.make((w, x), {(x, w): one}, "wx"),
        Rule.make((z, y), {(y, z): one}, "zy"),
        Rule.make((w, y), {(y, w): one}, "wy"),
        Rule.make((x, y), {z_power: CycNum.from_rational(RING_CONDUCTOR, alpha)}, "xy"),
        # z^{2k} is central as a multiple of xy
        Rule.make((w,) + z_power, {z_power + (w,): one}, "wz^2k"),
    ]
    return GradedRing("lemma", "xyzw", rules, [k, k, 1, 1])


def ring_spec(name: str, **params) -> GradedRing:
    if name == "commutative":
        return commutative_plane()
    if name == "skew":
        return skew_plane()
    if name == "lemma":
        return lemma_ring(**params)
    raise UnsupportedRing(f"{name!r}; expected one of {RING_NAMES}")


class _TrackedEchelon:
    """Fully reduced row echelon form over ring monomials; each row keeps its witness."""

    def __init__(self):
        self.columns: Dict[Word, int] = {}
        self.rows: Dict[int, Tuple[Dict[int, CycNum], LinComb]] = {}

    def _vector(self, element: LinComb) -> Dict[int, CycNum]:
        vec = {}
        for word, coeff in element.items():
            if word not in self.columns:
                self.columns[word] = len(self.columns)
            vec[self.columns[word]] = coeff
        return vec

    def reduce(self, element: LinComb, witness: LinComb) -> Tuple[Dict[int, CycNum], LinComb]:
        vec = self._vector(element)
        expr = dict(witness)
        for pivot in sorted(self.rows):
            coeff = vec.get(pivot)
            if coeff is None:
                continue
            row, row_expr = self.rows[pivot]
            for c, value in row.items():
                updated = vec[c] - coeff * value if c in vec else -coeff * value
                if updated:
                    vec[c] = updated
                else:
                    vec.pop(c, None)
            lc_add_into(expr, row_expr, -coeff)
        return vec, expr

    def add(self, element: LinComb, witness: LinComb) -> bool:
        vec, expr = self.reduce(element, witness)
        if not vec:
            return False
        pivot = min(vec)
        inv = vec[pivot].inverse()
        vec = {c: value * inv for c, value in vec.items()}
        expr = lc_scale(expr, inv)
        for other_pivot, (row, row_expr) in list(self.rows.items()):
            coeff = row.get(pivot)
            if coeff is None:
                continue
            for c, value in vec.items():
                updated = row[c] - coeff * value if c in row else -coeff * value
                if updated:
                    row[c] = updated
                else:
                    row.pop(c, None)
            lc_add_into(row_expr, expr, -coeff)
        self.rows[pivot] = (vec, expr)
        return True

    def basis(self) -> List[Tuple[LinComb, LinComb]]:
        inverse_columns = {i: w for w, i in self.columns.items()}
        out = []
        for pivot in sorted(self.rows):
            row, expr = self.rows[pivot]
            out.append(({inverse_columns[c]: v for c, v in row.items()}, expr))
        return out


@dataclass
class MembershipResult:
    member: bool
    degree: int
    witness: LinComb = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.member


def evaluate_witness(ring: GradedRing, generators: Sequence[LinComb], witness: LinComb) -> LinComb:
    out: LinComb = {}
    for gen_word, coeff in witness.items():
        product: LinComb = {(): ring.one}
        for g in gen_word:
            product = ring.multiply(product, generators[g])
        lc_add_into(out, product, coeff)
    return out


class SubalgebraFiltration:
    """
    Degree-by-degree spans of the subalgebra generated by homogeneous elements of
    positive degree; spans[d] is a basis of the degree-d part, each vector with its witness.
    """

    def __init__(self, ring: GradedRing, generators: Sequence[LinComb]):
        self.ring = ring
        self.generators = list(generators)
        self.degrees = [ring.degree(g) for g in self.generators]
        if any(d <= 0 for d in self.degrees):
            raise ParameterOutOfRange("generators must have positive degree")
        self._echelons: Dict[int, _TrackedEchelon] = {}
        self._spans: Dict[int, List[Tuple[LinComb, LinComb]]] = {0: [({(): ring.one}, {(): ring.one})]}

    def span(self, d: int) -> List[Tuple[LinComb, LinComb]]:
        if d not in self._spans:
            self.echelon(d)
        return self._spans[d]

    def echelon(self, d: int) -> _TrackedEchelon:
        if d in self._echelons:
            return self._echelons[d]
        echelon = _TrackedEchelon()
        for g, (gen, e) in enumerate(zip(self.generators, self.degrees)):
            if e > d:
                continue
            for value, expr in self.span(d - e):
                product = self.ring.multiply(gen, value)
                witness = {(g,) + w: c for w, c in expr.items()}
                echelon.add(product, witness)
        self._echelons[d] = echelon
        self._spans[d] = echelon.basis()
        return echelon

    def test(self, element: LinComb) -> MembershipResult:
        ring = self.ring
        if not element:
            return MembershipResult(True, 0)
        target = ring.degree(element)
        if target == 0:
            return MembershipResult(True, 0, {(): element[()]})
        remainder, expr = self.echelon(target).reduce(element, {})
        if remainder:
            logger.debug(f"{ring.name}: {ring.text(element)} is not in the subalgebra")
            return MembershipResult(False, target)
        witness = lc_scale(expr, -ring.one)
        if not lc_equal(evaluate_witness(ring, self.generators, witness), element):
            raise ParameterOutOfRange("witness does not reproduce the element")
        return MembershipResult(True, target, witness)


def subalgebra_membership(
    ring: GradedRing,
    element: LinComb,
    generators: Sequence[LinComb],
    filtration: Optional[SubalgebraFiltration] = None,
) -> MembershipResult:
    """
    Decide whether a homogeneous element lies in the subalgebra generated by homogeneous
    generators of positive degree, returning a witness expression when it does.
    Pass a filtration built on the same generators to reuse spans across elements.
    """
    if filtration is None:
        filtration = SubalgebraFiltration(ring, generators)
    return filtration.test(element)


def f_tls(ring: GradedRing, t: int, l: int, s: int) -> LinComb:
    """z^t (x^l + (-1)^{t+s+l} y^l) w^s in the lemma ring."""
    sign = (-1) ** (t + s + l)
    return ring.element([(1, "z" * t + "x" * l + "w" * s), (sign, "z" * t + "y" * l + "w" * s)])


def g_tl(ring: GradedRing, t: int, l: int) -> LinComb:
    """(xy)^t (x^l + (-1)^t y^l) in the skew plane."""
    return ring.element([(1, "xy" * t + "x" * l), ((-1) ** t, "xy" * t + "y" * l)])
