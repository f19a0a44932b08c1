"""
Finite-dimensional Hopf algebras given by generators and normal forms.

A presentation knows how to bring a word to normal form, and stores the
coproduct, counit and antipode of each generator. Everything on longer words
(products, iterated coproducts, Hopf-axiom checks) is derived here.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from cyclotomic.field import CycNum
from hopf.rewriting import (
    LinComb,
    RewritingSystem,
    Rule,
    Word,
    lc_add_into,
    lc_equal,
    lc_string,
)
from utils.errors import ConfluenceError

logger = logging.getLogger(__name__)

CoproductExpansion = List[Tuple[CycNum, Word, Word]]
Tensor = Dict[Tuple[Word, ...], CycNum]


@dataclass(frozen=True)
class Relation:
    """A defining identity lhs = rhs that every module must satisfy."""
    name: str
    lhs: Word
    rhs: Tuple[Tuple[Word, CycNum], ...]

    def rhs_lincomb(self) -> LinComb:
        return dict(self.rhs)


def _tensor_add(target: Tensor, key: Tuple[Word, ...], value: CycNum) -> None:
    if key in target:
        value = target[key] + value
    if value:
        target[key] = value
    else:
        target.pop(key, None)


class HopfPresentation(ABC):
    """
    Common interface of every Hopf algebra the engine builds.

    Parameters:
    -----------
    family : str
        family tag ("H2n2", "A4m", "B4m", "ZnWrS2", "D4m", "D2mxZ2")
    params : dict
        family parameters, e.g. {"n": 3} or {"m": 4}
    generator_names : list of str
        letters; index i of a Word refers to generator_names[i]
    conductor : int
        ambient cyclotomic conductor of all scalars of this algebra
    """

    def __init__(self, family: str, params: Dict[str, int], generator_names: Sequence[str], conductor: int):
        self.family = family
        self.params = dict(params)
        self.generator_names = list(generator_names)
        self.conductor = conductor
        self.one = CycNum.one(conductor)
        self.zero = CycNum.zero(conductor)
        self._coproduct_cache: Dict[Word, Tensor] = {}
        self._irreducible_catalog: Optional[list] = None  # filled by representations.catalog

    # subclass hooks

    @abstractmethod
    def normal_form(self, word: Word) -> LinComb:
        ...

    @abstractmethod
    def basis(self) -> List[Word]:
        ...

    @abstractmethod
    def coproduct(self, generator: int) -> CoproductExpansion:
        ...

    @abstractmethod
    def antipode(self, generator: int) -> LinComb:
        ...

    @abstractmethod
    def counit(self, generator: int) -> CycNum:
        ...

    @abstractmethod
    def relations(self) -> List[Relation]:
        ...

    @abstractmethod
    def group_like_generators(self) -> List[int]:
        ...

    # derived structure

    @property
    def name(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"

    @property
    def dimension(self) -> int:
        return len(self.basis())

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def generator(self, name: str) -> int:
        return self.generator_names.index(name)

    def word(self, text: str) -> Word:
        """Parse a word written letter by letter, e.g. "s+s-" or "xyz"."""
        out: List[int] = []
        names = sorted(self.generator_names, key=len, reverse=True)
        rest = text
        while rest:
            for name in names:
                if rest.startswith(name):
                    out.append(self.generator_names.index(name))
                    rest = rest[len(name):]
                    break
            else:
                raise ValueError(f"cannot parse {text!r} over {self.generator_names}")
        return tuple(out)

    def normalize(self, lc: LinComb) -> LinComb:
        out: LinComb = {}
        for word, coeff in lc.items():
            lc_add_into(out, self.normal_form(word), coeff)
        return out

    def multiply(self, h1: LinComb, h2: LinComb) -> LinComb:
        out: LinComb = {}
        for w1, c1 in h1.items():
            for w2, c2 in h2.items():
                lc_add_into(out, self.normal_form(w1 + w2), c1 * c2)
        return out

    def counit_of_word(self, word: Word) -> CycNum:
        value = self.one
        for letter in word:
            value = value * self.counit(letter)
        return value

    def counit_of(self, lc: LinComb) -> CycNum:
        total = self.zero
        for word, coeff in lc.items():
            total = total + coeff * self.counit_of_word(word)
        return total

    def antipode_of_word(self, word: Word) -> LinComb:
        out: LinComb = {(): self.one}
        for letter in word:
            out = self.multiply(self.antipode(letter), out)
        return out

    def antipode_of(self, lc: LinComb) -> LinComb:
        out: LinComb = {}
        for word, coeff in lc.items():
            lc_add_into(out, self.antipode_of_word(word), coeff)
        return out

    def coproduct_of_word(self, word: Word) -> Tensor:
        """Delta(word) with both legs in normal form."""
        cached = self._coproduct_cache.get(word)
        if cached is not None:
            return cached
        current: Tensor = {((), ()): self.one}
        for letter in word:
            nxt: Tensor = {}
            for (a, b), c in current.items():
                for c2, w1, w2 in self.coproduct(letter):
                    for n1, k1 in self.normal_form(a + w1).items():
                        for n2, k2 in self.normal_form(b + w2).items():
                            _tensor_add(nxt, (n1, n2), c * c2 * k1 * k2)
            current = nxt
        self._coproduct_cache[word] = current
        return current

    def coproduct_of(self, lc: LinComb) -> Tensor:
        out: Tensor = {}
        for word, coeff in lc.items():
            for key, value in self.coproduct_of_word(word).items():
                _tensor_add(out, key, coeff * value)
        return out

    def _expand_slot(self, tensor: Tensor, slot: int) -> Tensor:
        out: Tensor = {}
        for key, coeff in tensor.items():
            for (w1, w2), c in self.coproduct_of_word(key[slot]).items():
                _tensor_add(out, key[:slot] + (w1, w2) + key[slot + 1:], coeff * c)
        return out

    def iterated_coproduct(self, generator: int, d: int, slot: str = "right") -> List[Tuple[CycNum, Tuple[Word, ...]]]:
        """
        Delta^(d-1)(g) as a list of (coefficient, d-tuple of normal words).

        slot chooses which leg is split at each step; both choices give the same
        tensor when the coproduct is coassociative.
        """
        if d < 1:
            raise ValueError(f"iterated coproduct needs d >= 1, got {d}")
        tensor: Tensor = {(w,): c for w, c in self.normal_form((generator,)).items()}
        for step in range(1, d):
            tensor = self._expand_slot(tensor, step - 1 if slot == "right" else 0)
        return sorted(((c, key) for key, c in tensor.items()), key=lambda item: item[1])

    def group_like_elements(self) -> List[Word]:
        """Normal words of the group generated by the group-like generators."""
        seen: Dict[Word, None] = {(): None}
        frontier: List[Word] = [()]
        gens = self.group_like_generators()
        while frontier:
            nxt: List[Word] = []
            for word in frontier:
                for g in gens:
                    nf = self.normal_form(word + (g,))
                    if len(nf) != 1:
                        continue
                    (product, coeff), = nf.items()
                    if coeff == 1 and product not in seen:
                        seen[product] = None
                        nxt.append(product)
            frontier = nxt
        return sorted(seen, key=lambda w: (len(w), w))

    def check_hopf_axioms(self) -> List[str]:
        """Coassociativity, counit and antipode identities on every generator."""
        failures: List[str] = []
        names = self.generator_names
        for g in range(self.ngens):
            gname = names[g]
            left = {k: c for c, k in self.iterated_coproduct(g, 3, slot="left")}
            right = {k: c for c, k in self.iterated_coproduct(g, 3, slot="right")}
            if set(left) != set(right) or any(left[k] != right[k] for k in left):
                failures.append(f"coassociativity fails at {gname}")
            target = self.normal_form((g,))
            eps_left: LinComb = {}
            eps_right: LinComb = {}
            s_left: LinComb = {}
            s_right: LinComb = {}
            for (w1, w2), c in self.coproduct_of_word((g,)).items():
                lc_add_into(eps_left, {w2: self.counit_of_word(w1) * c})
                lc_add_into(eps_right, {w1: self.counit_of_word(w2) * c})
                lc_add_into(s_left, self.multiply(self.antipode_of_word(w1), {w2: c}))
                lc_add_into(s_right, self.multiply({w1: c}, self.antipode_of_word(w2)))
            if not lc_equal(eps_left, target) or not lc_equal(eps_right, target):
                failures.append(f"counit axiom fails at {gname}")
            unit = {(): self.counit(g)} if self.counit(g) else {}
            if not lc_equal(s_left, unit) or not lc_equal(s_right, unit):
                failures.append(
                    f"antipode axiom fails at {gname}: {lc_string(s_left, names)} / {lc_string(s_right, names)}"
                )
        for rel in self.relations():
            if self.counit_of_word(rel.lhs) != self.counit_of(rel.rhs_lincomb()):
                failures.append(f"counit does not respect relation {rel.name}")
        if failures:
            logger.warning(f"{self.name}: {len(failures)} Hopf axiom failures")
        return failures

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} dim={self.dimension}>"


class RewritingPresentation(HopfPresentation):
    """Presentation whose multiplication is a confluent rewriting system."""

    def __init__(
        self,
        family: str,
        params: Dict[str, int],
        generator_names: Sequence[str],
        conductor: int,
        rules: Sequence[Rule],
        coproducts: Dict[int, CoproductExpansion],
        antipodes: Dict[int, LinComb],
        counits: Dict[int, CycNum],
        group_like: Sequence[int],
    ):
        super().__init__(family, params, generator_names, conductor)
        self.system = RewritingSystem(rules, len(generator_names), conductor, check=True)
        self._coproducts = coproducts
        self._antipodes = antipodes
        self._counits = counits
        self._group_like = list(group_like)
        self._basis: Optional[List[Word]] = None

    def normal_form(self, word: Word) -> LinComb:
        return self.system.normal_form(word)

    def basis(self) -> List[Word]:
        if self._basis is None:
            words: List[Word] = []
            degree = 0
            # a finite-dimensional algebra has no normal words past some length
            while True:
                layer = self.system.irreducible_words(degree)
                if not layer:
                    break
                words.extend(layer)
                degree += 1
            self._basis = words
        return self._basis

    def coproduct(self, generator: int) -> CoproductExpansion:
        return self._coproducts[generator]

    def antipode(self, generator: int) -> LinComb:
        return self._antipodes[generator]

    def counit(self, generator: int) -> CycNum:
        return self._counits[generator]

    def relations(self) -> List[Relation]:
        return [Relation(r.name, r.lhs, r.rhs) for r in self.system.rules]

    def group_like_generators(self) -> List[int]:
        return list(self._group_like)


DihedralKey = Tuple[int, int, int]


class DihedralPresentation(HopfPresentation):
    """
    Algebras spanned by a^e (s+ s-)^p s-^d.

    Multiplication is the explicit law on keys (e, p, d): moving rho^p past s-
    inverts it, and with carry=True the wraparound rho^{rho_order} equals a.
    Generators are [a,] s+, s-.
    """

    def __init__(
        self,
        family: str,
        params: Dict[str, int],
        conductor: int,
        rho_order: int,
        has_a: bool,
        carry: bool,
        hopf_structure: str,
    ):
        names = (["a"] if has_a else []) + ["s+", "s-"]
        super().__init__(family, params, names, conductor)
        self.rho_order = rho_order
        self.has_a = has_a
        self.carry = carry
        self.hopf_structure = hopf_structure
        self._a = 0 if has_a else None
        self._sp = names.index("s+")
        self._sm = names.index("s-")
        keys = {self._sp: (0, 1, 1), self._sm: (0, 0, 1)}
        if has_a:
            keys[self._a] = (1, 0, 0)
        self._letter_keys = keys
        self._nf_cache: Dict[Word, LinComb] = {}
        self._relations = self._declared_relations()
        self._verify_relations()

    def key_product(self, k1: DihedralKey, k2: DihedralKey) -> DihedralKey:
        e1, p1, d1 = k1
        e2, p2, d2 = k2
        P = p1 + (p2 if d1 == 0 else -p2)
        e = e1 + e2
        if self.carry:
            e += P // self.rho_order
        return (e % 2, P % self.rho_order, (d1 + d2) % 2)

    def key_of(self, word: Word) -> DihedralKey:
        key: DihedralKey = (0, 0, 0)
        for letter in word:
            key = self.key_product(key, self._letter_keys[letter])
        return key

    def word_of(self, key: DihedralKey) -> Word:
        e, p, d = key
        head = (self._a,) * e
        if d and p:
            # rho^p s- = (s+ s-)^{p-1} s+
            return head + (self._sp, self._sm) * (p - 1) + (self._sp,)
        return head + (self._sp, self._sm) * p + (self._sm,) * d

    def normal_form(self, word: Word) -> LinComb:
        word = tuple(word)
        cached = self._nf_cache.get(word)
        if cached is None:
            cached = {self.word_of(self.key_of(word)): self.one}
            self._nf_cache[word] = cached
        return cached

    def basis(self) -> List[Word]:
        es = (0, 1) if self.has_a else (0,)
        return [self.word_of((e, p, d)) for e in es for p in range(self.rho_order) for d in (0, 1)]

    def _declared_relations(self) -> List[Relation]:
        one = self.one
        sp, sm = self._sp, self._sm
        rels = [
            Relation("s+s+=1", (sp, sp), (((), one),)),
            Relation("s-s-=1", (sm, sm), (((), one),)),
        ]
        if self.has_a:
            a = self._a
            rels += [
                Relation("aa=1", (a, a), (((), one),)),
                Relation("as+=s+a", (a, sp), (((sp, a), one),)),
                Relation("as-=s-a", (a, sm), (((sm, a), one),)),
            ]
        power = (sp, sm) * self.rho_order
        if self.carry:
            rels.append(Relation(f"(s+s-)^{self.rho_order}=a", power, (((self._a,), one),)))
        else:
            rels.append(Relation(f"(s+s-)^{self.rho_order}=1", power, (((), one),)))
        return rels

    def _verify_relations(self) -> None:
        for rel in self._relations:
            lhs = self.normal_form(rel.lhs)
            rhs = self.normalize(rel.rhs_lincomb())
            if not lc_equal(lhs, rhs):
                raise ConfluenceError(f"multiplication law of {self.name} violates {rel.name}")
        basis = self.basis()
        if len({self.key_of(w) for w in basis}) != len(basis):
            raise ConfluenceError(f"normal words of {self.name} are not distinct")

    def relations(self) -> List[Relation]:
        return list(self._relations)

    def counit(self, generator: int) -> CycNum:
        return self.one

    def group_like_generators(self) -> List[int]:
        if self.hopf_structure == "group":
            return list(range(self.ngens))
        return [self._a]

    def coproduct(self, generator: int) -> CoproductExpansion:
        g = (generator,)
        if self.hopf_structure == "group" or generator == self._a:
            return [(self.one, g, g)]
        half = self.one / 2
        a = self._a
        other = self._sm if generator == self._sp else self._sp
        # s ⊗ e0 s + s' ⊗ e1 s with e0, e1 = (1 ± a)/2
        return [
            (half, g, g),
            (half, g, (a, generator)),
            (half, (other,), g),
            (-half, (other,), (a, generator)),
        ]

    def antipode(self, generator: int) -> LinComb:
        if self.hopf_structure == "group":
            # every generator of these groups is an involution
            return {(generator,): self.one}
        if generator == self._a:
            return {(self._a,): self.one}
        half = self.one / 2
        a = self._a
        other = self._sm if generator == self._sp else self._sp
        out: LinComb = {}
        for word, coeff in (((generator,), half), ((a, generator), half), ((other,), half), ((a, other), -half)):
            lc_add_into(out, self.normal_form(word), coeff)
        return out
