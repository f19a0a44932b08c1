"""
Words, linear combinations and string rewriting over Q(zeta_L).

A Word is a tuple of generator indices; a LinComb is a dict {Word: CycNum} with
no zero coefficients. Rules rewrite a word to a LinComb and are applied at the
leftmost matching position until no rule applies.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cyclotomic.field import CycNum, Rational, as_cyc
from utils.errors import ConfluenceError, ParameterOutOfRange

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
LinComb = Dict[Word, CycNum]


def lc_add_into(target: LinComb, source: LinComb, scale: Optional[CycNum] = None) -> None:
    for word, coeff in source.items():
        value = coeff if scale is None else coeff * scale
        if word in target:
            value = target[word] + value
        if value:
            target[word] = value
        else:
            target.pop(word, None)


def lc_scale(lc: LinComb, scale: CycNum) -> LinComb:
    if not scale:
        return {}
    return {w: c * scale for w, c in lc.items()}


def lc_equal(a: LinComb, b: LinComb) -> bool:
    if set(a) != set(b):
        return False
    return all(a[w] == b[w] for w in a)


def lc_from_pairs(pairs: Iterable[Tuple[Rational | CycNum, Word]], conductor: int) -> LinComb:
    out: LinComb = {}
    for coeff, word in pairs:
        lc_add_into(out, {tuple(word): as_cyc(coeff, conductor)})
    return out


def word_string(word: Word, names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts: List[str] = []
    run_letter, run_length = word[0], 0
    for letter in word + (-1,):
        if letter == run_letter:
            run_length += 1
            continue
        name = names[run_letter]
        parts.append(name if run_length == 1 else f"{name}^{run_length}")
        run_letter, run_length = letter, 1
    return "".join(parts)


def lc_string(lc: LinComb, names: Sequence[str]) -> str:
    if not lc:
        return "0"
    return " + ".join(f"({c!r})*{word_string(w, names)}" for w, c in sorted(lc.items()))


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Tuple[Tuple[Word, CycNum], ...]
    name: str

    @classmethod
    def make(cls, lhs: Word, rhs: LinComb, name: str) -> Rule:
        if not lhs:
            raise ParameterOutOfRange(f"rule {name} has an empty left side")
        return cls(tuple(lhs), tuple(sorted(rhs.items(), key=lambda item: item[0])), name)

    def rhs_lincomb(self) -> LinComb:
        return dict(self.rhs)


class RewritingSystem:
    """
    Leftmost-first rewriting with a per-word normal-form cache.

    Parameters:
    -----------
    rules : list of Rule
        left sides must be pairwise distinct
    ngens : int
        number of generator letters
    conductor : int
        conductor of every coefficient
    check : bool
        run the critical-pair check on construction
    """

    def __init__(self, rules: Sequence[Rule], ngens: int, conductor: int, check: bool = True):
        self.rules = list(rules)
        self.ngens = ngens
        self.conductor = conductor
        self._by_lhs: Dict[Word, Rule] = {}
        for rule in self.rules:
            if rule.lhs in self._by_lhs:
                raise ParameterOutOfRange(f"two rules share the left side {rule.lhs}")
            self._by_lhs[rule.lhs] = rule
        self._lengths = sorted({len(r.lhs) for r in self.rules})
        self._cache: Dict[Word, LinComb] = {}
        self._one = CycNum.one(conductor)
        if check:
            self.check_confluence()

    def find_redex(self, word: Word) -> Optional[Tuple[int, Rule]]:
        for i in range(len(word)):
            for length in self._lengths:
                if i + length > len(word):
                    break
                rule = self._by_lhs.get(word[i:i + length])
                if rule is not None:
                    return i, rule
        return None

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def normal_form(self, word: Word) -> LinComb:
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        result: LinComb = {}
        stack: List[Tuple[Word, CycNum]] = [(word, self._one)]
        while stack:
            current, coeff = stack.pop()
            known = self._cache.get(current)
            if known is not None:
                lc_add_into(result, known, coeff)
                continue
            redex = self.find_redex(current)
            if redex is None:
                lc_add_into(result, {current: coeff})
                continue
            i, rule = redex
            prefix, suffix = current[:i], current[i + len(rule.lhs):]
            for rhs_word, rhs_coeff in rule.rhs:
                stack.append((prefix + rhs_word + suffix, coeff * rhs_coeff))
        self._cache[word] = result
        return result

    def normalize(self, lc: LinComb) -> LinComb:
        out: LinComb = {}
        for word, coeff in lc.items():
            lc_add_into(out, self.normal_form(word), coeff)
        return out

    def _apply_at(self, word: Word, position: int, rule: Rule) -> LinComb:
        prefix, suffix = word[:position], word[position + len(rule.lhs):]
        out: LinComb = {}
        for rhs_word, rhs_coeff in rule.rhs:
            lc_add_into(out, self.normal_form(prefix + rhs_word + suffix), rhs_coeff)
        return out

    def critical_pairs(self) -> List[Tuple[Word, int, Rule, int, Rule]]:
        """Overlap words with the two competing rule applications."""
        pairs = []
        for r1 in self.rules:
            for r2 in self.rules:
                l1, l2 = r1.lhs, r2.lhs
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        pairs.append((l1 + l2[k:], 0, r1, len(l1) - k, r2))
                if r1 is not r2 and len(l2) < len(l1):
                    for start in range(len(l1) - len(l2) + 1):
                        if l1[start:start + len(l2)] == l2:
                            pairs.append((l1, 0, r1, start, r2))
        return pairs

    def check_confluence(self) -> int:
        """Join every critical pair; raises ConfluenceError on the first failure."""
        pairs = self.critical_pairs()
        for word, p1, r1, p2, r2 in pairs:
            left = self._apply_at(word, p1, r1)
            right = self._apply_at(word, p2, r2)
            if not lc_equal(left, right):
                logger.error(f"Critical pair {word} of rules {r1.name}/{r2.name} does not join")
                raise ConfluenceError(
                    f"critical pair {word} of rules {r1.name} and {r2.name} does not join: {left} != {right}"
                )
        logger.debug(f"{len(pairs)} critical pairs joined")
        return len(pairs)

    def irreducible_words(self, degree: int, weights: Optional[Sequence[int]] = None) -> List[Word]:
        """Normal words of the given (weighted) degree, in graded lexicographic order."""
        weights = list(weights) if weights is not None else [1] * self.ngens
        longest = self._lengths[-1] if self._lengths else 0
        out: List[Word] = []

        def extend(prefix: Word, remaining: int) -> None:
            if remaining == 0:
                out.append(prefix)
                return
            for letter in range(self.ngens):
                w = weights[letter]
                if w > remaining:
                    continue
                word = prefix + (letter,)
                tail_start = max(0, len(word) - longest)
                if any(word[s:] in self._by_lhs for s in range(tail_start, len(word))):
                    continue
                extend(word, remaining - w)

        extend((), degree)
        return out
