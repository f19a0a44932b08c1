"""
Labels of the irreducible (and convenience reducible) modules of each family.

Text forms used on the command line and in JSON:
    H2n2    T0+  T1-  pi_1_2         ZnWrS2  U0+  rho_0_1
    B4m     T+-+ (signs of s+, s-, a)  pi_2
    A4m     T+-+                       pi_1+  pi_1-
    D4m     T+-  (signs of s+, s-)     pi_2
    D2mxZ2  as A4m
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from utils.errors import LabelOutOfFamily

logger = logging.getLogger(__name__)

WREATH_FAMILIES = ("H2n2", "ZnWrS2")
ROTATION_FAMILIES = ("B4m", "D4m")  # pi_i indexed mod 2m
SIGNED_FAMILIES = ("A4m", "D2mxZ2")  # pi_i^eps indexed mod m


def _sign(value: int) -> str:
    return "+" if value > 0 else "-"


@dataclass(frozen=True, order=True)
class RepLabel:
    family: str
    kind: str
    params: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return 1 if self.kind in ("T", "U") else 2

    def text(self) -> str:
        if self.kind in ("T", "U") and self.family in WREATH_FAMILIES:
            k, s = self.params
            return f"{self.kind}{k}{_sign(s)}"
        if self.kind == "T":
            return "T" + "".join(_sign(s) for s in self.params)
        if self.kind in ("pi", "rho") and self.family in WREATH_FAMILIES:
            i, j = self.params
            return f"{self.kind}_{i}_{j}"
        if self.family in SIGNED_FAMILIES:
            i, eps = self.params
            return f"pi_{i}{_sign(eps)}"
        return f"pi_{self.params[0]}"

    def __str__(self) -> str:
        return self.text()


_T_WREATH = re.compile(r"^([TU])(\d+)([+-])$")
_PI_WREATH = re.compile(r"^(pi|rho)_(\d+)_(\d+)$")
_T_SIGNS = re.compile(r"^T([+-]{2,3})$")
_PI_SIGNED = re.compile(r"^pi_?(\d+)([+-])$")
_PI_PLAIN = re.compile(r"^pi_?(\d+)$")

ONE_DIM_KIND = {"H2n2": "T", "ZnWrS2": "U"}
TWO_DIM_KIND = {"H2n2": "pi", "ZnWrS2": "rho"}


def parse_label(family: str, text: str) -> RepLabel:
    """Parse a label text form for the given family; the result is not yet canonicalized."""
    text = text.strip()
    if family in WREATH_FAMILIES:
        match = _T_WREATH.match(text)
        if match and match.group(1) == ONE_DIM_KIND[family]:
            return RepLabel(family, match.group(1), (int(match.group(2)), 1 if match.group(3) == "+" else -1))
        match = _PI_WREATH.match(text)
        if match and match.group(1) == TWO_DIM_KIND[family]:
            return RepLabel(family, match.group(1), (int(match.group(2)), int(match.group(3))))
    else:
        match = _T_SIGNS.match(text)
        expected = 2 if family == "D4m" else 3
        if match and len(match.group(1)) == expected:
            return RepLabel(family, "T", tuple(1 if c == "+" else -1 for c in match.group(1)))
        if family in SIGNED_FAMILIES:
            match = _PI_SIGNED.match(text)
            if match:
                return RepLabel(family, "pi", (int(match.group(1)), 1 if match.group(2) == "+" else -1))
        else:
            match = _PI_PLAIN.match(text)
            if match:
                return RepLabel(family, "pi", (int(match.group(1)),))
    raise LabelOutOfFamily(f"{text!r} is not a {family} label")


def parse_labels(family: str, text: str) -> List[RepLabel]:
    return [parse_label(family, part) for part in text.split(",") if part.strip()]


def _family_modulus(family: str, params: Dict[str, int]) -> int:
    if family in WREATH_FAMILIES:
        return params["n"]
    if family in ROTATION_FAMILIES:
        return 2 * params["m"]
    return params["m"]


def one_dimensional_labels(family: str, params: Dict[str, int]) -> List[RepLabel]:
    if family in WREATH_FAMILIES:
        kind = ONE_DIM_KIND[family]
        return [RepLabel(family, kind, (k, s)) for k in range(params["n"]) for s in (1, -1)]
    signs = (1, -1)
    if family == "D4m":
        return [RepLabel(family, "T", (a, b)) for a in signs for b in signs]
    m = params["m"]
    out = []
    for alpha in signs:
        for beta in signs:
            for gamma in signs:
                rho = (alpha * beta) ** m
                if family == "B4m" and gamma != rho:
                    continue
                if family in SIGNED_FAMILIES and rho != 1:
                    continue
                out.append(RepLabel(family, "T", (alpha, beta, gamma)))
    return out


def two_dimensional_labels(family: str, params: Dict[str, int]) -> List[RepLabel]:
    if family in WREATH_FAMILIES:
        n = params["n"]
        kind = TWO_DIM_KIND[family]
        return [RepLabel(family, kind, (i, j)) for i in range(n) for j in range(i + 1, n)]
    m = params["m"]
    if family in ROTATION_FAMILIES:
        return [RepLabel(family, "pi", (i,)) for i in range(1, m)]
    top = (m - 1) // 2 if m % 2 else m // 2 - 1
    return [RepLabel(family, "pi", (i, eps)) for i in range(1, top + 1) for eps in (1, -1)]


def all_labels(family: str, params: Dict[str, int]) -> List[RepLabel]:
    return one_dimensional_labels(family, params) + two_dimensional_labels(family, params)


def trivial_label(family: str, params: Dict[str, int]) -> RepLabel:
    if family in WREATH_FAMILIES:
        return RepLabel(family, ONE_DIM_KIND[family], (0, 1))
    if family == "D4m":
        return RepLabel(family, "T", (1, 1))
    return RepLabel(family, "T", (1, 1, 1))


def reduce_label(label: RepLabel, params: Dict[str, int]) -> RepLabel:
    """Reduce subscripts into the family's canonical range; reducible labels stay as themselves."""
    family = label.family
    if label.kind in ("T", "U"):
        if family in WREATH_FAMILIES:
            k, s = label.params
            if s not in (1, -1):
                raise LabelOutOfFamily(str(label))
            return RepLabel(family, label.kind, (k % params["n"], s))
        if label not in one_dimensional_labels(family, params):
            raise LabelOutOfFamily(f"{label} does not satisfy the relations of {family}")
        return label
    mod = _family_modulus(family, params)
    if family in WREATH_FAMILIES:
        i, j = sorted(x % mod for x in label.params)
        return RepLabel(family, label.kind, (i, j))
    i = label.params[0] % mod
    if 2 * i > mod:
        i = mod - i
    if family in SIGNED_FAMILIES:
        eps = label.params[1]
        if eps not in (1, -1):
            raise LabelOutOfFamily(str(label))
        return RepLabel(family, "pi", (i, eps))
    return RepLabel(family, "pi", (i,))


def is_reducible(label: RepLabel, params: Dict[str, int]) -> bool:
    label = reduce_label(label, params)
    if label.dimension == 1:
        return False
    if label.family in WREATH_FAMILIES:
        return label.params[0] == label.params[1]
    i = label.params[0]
    return i == 0 or 2 * i == _family_modulus(label.family, params)


def split_reducible(label: RepLabel, params: Dict[str, int]) -> List[RepLabel]:
    """The two one-dimensional summands of a reducible two-dimensional label, in (u+v, u-v) order."""
    label = reduce_label(label, params)
    family = label.family
    if family in WREATH_FAMILIES:
        k = label.params[0]
        kind = ONE_DIM_KIND[family]
        return [RepLabel(family, kind, (k, 1)), RepLabel(family, kind, (k, -1))]
    i = label.params[0]
    s_minus = 1 if i == 0 else -1
    if family == "D4m":
        return [RepLabel(family, "T", (1, s_minus)), RepLabel(family, "T", (-1, -s_minus))]
    if family == "B4m":
        a = 1 if i == 0 else (-1) ** params["m"]
    else:
        a = label.params[1]
    return [RepLabel(family, "T", (1, s_minus, a)), RepLabel(family, "T", (-1, -s_minus, a))]


def canonical_components(label: RepLabel, params: Dict[str, int]) -> List[RepLabel]:
    """Irreducible summands of any label: itself when irreducible, else its splitting."""
    reduced = reduce_label(label, params)
    if is_reducible(reduced, params):
        return split_reducible(reduced, params)
    return [reduced]
