"""
Closed-form fusion rules for each family, used as the oracle for computed tables.

Every result is returned with canonical labels; reducible two-dimensional
summands (pi_{i,i}, pi_0, pi_m, pi_{m/2}) are replaced by their splittings.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Union

from hopf.presentation import HopfPresentation
from representations.labels import (
    RepLabel,
    ROTATION_FAMILIES,
    SIGNED_FAMILIES,
    WREATH_FAMILIES,
    canonical_components,
    reduce_label,
)
from utils.errors import LabelOutOfFamily

logger = logging.getLogger(__name__)


def _collect(labels: List[RepLabel], params: Dict[str, int]) -> Counter:
    out: Counter = Counter()
    for label in labels:
        out.update(canonical_components(label, params))
    return out


def _wreath_rule(a: RepLabel, b: RepLabel) -> List[RepLabel]:
    family = a.family
    one_kind, two_kind = ("T", "pi") if family == "H2n2" else ("U", "rho")
    if a.kind == one_kind and b.kind == one_kind:
        (k, s), (j, t) = a.params, b.params
        return [RepLabel(family, one_kind, (k + j, s * t))]
    if a.kind == one_kind:
        k = a.params[0]
        i, j = b.params
        return [RepLabel(family, two_kind, (i + k, j + k))]
    if b.kind == one_kind:
        k = b.params[0]
        i, j = a.params
        return [RepLabel(family, two_kind, (i + k, j + k))]
    (i, j), (k, l) = a.params, b.params
    return [RepLabel(family, two_kind, (i + l, j + k)), RepLabel(family, two_kind, (i + k, j + l))]


def _rotation_rule(a: RepLabel, b: RepLabel, m: int) -> List[RepLabel]:
    """B4m and D4m: one-dimensional labels form a Klein group; T(s,-s) reflects pi_i to pi_{m-i}."""
    family = a.family
    if a.kind == "T" and b.kind == "T":
        return [RepLabel(family, "T", tuple(x * y for x, y in zip(a.params, b.params)))]
    if a.kind == "T" or b.kind == "T":
        t, p = (a, b) if a.kind == "T" else (b, a)
        i = p.params[0]
        if t.params[0] == t.params[1]:
            return [p]
        return [RepLabel(family, "pi", (m - i,))]
    i, j = a.params[0], b.params[0]
    return [RepLabel(family, "pi", (abs(i - j),)), RepLabel(family, "pi", (i + j,))]


def _signed_rule(a: RepLabel, b: RepLabel, m: int, twisted_ones: bool) -> List[RepLabel]:
    """
    A4m and D2mxZ2. For m odd only T(s,s,c) exist. For m even, T(s,-s,c) sends
    pi_j to pi_{m/2-j}; with twisted_ones the product of T(a1,-a1,c1) with any T
    picks up the sign c2 on its first two entries.
    """
    family = a.family
    if a.kind == "T" and b.kind == "T":
        (a1, b1, c1), (a2, b2, c2) = a.params, b.params
        if twisted_ones and a1 != b1:
            return [RepLabel(family, "T", (a1 * a2 * c2, b1 * b2 * c2, c1 * c2))]
        return [RepLabel(family, "T", (a1 * a2, b1 * b2, c1 * c2))]
    if a.kind == "T" or b.kind == "T":
        t, p = (a, b) if a.kind == "T" else (b, a)
        alpha, beta, gamma = t.params
        j, delta = p.params
        if alpha == beta:
            return [RepLabel(family, "pi", (j, gamma * delta))]
        return [RepLabel(family, "pi", (m // 2 - j, gamma * delta))]
    (j, eps), (k, delta) = a.params, b.params
    return [RepLabel(family, "pi", (abs(j - k), eps * delta)), RepLabel(family, "pi", (j + k, eps * delta))]


def expected_fusion(H: Union[HopfPresentation, str], a: RepLabel, b: RepLabel, params: Dict[str, int] | None = None) -> Counter:
    """
    Closed-form decomposition of a ⊗ b.

    H may be a presentation, or a family tag together with params.
    """
    if isinstance(H, HopfPresentation):
        family, params = H.family, H.params
    else:
        family = H
    for label in (a, b):
        if label.family != family:
            raise LabelOutOfFamily(f"{label} is not a {family} label")
    a = reduce_label(a, params)
    b = reduce_label(b, params)
    if len(canonical_components(a, params)) > 1 or len(canonical_components(b, params)) > 1:
        # reducible inputs: distribute over their summands
        out: Counter = Counter()
        for x in canonical_components(a, params):
            for y in canonical_components(b, params):
                out.update(expected_fusion(family, x, y, params))
        return out
    if family in WREATH_FAMILIES:
        raw = _wreath_rule(a, b)
    elif family in ROTATION_FAMILIES:
        raw = _rotation_rule(a, b, params["m"])
    elif family in SIGNED_FAMILIES:
        m = params["m"]
        raw = _signed_rule(a, b, m, twisted_ones=(family == "A4m" and m % 2 == 0))
    else:
        raise LabelOutOfFamily(f"no closed-form rules for {family}")
    return _collect(raw, params)
