"""
Inner-faithfulness: fusion closure of a module, the closed-form criteria, and the
group-like witness of a Hopf ideal in the annihilator.
"""
from __future__ import annotations

import logging
from math import gcd
from typing import Dict, Iterable, List, Optional, Set

from hopf.presentation import HopfPresentation
from hopf.rewriting import Word
from representations.catalog import representation_for
from representations.labels import (
    RepLabel,
    canonical_components,
    one_dimensional_labels,
    reduce_label,
    two_dimensional_labels,
)
from representations.representation import Representation, direct_sum
from fusion.fusionTable import FusionTable
from utils.errors import CriterionNotApplicable, HopfEngineError

logger = logging.getLogger(__name__)


def generation_closure(V: Iterable[RepLabel], table: FusionTable) -> Set[RepLabel]:
    """Every label occurring in some tensor power V^{⊗k}, k >= 1."""
    summands = list(V)
    closure: Set[RepLabel] = set(summands)
    cap = len(table) ** 2
    for step in range(cap + 1):
        grown = set(closure)
        for x in closure:
            for v in summands:
                grown.update(table.product(x, v))
        if grown == closure:
            logger.debug(f"closure stabilized after {step} steps with {len(closure)} labels")
            return closure
        closure = grown
    raise HopfEngineError(f"closure did not stabilize within {cap} tensor steps")


def closure_is_complete(V: Iterable[RepLabel], table: FusionTable) -> bool:
    return generation_closure(V, table) == set(table.labels)


def irreducible_parts(H: HopfPresentation, V: Iterable[RepLabel]) -> List[RepLabel]:
    parts: List[RepLabel] = []
    for label in V:
        parts.extend(canonical_components(label, H.params))
    return parts


def inner_faithful_criterion(H: HopfPresentation, V: Iterable[RepLabel]) -> bool:
    """
    Closed-form verdict for the module shapes the classification covers:
    a single two-dimensional irreducible (H2n2, B4m, A4m odd, A4m even) or,
    for A4m with m even, pi_i^eps ⊕ T(alpha, beta, gamma).
    """
    labels = [reduce_label(label, H.params) for label in V]
    family = H.family
    if family not in ("H2n2", "B4m", "A4m"):
        raise CriterionNotApplicable(f"no criterion for {family}")
    twos = [label for label in labels if label.dimension == 2]
    ones = [label for label in labels if label.dimension == 1]
    if len(twos) != 1 or any(len(canonical_components(t, H.params)) > 1 for t in twos):
        raise CriterionNotApplicable(f"expected one irreducible two-dimensional summand, got {[str(x) for x in labels]}")
    pi = twos[0]
    if family == "H2n2":
        if ones:
            raise CriterionNotApplicable("H2n2 criterion covers a single pi_{i,j}")
        i, j = pi.params
        return gcd(i * i - j * j, H.params["n"]) == 1
    m = H.params["m"]
    if family == "B4m":
        if ones:
            raise CriterionNotApplicable("B4m criterion covers a single pi_i")
        return gcd(pi.params[0], 2 * m) == 1
    i, eps = pi.params
    if m % 2:
        if ones:
            raise CriterionNotApplicable("A4m (m odd) criterion covers a single pi_i^eps")
        return eps == -1 and gcd(i, m) == 1
    if not ones:
        return False
    if len(ones) != 1:
        raise CriterionNotApplicable("A4m (m even) criterion covers pi_i^eps ⊕ one T")
    alpha, beta, gamma = ones[0].params
    if gcd(i, m) != 1:
        return False
    if alpha == beta:
        return gamma == -1
    if eps == 1:
        return gamma == -1
    if gamma == -1:
        return m % 4 == 0
    return m % 4 == 2


def candidate_modules(H: HopfPresentation) -> List[List[RepLabel]]:
    """The modules a criterion speaks about: single pi's, and pi ⊕ T for A4m with m even."""
    pis = two_dimensional_labels(H.family, H.params)
    out = [[p] for p in pis]
    if H.family == "A4m" and H.params["m"] % 2 == 0:
        for p in pis:
            for t in one_dimensional_labels(H.family, H.params):
                out.append([p, t])
    return out


def module_of(H: HopfPresentation, V: Iterable[RepLabel]) -> Representation:
    return direct_sum([representation_for(H, label) for label in V])


def hopf_ideal_witness(rep: Representation) -> Optional[Word]:
    """
    A group-like g != 1 acting as the identity: 1 - g spans a nonzero Hopf ideal
    inside the annihilator, so the module is not inner-faithful.
    """
    for g in rep.hopf.group_like_elements():
        if g and rep.acts_as_identity(g):
            return g
    return None


def criterion_details(H: HopfPresentation, V: List[RepLabel]) -> Dict[str, object]:
    """The numbers a criterion is decided on, for display."""
    labels = [reduce_label(label, H.params) for label in V]
    pi = next((x for x in labels if x.dimension == 2), None)
    if pi is None:
        return {}
    if H.family == "H2n2":
        i, j = pi.params
        value = i * i - j * j
        return {"i^2-j^2": value, "gcd": gcd(value, H.params["n"])}
    if H.family == "B4m":
        return {"i": pi.params[0], "gcd": gcd(pi.params[0], 2 * H.params["m"])}
    if H.family == "A4m":
        return {"i": pi.params[0], "epsilon": pi.params[1], "gcd": gcd(pi.params[0], H.params["m"])}
    return {}
