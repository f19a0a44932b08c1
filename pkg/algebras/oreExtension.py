"""Ore extensions A[t; sigma] of a two-generator module algebra, with t spanning a one-dimensional module."""
from __future__ import annotations

import logging
from typing import Optional, Tuple

from cyclotomic.field import CycNum
from cyclotomic.linalg import CycMatrix
from cyclotomic.sparse import SparseEchelon, SparseVec
from hopf.presentation import HopfPresentation
from hopf.rewriting import LinComb, Rule, lc_add_into, lc_equal
from algebras.gradedAlgebra import GradedAlgebraSpec, OreLayer
from representations.catalog import representation_for
from representations.labels import RepLabel
from representations.representation import Representation
from utils.errors import ExtensionConditionFails, ParameterOutOfRange, UnstableRelations

logger = logging.getLogger(__name__)


def _character(rep: Representation, word) -> CycNum:
    return rep.matrix_of_word(word)[0, 0]


def convolution_condition(H: HopfPresentation, t_label: RepLabel) -> Tuple[bool, Optional[str]]:
    """
    Check sum chi(h1) h2 == sum h1 chi(h2) on every generator, chi the character of t.

    Returns (holds, name of the first generator where it fails).
    """
    t_rep = representation_for(H, t_label)
    if t_rep.dimension != 1:
        raise ParameterOutOfRange(f"t must span a one-dimensional module, {t_label} has dimension {t_rep.dimension}")
    for g in range(H.ngens):
        left: LinComb = {}
        right: LinComb = {}
        for coeff, w1, w2 in H.coproduct(g):
            lc_add_into(left, H.normal_form(w2), coeff * _character(t_rep, w1))
            lc_add_into(right, H.normal_form(w1), coeff * _character(t_rep, w2))
        if not lc_equal(left, right):
            name = H.generator_names[g]
            logger.debug(f"convolution condition for {t_label} fails at {name}")
            return False, name
    return True, None


def is_trivial_module(rep: Representation) -> bool:
    H = rep.hopf
    return all(rep.matrices[g][0, 0] == H.counit(g) for g in range(H.ngens))


def sigma_is_module_map(base: GradedAlgebraSpec, sigma: CycMatrix) -> Tuple[bool, Optional[str]]:
    for g, M in enumerate(base.module.matrices):
        if M @ sigma != sigma @ M:
            return False, base.hopf.generator_names[g]
    return True, None


def sigma_preserves_relations(base: GradedAlgebraSpec, sigma: CycMatrix) -> bool:
    """sigma ⊗ sigma maps R into R, so sigma extends to an algebra endomorphism of the base."""
    square = sigma.kron(sigma)
    span = SparseEchelon(base.dim_v ** 2)
    span.extend(base.relations)
    return all(span.contains(square.apply(rel)) for rel in base.relations)


def ore_extend(
    base: GradedAlgebraSpec,
    sigma: CycMatrix,
    t_label: RepLabel,
    name: Optional[str] = None,
    strict: bool = True,
) -> GradedAlgebraSpec:
    """
    Adjoin t with t x = sigma(x) t; sigma is given by columns, sigma(u) being the first.

    Parameters:
    -----------
    base : GradedAlgebraSpec
        two-generator algebra (letters u, v)
    sigma : CycMatrix
        2x2 matrix of an automorphism of the base in degree one
    t_label : RepLabel
        one-dimensional module spanned by t
    strict : bool
        also require t trivial with sigma an H-map, or the convolution condition on t
    """
    H = base.hopf
    L = base.conductor
    if base.ore is not None or base.dim_v != 2:
        raise ParameterOutOfRange("ore_extend takes a two-generator base algebra")
    if sigma.rows != 2 or sigma.cols != 2:
        raise ParameterOutOfRange(f"sigma must be 2x2, got {sigma.rows}x{sigma.cols}")
    sigma = sigma.lift(L) if sigma.conductor != L else sigma
    t_rep = representation_for(H, t_label)
    if t_rep.dimension != 1:
        raise ParameterOutOfRange(f"{t_label} is not one-dimensional")

    if strict:
        if is_trivial_module(t_rep):
            ok, failing = sigma_is_module_map(base, sigma)
            if not ok:
                logger.error(f"Error extending {base.name}: sigma is not an H-map at {failing}")
                raise ExtensionConditionFails(failing, "sigma does not commute with the action")
        else:
            ok, failing = convolution_condition(H, t_label)
            if not ok:
                logger.error(f"Error extending {base.name}: {t_label} fails the convolution condition at {failing}")
                raise ExtensionConditionFails(failing, f"{t_label} does not commute with the coproduct")
    if not sigma_preserves_relations(base, sigma):
        raise ExtensionConditionFails("sigma", f"sigma does not preserve the relations of {base.name}")

    # indices over V' ⊗ V' with V' = span(u, v, t)
    relations = []
    for rel in base.relations:
        relations.append({(k // 2) * 3 + (k % 2): c for k, c in rel.items()})
    rules = []
    for rule in base.system.rules:
        rules.append(rule)
    one = CycNum.one(L)
    for x in range(2):
        vec: SparseVec = {2 * 3 + x: one}
        rhs = {}
        for r in range(2):
            coeff = sigma[r, x]
            if coeff:
                vec[r * 3 + 2] = -coeff
                rhs[(r, 2)] = coeff
        relations.append(vec)
        rules.append(Rule.make((2, x), rhs, f"t{base.letters[x]}"))

    module = base.module.direct_sum(t_rep)
    params = dict(base.params)
    params["t"] = str(t_label)
    layer = OreLayer(base=base, sigma=sigma, t_label=t_label, t_rep=t_rep)
    try:
        extended = GradedAlgebraSpec(
            name or f"{base.name}[t]",
            H,
            module,
            list(base.letters) + ["t"],
            relations,
            rules,
            "ore-over-base",
            params,
            ore=layer,
        )
    except UnstableRelations as e:
        logger.error(f"Error extending {base.name} by {t_label}: {e}")
        raise ExtensionConditionFails(e.generator, str(e)) from e
    logger.info(f"Built {extended.name} over {H.name} with t = {t_label}")
    return extended
