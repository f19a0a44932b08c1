"""
Explicit matrices for every label, and the irreducible catalog of each family.

All two-dimensional modules use the basis (u, v); diagonal entries are written
in the order (u, v).
"""
from __future__ import annotations

import logging
from typing import List, Tuple

from cyclotomic.field import CycNum, root_of_unity
from cyclotomic.linalg import CycMatrix
from hopf.presentation import HopfPresentation
from representations.labels import (
    RepLabel,
    WREATH_FAMILIES,
    all_labels,
    is_reducible,
    reduce_label,
    split_reducible,
)
from representations.representation import Representation, intertwiners
from utils.errors import CatalogIncomplete, LabelOutOfFamily, UnsupportedPresentation

logger = logging.getLogger(__name__)

KNOWN_FAMILIES = ("H2n2", "ZnWrS2", "A4m", "B4m", "D4m", "D2mxZ2")


def _require_family(H: HopfPresentation) -> None:
    if H.family not in KNOWN_FAMILIES:
        raise UnsupportedPresentation(H.family)


def skew_root(H: HopfPresentation) -> CycNum:
    """p = zeta_{2n}^{n+1}, the square root of q with p^{k^2} well defined for k mod n."""
    n = H.params["n"]
    return root_of_unity(H.conductor, (H.conductor // (2 * n)) * (n + 1))


def q_root(H: HopfPresentation) -> CycNum:
    n = H.params["n"]
    return root_of_unity(H.conductor, H.conductor // n)


def lambda_root(H: HopfPresentation) -> CycNum:
    """zeta_{2m} for B4m and D4m, zeta_m for A4m and D2mxZ2."""
    m = H.params["m"]
    order = 2 * m if H.family in ("B4m", "D4m") else m
    return root_of_unity(H.conductor, H.conductor // order)


def _scalar(value: CycNum | int, L: int) -> CycMatrix:
    return CycMatrix([[value]], L)


def _wreath_matrices(H: HopfPresentation, label: RepLabel) -> List[CycMatrix]:
    L = H.conductor
    q = q_root(H)
    if label.kind in ("T", "U"):
        k, s = label.params
        if H.family == "H2n2":
            z = skew_root(H) ** (k * k) * s
        else:
            z = CycNum.from_rational(L, s)
        return [_scalar(q ** k, L), _scalar(q ** k, L), _scalar(z, L)]
    i, j = label.params
    x = CycMatrix.diagonal([q ** i, q ** j], L)
    y = CycMatrix.diagonal([q ** j, q ** i], L)
    corner = q ** (i * j) if H.family == "H2n2" else CycNum.one(L)
    z = CycMatrix([[0, 1], [corner, 0]], L)
    return [x, y, z]


def _dihedral_matrices(H: HopfPresentation, label: RepLabel) -> List[CycMatrix]:
    L = H.conductor
    has_a = H.family != "D4m"
    if label.kind == "T":
        signs = label.params
        sp, sm = signs[0], signs[1]
        mats = [_scalar(sp, L), _scalar(sm, L)]
        if has_a:
            mats = [_scalar(signs[2], L)] + mats
        return mats
    i = label.params[0]
    lam = lambda_root(H)
    s_plus = CycMatrix([[0, 1], [1, 0]], L)
    s_minus = CycMatrix([[0, lam ** (-i)], [lam ** i, 0]], L)
    if not has_a:
        return [s_plus, s_minus]
    if H.family == "B4m":
        a_value = (-1) ** i
    else:
        a_value = label.params[1]
    a = CycMatrix.diagonal([a_value, a_value], L)
    return [a, s_plus, s_minus]


def representation_for(H: HopfPresentation, label: RepLabel) -> Representation:
    """Matrices of any label of H's family, reducible convenience labels included."""
    _require_family(H)
    if label.family != H.family:
        raise LabelOutOfFamily(f"{label} is a {label.family} label, not {H.family}")
    reduced = reduce_label(label, H.params)
    if H.family in WREATH_FAMILIES:
        mats = _wreath_matrices(H, reduced)
    else:
        mats = _dihedral_matrices(H, reduced)
    return Representation(H, mats, reduced, reducible=is_reducible(reduced, H.params))


def check_schur(H: HopfPresentation, catalog: List[Tuple[RepLabel, Representation]]) -> None:
    """Hom_H(a, b) is one-dimensional for a = b and zero otherwise."""
    for k, (a, rep_a) in enumerate(catalog):
        for b, rep_b in catalog[k:]:
            if rep_a.dimension != rep_b.dimension:
                continue
            found = len(intertwiners(rep_a, rep_b))
            if found != (1 if a == b else 0):
                raise CatalogIncomplete(f"{H.name}: dim Hom({a}, {b}) = {found}")


def irreducible_catalog(H: HopfPresentation) -> List[Tuple[RepLabel, Representation]]:
    """Complete list of irreducible modules; sum of squared dimensions equals dim H."""
    _require_family(H)
    cached = H._irreducible_catalog
    if cached is not None:
        return cached
    catalog = [(label, representation_for(H, label)) for label in all_labels(H.family, H.params)]
    total = sum(label.dimension ** 2 for label, _ in catalog)
    if total != H.dimension:
        raise CatalogIncomplete(f"{H.name}: sum of squares {total} != {H.dimension}")
    check_schur(H, catalog)
    logger.info(f"Catalog of {H.name}: {len(catalog)} irreducibles")
    H._irreducible_catalog = catalog
    return catalog


def splitting_vectors(H: HopfPresentation, label: RepLabel) -> List[Tuple[RepLabel, List[CycNum]]]:
    """
    The vectors spanning the one-dimensional summands of a reducible label,
    e.g. u + p^{i^2} v and u - p^{i^2} v for pi_{i,i} of H_{2n^2}, else u + v and u - v.
    """
    reduced = reduce_label(label, H.params)
    if not is_reducible(reduced, H.params):
        raise LabelOutOfFamily(f"{reduced} is irreducible")
    L = H.conductor
    one = CycNum.one(L)
    if H.family == "H2n2":
        i = reduced.params[0]
        c = skew_root(H) ** (i * i)
    else:
        c = one
    plus, minus = split_reducible(reduced, H.params)
    return [(plus, [one, c]), (minus, [one, -c])]
