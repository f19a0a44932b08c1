"""
Published generating sets of the invariant rings, as elements of each module algebra,
and the check that they are fixed and generate the whole fixed filtration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from cyclotomic.sparse import SparseVec
from algebras.gradedAlgebra import GradedAlgebraSpec
from invariants.fixedRing import InvariantFiltration, fixed_subspace, is_fixed
from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

Terms = List[Tuple[int, str]]


def _power(word: str, k: int) -> str:
    return word * k


def _times(prefix: str, terms: Terms, suffix: str = "") -> Terms:
    return [(c, prefix + w + suffix) for c, w in terms]


def _wreath_claims(A: GradedAlgebraSpec) -> Optional[List[Terms]]:
    n = A.hopf.params["n"]
    un, vn = _power("u", n), _power("v", n)
    if A.name in ("Aminus", "Aplus"):
        i, j = A.params["i"], A.params["j"]
        if n % 2 == 0:
            sign = (-1) ** (i * j)
            return [[(1, un), (sign, vn)], [(1, un + vn)]]
        if A.name == "Aminus":
            return [[(1, un), (1, vn)], [(1, un + vn)]]
        return [[(1, un), (1, vn)], [(1, un + vn + un), (-1, un + vn + vn)]]
    if A.name == "KP-b":
        return [[(1, "uu")], [(1, "uvuv"), (-1, "vuvu")]]
    if A.name in ("KP-c", "KP-d"):
        return [[(1, "uu"), (1, "vv")], [(1, "uuvv")]]
    # KP-a is computed exploratorily; nothing is claimed
    return None


def _rotation_claims(A: GradedAlgebraSpec) -> List[Terms]:
    m = A.hopf.params["m"]
    uv, vu = _power("uv", m), _power("vu", m)
    if A.hopf.family == "B4m":
        if A.name == "Aminus":
            return [[(1, "uu")], [(1, uv), (-1, vu)]]
        return [[(1, "uuuu")], [(1, uv), (-1, vu)], [(1, "uu" + uv), (1, "uu" + vu)]]
    if A.name == "Aminus":
        return [[(1, "uu")], [(1, uv), (1, vu)]]
    return [[(1, "uuuu")], [(1, vu), (1, uv)], [(1, "uu" + vu), (-1, "uu" + uv)]]


def _ore_claims(A: GradedAlgebraSpec) -> List[Terms]:
    m = A.hopf.params["m"]
    k = A.params["case"]
    minus = A.name.endswith("minus")
    um, vm = _power("u", m), _power("v", m)
    half_uv, half_vu = _power("uv", m // 2), _power("vu", m // 2)
    tt = "tt"
    if minus:
        if k == 1:
            return [[(1, "uv")], [(1, um), (1, vm)], [(1, tt)]]
        if k in (2, 5):
            return [[(1, "uu")], [(1, half_vu), (-1, half_uv)], [(1, tt)]]
        if k == 3:
            return [[(1, "uv")], [(1, um), (1, vm)], [(1, um + tt), (-1, vm + tt)], [(1, tt + tt)]]
        return [[(1, "uu")], [(1, half_vu), (-1, half_uv)], [(1, half_vu + tt), (1, half_uv + tt)], [(1, tt + tt)]]
    if k == 1:
        return [[(1, "uuvv")], [(1, um), (1, vm)], [(1, tt)], [(1, "uv" + um), (-1, "uv" + vm)]]
    if k in (2, 5):
        return [[(1, "uuuu")], [(1, half_uv), (-1, half_vu)], [(1, "uu" + half_uv), (1, "uu" + half_vu)], [(1, tt)]]
    if k == 3:
        return [
            [(1, "uuvv")], [(1, um), (1, vm)], [(1, "uv" + um), (-1, "uv" + vm)],
            [(1, "uv" + tt)], [(1, um + tt), (-1, vm + tt)], [(1, tt + tt)],
        ]
    return [
        [(1, "uuuu")], [(1, half_uv), (-1, half_vu)], [(1, "uu" + half_uv), (1, "uu" + half_vu)],
        [(1, "uu" + tt)], [(1, half_uv + tt), (1, half_vu + tt)], [(1, tt + tt)],
    ]


def claimed_generators(A: GradedAlgebraSpec) -> Optional[List[Tuple[int, SparseVec]]]:
    """Published generators of A^H as (degree, coordinates), or None when nothing is claimed."""
    family = A.hopf.family
    if family == "H2n2":
        claims = _wreath_claims(A)
    elif family == "B4m" or (family == "A4m" and A.ore is None):
        claims = _rotation_claims(A)
    elif family == "A4m":
        claims = _ore_claims(A)
    else:
        raise ParameterOutOfRange(f"no published generators for {A.name} over {A.hopf.name}")
    if claims is None:
        return None
    return [A.element(terms) for terms in claims]


@dataclass
class ClaimCheck:
    fixed: bool
    generates: bool
    degrees: List[int] = field(default_factory=list)
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.fixed and self.generates


def verify_claimed_generators(
    A: GradedAlgebraSpec,
    generators: Optional[Sequence[Tuple[int, SparseVec]]],
    D: int,
) -> ClaimCheck:
    """
    Every claimed generator is fixed, and the subalgebra it generates has the
    same dimension as A^H in each degree d <= D (mismatches are (d, generated, fixed)).
    """
    if generators is None:
        generators = claimed_generators(A)
        if generators is None:
            raise ParameterOutOfRange(f"{A.name} has no published generators")
    fixed = all(is_fixed(A, vec, d) for d, vec in generators)
    filtration = InvariantFiltration(A)
    filtration.generators = [(d, vec) for d, vec in sorted(generators, key=lambda item: item[0])]
    mismatches = []
    for d in range(1, D + 1):
        span = filtration.products(d)
        filtration.spans[d] = span
        dim_fixed = len(fixed_subspace(A, d))
        if span.rank != dim_fixed:
            mismatches.append((d, span.rank, dim_fixed))
    if mismatches:
        d, got, want = mismatches[0]
        logger.warning(f"{A.name}: claimed generators span {got} of {want} invariants in degree {d}")
    return ClaimCheck(fixed=fixed, generates=not mismatches, degrees=[d for d, _ in generators], mismatches=mismatches)
