"""
The named module algebras of each family, and closed-form values of their actions.

Names: Aminus/Aplus for every family, KP-a..KP-d for H_8 (n = 2), and
A1minus..A5minus, A1plus..A5plus for A_{4m} with m even.
"""
from __future__ import annotations

import logging
from math import comb, gcd
from typing import Dict, List, Optional, Set, Tuple

from cyclotomic.field import CycNum, root_of_unity
from cyclotomic.linalg import CycMatrix
from hopf.presentation import HopfPresentation
from hopf.rewriting import LinComb, Word
from algebras.gradedAlgebra import GradedAlgebraSpec, skew_two_generator, u_square_c_v_square
from algebras.oreExtension import ore_extend
from fusion.closure import closure_is_complete, inner_faithful_criterion, irreducible_parts
from fusion.fusionTable import build_fusion_table
from representations.catalog import lambda_root, q_root, representation_for, skew_root
from representations.labels import RepLabel, is_reducible, reduce_label
from utils.errors import (
    CriterionNotApplicable,
    InnerFaithfulnessPrecondition,
    ParameterOutOfRange,
    UnsupportedPresentation,
)

logger = logging.getLogger(__name__)

U, V, T = 0, 1, 2
ORE_CASES = (1, 2, 3, 4, 5)

# (hopf name, degree-one module) pairs already reported as reducible
_REPORTED_REDUCIBLE: Set[Tuple[str, str]] = set()


def algebra_names(H: HopfPresentation) -> List[str]:
    if H.family == "H2n2":
        names = ["Aminus", "Aplus"]
        if H.params["n"] == 2:
            names += ["KP-a", "KP-b", "KP-c", "KP-d"]
        return names
    if H.family == "B4m" or (H.family == "A4m" and H.params["m"] % 2):
        return ["Aminus", "Aplus"]
    if H.family == "A4m":
        return [f"A{k}{sign}" for sign in ("minus", "plus") for k in ORE_CASES]
    raise UnsupportedPresentation(f"no module algebras are attached to {H.family}")


def module_labels(A: GradedAlgebraSpec) -> List[RepLabel]:
    """Labels of the degree-one module: the base two-dimensional label, then t if present."""
    if A.ore is not None:
        return [A.ore.base.module.label, A.ore.t_label]
    return [A.module.label]


def inner_faithful_flag(H: HopfPresentation, labels: List[RepLabel]) -> bool:
    """Closed-form criterion where it applies, otherwise completeness of the fusion closure."""
    try:
        return inner_faithful_criterion(H, labels)
    except CriterionNotApplicable as e:
        logger.debug(f"{H.name}: {e}; falling back to fusion closure")
        return closure_is_complete(irreducible_parts(H, labels), build_fusion_table(H))


def _finish(A: GradedAlgebraSpec, require_inner_faithful: bool) -> GradedAlgebraSpec:
    A.inner_faithful = inner_faithful_flag(A.hopf, module_labels(A))
    if require_inner_faithful and not A.inner_faithful:
        raise InnerFaithfulnessPrecondition(f"{A.name} with {A.params}")
    return A


def _wreath_algebra(H: HopfPresentation, name: str, i: int, j: int) -> GradedAlgebraSpec:
    n = H.params["n"]
    i, j = sorted((i % n, j % n))
    label = reduce_label(RepLabel("H2n2", "pi", (i, j)), H.params)
    module = representation_for(H, label)
    params: Dict[str, object] = {"i": i, "j": j}
    if name in ("Aminus", "Aplus"):
        c = skew_root(H) ** (i * i - j * j)
        return skew_two_generator(name, H, module, c if name == "Aminus" else -c, params)
    if n != 2:
        raise ParameterOutOfRange(f"{name} is only defined for H_8 (n = 2)")
    imag = root_of_unity(H.conductor, H.conductor // 4)
    if name == "KP-a":
        return u_square_c_v_square(name, H, module, -H.one, params)
    if name == "KP-b":
        return u_square_c_v_square(name, H, module, H.one, params)
    if name == "KP-c":
        return skew_two_generator(name, H, module, -imag, params)
    if name == "KP-d":
        return skew_two_generator(name, H, module, imag, params)
    raise ParameterOutOfRange(f"unknown H2n2 algebra {name!r}")


def _rotation_algebra(H: HopfPresentation, name: str, i: int, eps: int) -> GradedAlgebraSpec:
    """B4m (module pi_i) and A4m with m odd (module pi_i^{-1}): u^2 -/+ lambda^i v^2."""
    if H.family == "B4m":
        label = reduce_label(RepLabel("B4m", "pi", (i,)), H.params)
        params: Dict[str, object] = {"i": label.params[0]}
    else:
        label = reduce_label(RepLabel("A4m", "pi", (i, -1)), H.params)
        params = {"i": label.params[0], "epsilon": -1}
    lam = lambda_root(H) ** label.params[0]
    module = representation_for(H, label)
    if name == "Aminus":
        return u_square_c_v_square(name, H, module, lam, params)
    if name == "Aplus":
        return u_square_c_v_square(name, H, module, -lam, params)
    raise ParameterOutOfRange(f"unknown {H.family} algebra {name!r}")


def _ore_case(H: HopfPresentation, name: str, i: int, eps: int) -> GradedAlgebraSpec:
    """A_{k,eps}^{+-} for A4m, m even: a two-generator base extended by t."""
    if eps not in (1, -1):
        raise ParameterOutOfRange(f"epsilon must be +1 or -1, got {eps}")
    try:
        k = int(name[1])
        sign = name[2:]
    except (IndexError, ValueError) as e:
        raise ParameterOutOfRange(f"unknown A4m algebra {name!r}") from e
    if k not in ORE_CASES or sign not in ("minus", "plus"):
        raise ParameterOutOfRange(f"unknown A4m algebra {name!r}")
    L = H.conductor
    m = H.params["m"]
    i = i % m
    lam = lambda_root(H) ** i
    skew_base = k in (1, 3)
    pi_label = RepLabel("A4m", "pi", (i, 1 if skew_base else -1))
    module = representation_for(H, pi_label)
    params: Dict[str, object] = {"i": i, "epsilon": eps, "case": k}
    base_name = f"{name}-base"
    if skew_base:
        c = H.one if sign == "minus" else -H.one
        base = skew_two_generator(base_name, H, module, c, params)
    else:
        c = lam if sign == "minus" else -lam
        base = u_square_c_v_square(base_name, H, module, c, params)
    if k in (1, 2, 3):
        sigma = CycMatrix([[0, 1], [lam, 0]], L)
    elif k == 4:
        sigma = CycMatrix([[0, -1], [lam, 0]], L)
    else:
        # the anti-diagonal display does not preserve the relation space; only diagonal sigma does
        sigma = CycMatrix.diagonal([1, -1], L)
    t_signs = {1: (eps, eps, -1), 2: (eps, eps, -1), 3: (eps, -eps, -1), 4: (eps, -eps, -1), 5: (eps, -eps, 1)}[k]
    t_label = RepLabel("A4m", "T", t_signs)
    return ore_extend(base, sigma, t_label, name=name, strict=False)


def _note_reducible(A: GradedAlgebraSpec) -> None:
    module = A.ore.base.module if A.ore is not None else A.module
    key = (A.hopf.name, str(module.label))
    if key not in _REPORTED_REDUCIBLE:
        _REPORTED_REDUCIBLE.add(key)
        logger.debug(f"{A.hopf.name}, V = {module.label}: reducible degree-one module; theorems do not apply")


def standard_action(
    H: HopfPresentation,
    name: str,
    i: Optional[int] = None,
    j: Optional[int] = None,
    eps: int = 1,
    require_inner_faithful: bool = False,
) -> GradedAlgebraSpec:
    """
    One named module algebra of H.

    Parameters:
    -----------
    H : HopfPresentation
        H2n2, B4m or A4m
    name : str
        one of algebra_names(H)
    i, j : int
        module parameters; defaults i = 0, j = 1 for H2n2 and i = 1 otherwise
    eps : int
        epsilon of A_{k,eps} (A4m with m even)
    require_inner_faithful : bool
        raise InnerFaithfulnessPrecondition instead of returning a non-inner-faithful action
    """
    if name not in algebra_names(H):
        raise ParameterOutOfRange(f"{name!r} is not an algebra of {H.name}; expected one of {algebra_names(H)}")
    if H.family == "H2n2":
        A = _wreath_algebra(H, name, 0 if i is None else i, 1 if j is None else j)
    elif H.family == "B4m" or H.params["m"] % 2:
        A = _rotation_algebra(H, name, 1 if i is None else i, eps)
    else:
        A = _ore_case(H, name, 1 if i is None else i, eps)
    if A.notes:
        _note_reducible(A)
    return _finish(A, require_inner_faithful)


def standard_actions(
    H: HopfPresentation,
    i: Optional[int] = None,
    j: Optional[int] = None,
    eps: int = 1,
    require_inner_faithful: bool = False,
) -> List[GradedAlgebraSpec]:
    specs = [standard_action(H, name, i, j, eps, require_inner_faithful) for name in algebra_names(H)]
    logger.info(f"{H.name}: {len(specs)} module algebras")
    return specs


def _pattern_u2cv2(word: Word):
    """Split a word as u^{2p}(vu)^q (shape 'vu') or u^{2p+1}(vu)^{q-1}v (shape 'uv'); None otherwise."""
    k = 0
    while k < len(word) and word[k] == U:
        k += 1
    rest = word[k:]
    if k % 2 == 0 and rest == (V, U) * (len(rest) // 2) and len(rest) % 2 == 0:
        return "vu", k // 2, len(rest) // 2
    middle = rest[:-1]
    if k % 2 == 1 and rest[-1:] == (V,) and len(middle) % 2 == 0 and middle == (V, U) * (len(middle) // 2):
        return "uv", (k - 1) // 2, len(middle) // 2 + 1
    return None


def action_oracle(A: GradedAlgebraSpec, generator: int, word: Word) -> LinComb:
    """
    Closed-form image of a monomial under a generator, for the displayed formulas:
    z, x, y on u^a v^b (H2n2, Aminus/Aplus); a, s+, s- on u^{2p}(vu)^q and
    u^{2p}(uv)^q (B4m with i odd, A4m with m odd); a, s+, s- on u^p v^q t^{2r} (A1minus).
    The result is not normalized.
    """
    H = A.hopf
    L = A.conductor
    gname = H.generator_names[generator]
    if H.family == "H2n2" and A.name in ("Aminus", "Aplus"):
        i, j = A.params["i"], A.params["j"]
        a = sum(1 for x in word if x == U)
        b = len(word) - a
        if word != (U,) * a + (V,) * b:
            raise UnsupportedPresentation(f"closed form covers u^a v^b, got {A.word_text(word)}")
        q, p = q_root(H), skew_root(H)
        if gname == "x":
            return {word: q ** (i * a + j * b)}
        if gname == "y":
            return {word: q ** (j * a + i * b)}
        coeff = q ** ((a + comb(a, 2) + comb(b, 2)) * i * j + a * b * j * j) * p ** (a * b * (i * i - j * j))
        if A.name == "Aplus" and (a * b) % 2:
            coeff = -coeff
        return {(U,) * b + (V,) * a: coeff}

    if H.family in ("B4m", "A4m") and A.tag == "u2cv2" and A.name in ("Aminus", "Aplus"):
        i = A.params["i"]
        if H.family == "B4m" and i % 2 == 0:
            raise UnsupportedPresentation("the B4m closed form needs i odd")
        lam = lambda_root(H)
        if gname == "a":
            # a acts on V by -1 in both cases covered here
            return {word: CycNum.from_rational(L, (-1) ** len(word))}
        match = _pattern_u2cv2(word)
        if match is None:
            raise UnsupportedPresentation(f"closed form covers u^2p(vu)^q and u^2p(uv)^q, got {A.word_text(word)}")
        shape, p, q = match
        sign = 1 if A.name == "Aminus" or p % 2 == 0 else -1
        direction = 1 if gname == "s+" else -1
        if shape == "vu":
            exponent = -direction * i * q
            image = (U,) * (2 * p) + (U, V) * q
        else:
            exponent = direction * i * q
            image = (U,) * (2 * p) + (V, U) * q
        return {image: lam ** exponent * sign}

    if H.family == "A4m" and A.name == "A1minus":
        p = sum(1 for x in word if x == U)
        q = sum(1 for x in word if x == V)
        r2 = len(word) - p - q
        if word != (U,) * p + (V,) * q + (T,) * r2 or r2 % 2:
            raise UnsupportedPresentation(f"closed form covers u^p v^q t^2r, got {A.word_text(word)}")
        image = (U,) * q + (V,) * p + (T,) * r2
        if gname == "a":
            return {word: H.one}
        if gname == "s+":
            return {image: H.one}
        return {image: lambda_root(H) ** (A.params["i"] * (p - q))}

    raise UnsupportedPresentation(f"no closed-form action for {A.name} over {H.name}")


def theorem_preconditions(A: GradedAlgebraSpec) -> Dict[str, object]:
    """gcd data the inner-faithfulness criteria are decided on, for reports."""
    H = A.hopf
    if H.family == "H2n2":
        i, j = A.params["i"], A.params["j"]
        return {"i^2-j^2": i * i - j * j, "gcd": gcd(i * i - j * j, H.params["n"])}
    modulus = 2 * H.params["m"] if H.family == "B4m" else H.params["m"]
    labels = module_labels(A)
    return {"i": A.params["i"], "gcd": gcd(A.params["i"], modulus),
            "reducible": any(is_reducible(label, H.params) for label in labels if label.dimension == 2)}
