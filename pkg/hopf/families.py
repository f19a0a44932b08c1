"""Constructors for the Hopf algebra families and their comparison group algebras."""
from __future__ import annotations

import logging
from math import lcm

from cyclotomic.field import CycNum, root_of_unity
from hopf.presentation import DihedralPresentation, HopfPresentation, RewritingPresentation
from hopf.rewriting import LinComb, Rule, lc_add_into
from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

X, Y, Z = 0, 1, 2

GROUP_SPECS = ("ZnWrS2", "D4m", "D2mxZ2")


def _check_at_least_two(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 2:
        raise ParameterOutOfRange(f"{name}={value!r}, need an integer >= 2")


def mu_of_J(n: int, conductor: int) -> LinComb:
    """(1/n) sum_{i,j} q^{-ij} x^i y^j, the square of z in H_{2n^2}."""
    q = root_of_unity(conductor, conductor // n)
    out: LinComb = {}
    for i in range(n):
        for j in range(n):
            lc_add_into(out, {(X,) * i + (Y,) * j: q ** (-i * j) / n})
    return out


def _wreath_rules(n: int, conductor: int, z_square: LinComb):
    one = CycNum.one(conductor)
    return [
        Rule.make((Y, X), {(X, Y): one}, "yx=xy"),
        Rule.make((Z, X), {(Y, Z): one}, "zx=yz"),
        Rule.make((Z, Y), {(X, Z): one}, "zy=xz"),
        Rule.make((X,) * n, {(): one}, f"x^{n}=1"),
        Rule.make((Y,) * n, {(): one}, f"y^{n}=1"),
        Rule.make((Z, Z), z_square, "zz"),
    ]


def build_H2n2(n: int) -> HopfPresentation:
    """
    H_{2n^2} = kG[z; sigma]/(z^2 - mu(J)) with G = Z_n x Z_n = <x, y>.

    Delta(z) = (1/n) sum_{i,j} q^{-ij} x^i z ⊗ y^j z, S(z) = z, and all generators
    have counit 1. For n = 2 this is the eight-dimensional Kac-Palyutkin algebra.
    """
    _check_at_least_two("n", n)
    L = 2 * n
    q = root_of_unity(L, 2)
    one = CycNum.one(L)
    delta_z = []
    for i in range(n):
        for j in range(n):
            delta_z.append((q ** (-i * j) / n, (X,) * i + (Z,), (Y,) * j + (Z,)))
    H = RewritingPresentation(
        family="H2n2",
        params={"n": n},
        generator_names=["x", "y", "z"],
        conductor=L,
        rules=_wreath_rules(n, L, mu_of_J(n, L)),
        coproducts={X: [(one, (X,), (X,))], Y: [(one, (Y,), (Y,))], Z: delta_z},
        antipodes={X: {(X,) * (n - 1): one}, Y: {(Y,) * (n - 1): one}, Z: {(Z,): one}},
        counits={X: one, Y: one, Z: one},
        group_like=[X, Y],
    )
    logger.info(f"Built {H.name} of dimension {H.dimension}")
    return H


def build_A4m(m: int) -> HopfPresentation:
    _check_at_least_two("m", m)
    H = DihedralPresentation("A4m", {"m": m}, lcm(m, 2), rho_order=m, has_a=True, carry=False, hopf_structure="hopf")
    logger.info(f"Built {H.name} of dimension {H.dimension}")
    return H


def build_B4m(m: int) -> HopfPresentation:
    _check_at_least_two("m", m)
    H = DihedralPresentation("B4m", {"m": m}, lcm(2 * m, 4), rho_order=m, has_a=True, carry=True, hopf_structure="hopf")
    logger.info(f"Built {H.name} of dimension {H.dimension}")
    return H


def build_group_algebra(spec: str, n: int | None = None, m: int | None = None) -> HopfPresentation:
    """
    Group algebras used for the Grothendieck-ring comparisons.

    spec is one of "ZnWrS2" (needs n), "D4m" or "D2mxZ2" (need m).
    """
    if spec == "ZnWrS2":
        _check_at_least_two("n", n)
        L = 2 * n
        one = CycNum.one(L)
        H = RewritingPresentation(
            family="ZnWrS2",
            params={"n": n},
            generator_names=["x", "y", "z"],
            conductor=L,
            rules=_wreath_rules(n, L, {(): one}),
            coproducts={g: [(one, (g,), (g,))] for g in (X, Y, Z)},
            antipodes={X: {(X,) * (n - 1): one}, Y: {(Y,) * (n - 1): one}, Z: {(Z,): one}},
            counits={X: one, Y: one, Z: one},
            group_like=[X, Y, Z],
        )
    elif spec == "D4m":
        _check_at_least_two("m", m)
        H = DihedralPresentation("D4m", {"m": m}, lcm(2 * m, 4), rho_order=2 * m, has_a=False, carry=False, hopf_structure="group")
    elif spec == "D2mxZ2":
        _check_at_least_two("m", m)
        H = DihedralPresentation("D2mxZ2", {"m": m}, lcm(m, 2), rho_order=m, has_a=True, carry=False, hopf_structure="group")
    else:
        raise ParameterOutOfRange(f"unknown group algebra {spec!r}, expected one of {GROUP_SPECS}")
    logger.info(f"Built {H.name} of dimension {H.dimension}")
    return H


def build_family(family: str, n: int | None = None, m: int | None = None) -> HopfPresentation:
    """Dispatch on the family tags used by the CLI and the report registry."""
    key = family.lower()
    if key in ("h2n2", "h"):
        return build_H2n2(n)
    if key in ("a4m", "a"):
        return build_A4m(m)
    if key in ("b4m", "b"):
        return build_B4m(m)
    if key in ("znwrs2", "d4m", "d2mxz2"):
        canonical = {"znwrs2": "ZnWrS2", "d4m": "D4m", "d2mxz2": "D2mxZ2"}[key]
        return build_group_algebra(canonical, n=n, m=m)
    raise ParameterOutOfRange(f"unknown family {family!r}")
