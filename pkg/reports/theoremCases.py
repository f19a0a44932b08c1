"""
Registry of checkable statements about the Hopf algebras H_{2n^2}, A_{4m} and B_{4m}.

Each TheoremCase sweeps one integer parameter and owns exactly one oracle: a function
from a parameter value to a Check carrying the expected and observed values.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel

from cyclotomic.linalg import CycMatrix
from hopf.families import build_family
from hopf.presentation import HopfPresentation
from algebras.gradedAlgebra import GradedAlgebraSpec
from algebras.oreExtension import ore_extend
from algebras.standardActions import ORE_CASES, standard_action
from fusion.closure import candidate_modules, closure_is_complete, inner_faithful_criterion, irreducible_parts
from fusion.expectedRules import expected_fusion
from fusion.fusionTable import (
    FusionTable,
    build_fusion_table,
    compare_fusion_isomorphism,
    find_fusion_isomorphism,
    is_commutative,
    one_dimensional_group,
)
from invariants.claimedGenerators import claimed_generators, verify_claimed_generators
from invariants.faithfulness import faithfulness_check
from invariants.fixedRing import NOT_FREE, NOT_REGULAR, REGULAR, minimal_generators
from invariants.membership import (
    SubalgebraFiltration,
    commutative_plane,
    f_tls,
    g_tl,
    lemma_ring,
    skew_plane,
)
from invariants.oreCheck import odd_t_power_check, ore_invariants_check
from representations.catalog import irreducible_catalog
from representations.labels import RepLabel
from utils.config import EngineSettings
from utils.errors import ExtensionConditionFails, ParameterOutOfRange

logger = logging.getLogger(__name__)


class Check(NamedTuple):
    passed: bool
    expected: str
    observed: str
    detail: str = ""


class CaseOutcome(BaseModel):
    case_id: str
    parameter: str
    value: int
    passed: bool
    expected: str
    observed: str
    detail: str = ""


@dataclass(frozen=True)
class TheoremCase:
    """
    Parameters:
    -----------
    case_id : str
        stable identifier, e.g. "H2n2.fixed.minus"
    summary : str
        one line describing the statement
    parameter : str
        name of the swept parameter ("n", "m", "l", "t" or "D")
    default_range : tuple of int
        values swept by `verify --all`
    oracle : callable
        value -> Check
    accepts : callable
        value -> bool, rejects values the statement is not about
    """
    case_id: str
    summary: str
    parameter: str
    default_range: Tuple[int, ...]
    oracle: Callable[[int], Check]
    accepts: Callable[[int], bool] = lambda value: value >= 2
    slow: bool = False


@lru_cache(maxsize=None)
def _hopf(family: str, value: int) -> HopfPresentation:
    if family in ("H2n2", "ZnWrS2"):
        return build_family(family, n=value)
    return build_family(family, m=value)


@lru_cache(maxsize=None)
def _table(family: str, value: int) -> FusionTable:
    return build_fusion_table(_hopf(family, value))


def _joined(parts: Sequence[str]) -> str:
    return "; ".join(parts)


# catalogs

def _expected_counts(family: str, value: int) -> Tuple[int, int]:
    if family == "H2n2":
        return 2 * value, value * (value - 1) // 2
    if family == "B4m" or value % 2:
        return 4, value - 1
    return 8, value - 2


def _catalog(family: str) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        H = _hopf(family, value)
        catalog = irreducible_catalog(H)
        ones = sum(1 for label, _ in catalog if label.dimension == 1)
        twos = len(catalog) - ones
        broken = [str(label) for label, rep in catalog if not rep.check_is_module()]
        want = _expected_counts(family, value)
        return Check(
            (ones, twos) == want and not broken,
            f"{want[0]} one-dim, {want[1]} two-dim",
            f"{ones} one-dim, {twos} two-dim",
            f"relations fail for {broken}" if broken else "",
        )
    return oracle


# fusion rings

def _fusion(family: str) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        H = _hopf(family, value)
        table = _table(family, value)
        mismatches = [
            f"{a} x {b}"
            for a in table.labels
            for b in table.labels
            if table.product(a, b) != expected_fusion(H, a, b)
        ]
        structural = []
        if not table.check_dimensions():
            structural.append("dimensions")
        if not table.check_associativity():
            structural.append("associativity")
        detail = _joined(mismatches[:5] + [f"{s} fails" for s in structural])
        return Check(
            not mismatches and not structural,
            "closed-form products on every ordered pair",
            f"{len(table) ** 2 - len(mismatches)} of {len(table) ** 2} pairs agree",
            detail,
        )
    return oracle


def _noncommutative_even(value: int) -> Check:
    table = _table("A4m", value)
    mult, abelian = one_dimensional_group(table)
    order = len({a for a, _ in mult})
    commutative = is_commutative(table)
    return Check(
        not commutative and order == 8 and not abelian,
        "noncommutative; invertibles form a nonabelian group of order 8",
        f"commutative={commutative}; {order} invertibles, abelian={abelian}",
    )


def _wreath_image(label: RepLabel) -> RepLabel:
    return RepLabel("ZnWrS2", {"T": "U", "pi": "rho"}[label.kind], label.params)


def _rotation_image(label: RepLabel) -> RepLabel:
    params = label.params[:2] if label.kind == "T" else label.params
    return RepLabel("D4m", label.kind, params)


def _signed_image(label: RepLabel) -> RepLabel:
    return RepLabel("D2mxZ2", label.kind, label.params)


def _group_iso(family: str, group: str, image: Callable[[RepLabel], RepLabel]) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        t1, t2 = _table(family, value), _table(group, value)
        bijection = {label: image(label) for label in t1.labels}
        missing = [str(b) for b in bijection.values() if b not in t2.labels]
        if missing:
            return Check(False, f"K0 isomorphic to K0({group})", "bijection leaves the catalog", f"no labels {missing}")
        same = compare_fusion_isomorphism(t1, t2, bijection)
        detail = ""
        if not same:
            found = find_fusion_isomorphism(t1, t2)
            detail = "another bijection works" if found else "no isomorphism exists"
        return Check(same, f"K0 isomorphic to K0({group})", f"label bijection preserves constants: {same}", detail)
    return oracle


def _small_iso(value: int) -> Check:
    bijection = find_fusion_isomorphism(_table("H2n2", 2), _table("B4m", 2))
    text = ", ".join(f"{a}->{b}" for a, b in bijection.items()) if bijection else ""
    return Check(bijection is not None, "K0(H_8) isomorphic to K0(B_8)", f"bijection found: {bijection is not None}", text)


# inner-faithfulness

def _inner_faithful(family: str) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        H = _hopf(family, value)
        table = _table(family, value)
        disagreements = []
        faithful = 0
        modules = candidate_modules(H)
        for V in modules:
            by_criterion = inner_faithful_criterion(H, V)
            by_closure = closure_is_complete(irreducible_parts(H, V), table)
            faithful += by_closure
            if by_criterion != by_closure:
                disagreements.append(f"{'+'.join(map(str, V))}: criterion {by_criterion}, closure {by_closure}")
        return Check(
            not disagreements,
            "criterion equals closure completeness",
            f"{len(modules)} modules, {faithful} inner-faithful",
            _joined(disagreements),
        )
    return oracle


def _bare_pi_even(value: int) -> Check:
    H = _hopf("A4m", value)
    table = _table("A4m", value)
    complete = [str(V[0]) for V in candidate_modules(H) if len(V) == 1 and closure_is_complete(V, table)]
    return Check(not complete, "no single pi_i^eps is inner-faithful", f"inner-faithful: {complete or 'none'}")


# fixed rings

def expected_invariants(A: GradedAlgebraSpec) -> Tuple[Optional[List[int]], str]:
    """Published generator degrees and certificate of a standard action (degrees None when unpublished)."""
    H, name = A.hopf, A.name
    if H.family == "H2n2":
        n = H.params["n"]
        if name == "Aminus" or (name == "Aplus" and n % 2 == 0):
            return [n, 2 * n], REGULAR
        if name == "Aplus":
            return [n, 3 * n], NOT_FREE
        if name == "KP-a":
            # commutative hypersurface: three generators, degrees not published
            return None, NOT_REGULAR
        return [2, 4], REGULAR
    m = H.params["m"]
    if A.ore is None:
        if name == "Aminus":
            return [2, 2 * m], REGULAR
        return [4, 2 * m, 2 * m + 2], NOT_REGULAR
    k = A.params["case"]
    if name.endswith("minus"):
        if k in (1, 2, 5):
            return [2, 2, m], REGULAR
        return [2, 4, m, m + 2], NOT_REGULAR
    if k in (1, 2, 5):
        return [2, 4, m, m + 2], NOT_REGULAR
    return [4, 4, 4, m, m + 2, m + 2], NOT_REGULAR


def case_degree_bound(A: GradedAlgebraSpec, degrees: Optional[List[int]]) -> int:
    if degrees:
        return 2 * max(degrees) + 2
    return EngineSettings.from_env().degree_bound(A.hopf.dimension)


def plus_hilbert_head(m: int) -> List[int]:
    """Leading dimensions of (A^+)^H for B_{4m}, degrees 0..2m+2."""
    head = []
    for d in range(2 * m + 3):
        if m % 2 == 0:
            value = 1 if d % 4 == 0 and d <= 2 * m - 4 else 0
            value = {2 * m: 2, 2 * m + 2: 1}.get(d, value)
        else:
            value = 1 if d % 4 == 0 and d <= 2 * m - 2 else 0
            value = {2 * m: 1, 2 * m + 2: 2}.get(d, value)
        head.append(value)
    return head


def _fixed_ring_check(specs: Sequence[GradedAlgebraSpec], skipped: Sequence[str] = (), with_head: bool = False) -> Check:
    expected, observed, problems, notes = [], [], [], []
    for A in specs:
        notes.extend(f"{A.name}: {note}" for note in A.notes)
        want, certificate = expected_invariants(A)
        D = case_degree_bound(A, want)
        report = minimal_generators(A, D)
        got = sorted(report.degrees)
        expected.append(f"{A.name}: {sorted(want) if want else '?'} {certificate}")
        observed.append(f"{A.name}: {got} {report.certificate}")
        if want is not None and got != sorted(want):
            problems.append(f"{A.name} degrees {got}")
        if report.certificate != certificate:
            problems.append(f"{A.name} certificate {report.certificate}: {report.certificate_detail}")
        if certificate == REGULAR and report.product_of_degrees != A.hopf.dimension:
            problems.append(f"{A.name} degree product {report.product_of_degrees} != {A.hopf.dimension}")
        if with_head and A.name == "Aplus":
            head = plus_hilbert_head(A.hopf.params["m"])
            if report.hilbert_prefix[: len(head)] != head:
                problems.append(f"{A.name} Hilbert prefix {report.hilbert_prefix[: len(head)]} != {head}")
        claims = claimed_generators(A)
        if claims is not None:
            claim_check = verify_claimed_generators(A, claims, D)
            if not claim_check.ok:
                problems.append(
                    f"{A.name} published generators: fixed={claim_check.fixed}, "
                    f"mismatches={claim_check.mismatches[:2]}"
                )
    if skipped:
        observed.append(f"skipped (not inner-faithful): {', '.join(skipped)}")
    return Check(not problems, _joined(expected), _joined(observed), _joined(problems + notes))


def _fixed(family: str, names: Sequence[str], with_head: bool = False) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        H = _hopf(family, value)
        return _fixed_ring_check([standard_action(H, name) for name in names], with_head=with_head)
    return oracle


def _kp_cases(value: int) -> Check:
    H = _hopf("H2n2", 2)
    specs = [standard_action(H, name) for name in ("KP-a", "KP-b", "KP-c", "KP-d")]
    check = _fixed_ring_check(specs)
    unfaithful = [A.name for A in specs if not faithfulness_check(A, H.dimension)]
    if unfaithful:
        return check._replace(passed=False, detail=_joined([check.detail, f"not faithful through degree 8: {unfaithful}"]))
    return check


def _ore_family_specs(value: int, sign: str) -> Tuple[List[GradedAlgebraSpec], List[str]]:
    H = _hopf("A4m", value)
    specs, skipped = [], []
    for k in ORE_CASES:
        A = standard_action(H, f"A{k}{sign}")
        if A.inner_faithful:
            specs.append(A)
        else:
            skipped.append(A.name)
    return specs, skipped


def _fixed_even(sign: str) -> Callable[[int], Check]:
    def oracle(value: int) -> Check:
        specs, skipped = _ore_family_specs(value, sign)
        return _fixed_ring_check(specs, skipped)
    return oracle


def _even_t_powers(value: int) -> Check:
    specs, _ = _ore_family_specs(value, "minus")
    failures = []
    for A in specs:
        parity = odd_t_power_check(A, value + 4)
        if not parity.ok:
            failures.append(f"{A.name}: odd fixed {parity.odd_fixed[:3]}, odd summands {parity.odd_summands[:3]}")
    return Check(not failures, "invariants use only even powers of t", f"{len(specs) - len(failures)} of {len(specs)} agree", _joined(failures))


# Ore extensions

ORE_BASES = (("H2n2", 2, ("KP-a", "KP-b", "KP-c", "KP-d")), ("B4m", 3, ("Aminus", "Aplus")))


def _ore_trivial(D: int) -> Check:
    failures, count = [], 0
    for family, value, names in ORE_BASES:
        H = _hopf(family, value)
        for name in names:
            base = standard_action(H, name)
            for scale in (1, -1):
                sigma = CycMatrix.diagonal([scale, scale], H.conductor)
                count += 1
                if not ore_invariants_check(base, sigma, D):
                    failures.append(f"{base.name} over {H.name}, sigma = {scale}")
    return Check(not failures, "fixed ring of A[t; sigma] is A^H[t; sigma]", f"{count - len(failures)} of {count} extensions agree", _joined(failures))


def _ore_rejects(value: int) -> Check:
    A = standard_action(_hopf("A4m", value), "A1minus")
    t_label = RepLabel("A4m", "T", (1, 1, -1))
    try:
        ore_extend(A.ore.base, A.ore.sigma, t_label, strict=True)
    except ExtensionConditionFails as e:
        return Check(True, f"{t_label} rejected", f"rejected at {e.generator}")
    return Check(False, f"{t_label} rejected", "extension accepted")


# membership lemmas

def _membership_check(ring, generators, elements: Dict[str, object]) -> Check:
    filtration = SubalgebraFiltration(ring, generators)
    failed = [key for key, element in elements.items() if not filtration.test(element)]
    return Check(not failed, f"all {len(elements)} elements generated", f"{len(elements) - len(failed)} generated", _joined(failed))


def _binomial(l: int) -> Check:
    R = commutative_plane()
    first = _membership_check(
        R,
        [R.element([(1, "x"), (1, "y")]), R.element([(1, "xy")])],
        {f"x^{l}+y^{l}": R.element([(1, "x" * l), (1, "y" * l)])},
    )
    second = _membership_check(
        R,
        [R.element([(1, "x"), (-1, "y")]), R.element([(1, "xy")])],
        {f"x^{l}+(-1)^{l}y^{l}": R.element([(1, "x" * l), ((-1) ** l, "y" * l)])},
    )
    return Check(first.passed and second.passed, "both sums generated", f"{first.observed}, {second.observed}", _joined([d for d in (first.detail, second.detail) if d]))


@lru_cache(maxsize=None)
def _four_variable_ring():
    return lemma_ring(alpha=3, k=1)


def _lemma_generators(R, texts: Sequence[Sequence[Tuple[int, str]]]):
    return [R.element(terms) for terms in texts]


FULL_SET = ([(1, "zz")], [(1, "x"), (-1, "y")], [(1, "xw"), (1, "yw")], [(1, "ww")], [(1, "zx"), (1, "zy")], [(1, "zw")])


def _four_variable(t: int, bound: int = 4) -> Check:
    R = _four_variable_ring()
    elements = {
        f"f_{t}{l}{s}": f_tls(R, t, l, s)
        for l in range(bound + 1)
        for s in range(bound + 1)
        if t or l or s
    }
    return _membership_check(R, _lemma_generators(R, FULL_SET), elements)


def _four_variable_remarks(l: int, bound: int = 4) -> Check:
    R = _four_variable_ring()
    even_s = _membership_check(
        R,
        _lemma_generators(R, ([(1, "zz")], [(1, "x"), (-1, "y")], [(1, "ww")], [(1, "zx"), (1, "zy")])),
        {f"f_{t}{l}{s}": f_tls(R, t, l, s) for t in range(bound + 1) for s in range(0, bound + 1, 2) if t or l or s},
    )
    no_z = _membership_check(
        R,
        _lemma_generators(R, ([(1, "z")], [(1, "x"), (-1, "y")], [(1, "xw"), (1, "yw")], [(1, "ww")])),
        {f"f_0{l}{s}": f_tls(R, 0, l, s) for s in range(bound + 1) if l or s},
    )
    no_w = _membership_check(
        R,
        _lemma_generators(R, ([(1, "zz")], [(1, "x"), (-1, "y")], [(1, "zx"), (1, "zy")])),
        {f"f_{t}{l}0": f_tls(R, t, l, 0) for t in range(bound + 1) if t or l},
    )
    parts = (even_s, no_z, no_w)
    return Check(
        all(p.passed for p in parts),
        "even s; without z^2; without w",
        ", ".join(p.observed for p in parts),
        _joined([p.detail for p in parts if p.detail]),
    )


def _skew(t: int, bound: int = 5) -> Check:
    R = skew_plane()
    generators = [R.element([(1, "x"), (1, "y")]), R.element([(1, "xyx"), (-1, "xyy")])]
    elements = {f"g_{t}{l}": g_tl(R, t, l) for l in range(bound + 1)}
    elements["x^2y^2"] = R.element([(1, "xxyy")])
    return _membership_check(R, generators, elements)


# conjectures

def _sweep_specs(value: int) -> List[GradedAlgebraSpec]:
    specs = [standard_action(_hopf("H2n2", value), name) for name in ("Aminus", "Aplus")]
    specs += [standard_action(_hopf("B4m", value), name) for name in ("Aminus", "Aplus")]
    if value % 2:
        specs += [standard_action(_hopf("A4m", value), name) for name in ("Aminus", "Aplus")]
    elif value >= 4:
        specs += [A for A in _ore_family_specs(value, "minus")[0]]
    return [A for A in specs if A.inner_faithful]


def _degree_product(value: int) -> Check:
    regular, failures = 0, []
    for A in _sweep_specs(value):
        want, _ = expected_invariants(A)
        report = minimal_generators(A, case_degree_bound(A, want))
        if report.certificate != REGULAR:
            continue
        regular += 1
        if not report.conjecture_product_holds:
            failures.append(f"{A.name} over {A.hopf.name}: product {report.product_of_degrees}")
    return Check(not failures, "product of degrees equals dim H", f"{regular - len(failures)} of {regular} regular cases", _joined(failures))


def _faithful(value: int) -> Check:
    specs = _sweep_specs(value)
    failures = []
    for A in specs:
        result = faithfulness_check(A, A.hopf.dimension + 2)
        if not result:
            failures.append(f"{A.name} over {A.hopf.name}: missing {[str(x) for x in result.missing]}")
    return Check(not failures, "every inner-faithful action is faithful", f"{len(specs) - len(failures)} of {len(specs)} faithful", _joined(failures))


def _odd(value: int) -> bool:
    return value >= 3 and value % 2 == 1


def _even(value: int) -> bool:
    return value >= 2 and value % 2 == 0


def _at_least(low: int) -> Callable[[int], bool]:
    return lambda value: value >= low


CASES: List[TheoremCase] = [
    TheoremCase("H2n2.catalog", "2n one-dimensional and n(n-1)/2 two-dimensional irreducibles", "n", (2, 3, 4, 5), _catalog("H2n2")),
    TheoremCase("B4m.catalog", "4 one-dimensional and m-1 two-dimensional irreducibles", "m", (2, 3, 4, 5, 6), _catalog("B4m")),
    TheoremCase("A4m.catalog", "4 (m odd) or 8 (m even) one-dimensional irreducibles", "m", (2, 3, 4, 5, 6), _catalog("A4m")),
    TheoremCase("H2n2.fusion", "fusion rules of H_{2n^2}", "n", (2, 3, 4), _fusion("H2n2")),
    TheoremCase("H2n2.groth-iso", "K0(H_{2n^2}) is K0(Z_n wr S_2) via T->U, pi->rho", "n", (2, 3, 4), _group_iso("H2n2", "ZnWrS2", _wreath_image)),
    TheoremCase("H8.B8.iso", "K0(H_8) and K0(B_8) are isomorphic", "n", (2,), _small_iso, accepts=lambda value: value == 2),
    TheoremCase("H2n2.inner-faithful", "pi_{i,j} inner-faithful iff (i^2 - j^2, n) = 1", "n", (2, 3, 4), _inner_faithful("H2n2")),
    TheoremCase("H8.fixed", "the four quadratic H_8 module algebras", "n", (2,), _kp_cases, accepts=lambda value: value == 2),
    TheoremCase("H2n2.fixed.minus", "invariants of A^- generated in degrees n, 2n", "n", (2, 3, 4, 5), _fixed("H2n2", ("Aminus",))),
    TheoremCase("H2n2.fixed.plus", "A^+: degrees n, 2n for n even; n, 3n and not free for n odd", "n", (2, 3, 4, 5), _fixed("H2n2", ("Aplus",))),
    TheoremCase("B4m.fusion", "fusion rules of B_{4m}", "m", (2, 3, 4, 5), _fusion("B4m")),
    TheoremCase("B4m.groth-iso", "K0(B_{4m}) is K0(D_{4m})", "m", (2, 3, 4), _group_iso("B4m", "D4m", _rotation_image)),
    TheoremCase("B4m.inner-faithful", "pi_i inner-faithful iff (i, 2m) = 1", "m", (2, 3, 4, 5), _inner_faithful("B4m")),
    TheoremCase("B4m.fixed.minus", "invariants of A^- generated in degrees 2, 2m", "m", (2, 3, 4), _fixed("B4m", ("Aminus",))),
    TheoremCase("B4m.fixed.plus", "A^+: degrees 4, 2m, 2m+2, not regular, Hilbert head", "m", (2, 3, 4), _fixed("B4m", ("Aplus",), with_head=True)),
    TheoremCase("A4mOdd.fusion", "fusion rules of A_{4m}, m odd", "m", (3, 5), _fusion("A4m"), accepts=_odd),
    TheoremCase("A4mOdd.groth-iso", "K0(A_{4m}) is K0(D_{2m} x Z_2) for m odd", "m", (3, 5), _group_iso("A4m", "D2mxZ2", _signed_image), accepts=_odd),
    TheoremCase("A4mOdd.inner-faithful", "pi_i^eps inner-faithful iff eps = -1 and (i, m) = 1", "m", (3, 5), _inner_faithful("A4m"), accepts=_odd),
    TheoremCase("A4mOdd.fixed.minus", "invariants of A^- generated in degrees 2, 2m", "m", (3, 5), _fixed("A4m", ("Aminus",)), accepts=_odd),
    TheoremCase("A4mOdd.fixed.plus", "A^+: degrees 4, 2m, 2m+2, not regular", "m", (3, 5), _fixed("A4m", ("Aplus",)), accepts=_odd),
    TheoremCase("A4mEven.fusion", "fusion rules of A_{4m}, m even", "m", (2, 4, 6), _fusion("A4m"), accepts=_even),
    TheoremCase("A4mEven.noncommutative", "K0(A_{4m}) is noncommutative for m even", "m", (2, 4, 6), _noncommutative_even, accepts=_even),
    TheoremCase("A4mEven.bare-pi", "no single pi_i^eps is inner-faithful for m even", "m", (2, 4, 6), _bare_pi_even, accepts=_even),
    TheoremCase("A4mEven.inner-faithful", "pi_i^eps + T criteria for m even", "m", (2, 4, 6), _inner_faithful("A4m"), accepts=_even),
    TheoremCase("A4mEven.fixed", "A^-_k: regular for k = 1, 2, 5, not for k = 3, 4", "m", (4, 6), _fixed_even("minus"), accepts=_even, slow=True),
    TheoremCase("A4mEven.fixed.plus", "A^+_k is never regular", "m", (4, 6), _fixed_even("plus"), accepts=_even, slow=True),
    TheoremCase("A4mEven.even-t", "invariants of A^-_k use only even powers of t", "m", (4, 6), _even_t_powers, accepts=_even),
    TheoremCase("ore.trivial-t", "A[t; sigma]^H = A^H[t; sigma] for trivial t", "D", (10,), _ore_trivial, accepts=_at_least(1)),
    TheoremCase("ore.rejects-nontrivial", "t = T_{1,1,-1} violates the extension condition", "m", (2, 4, 6), _ore_rejects, accepts=_even),
    TheoremCase("lemma.binomial", "x^l + y^l from x + y, xy; x^l + (-1)^l y^l from x - y, xy", "l", tuple(range(1, 9)), _binomial, accepts=_at_least(1)),
    TheoremCase("lemma.four-variable", "f_{t,l,s} from the six generators, l, s <= 4", "t", (0, 1, 2, 3, 4), _four_variable, accepts=_at_least(0), slow=True),
    TheoremCase("lemma.four-variable.variants", "f_{t,l,s} from the reduced generator sets", "l", (0, 1, 2, 3, 4), _four_variable_remarks, accepts=_at_least(0)),
    TheoremCase("lemma.skew", "g_{t,l} from x + y and xy(x - y) in k_{-1}[x, y]", "t", (0, 1, 2, 3, 4, 5), _skew, accepts=_at_least(0)),
    TheoremCase("conjecture.degree-product", "product of generator degrees equals dim H when regular", "m", (2, 3, 4), _degree_product, slow=True),
    TheoremCase("conjecture.faithful", "inner-faithful actions on these algebras are faithful", "m", (2, 3), _faithful, slow=True),
]

REGISTRY: Dict[str, TheoremCase] = {case.case_id: case for case in sorted(CASES, key=lambda c: c.case_id)}


def case_ids() -> List[str]:
    return list(REGISTRY)


def get_case(case_id: str) -> TheoremCase:
    try:
        return REGISTRY[case_id]
    except KeyError:
        raise ParameterOutOfRange(f"unknown theorem id {case_id!r}; see `verify --list`") from None


_RANGE = re.compile(r"^\s*(\w+)\s*=\s*([\d,.\s]+)$")


def parse_range(text: str, case: TheoremCase) -> Tuple[int, ...]:
    """
    Parse "m=2,4,6" or "m=2..5" (mixed forms allowed); the name must match the case's parameter.
    """
    match = _RANGE.match(text)
    if not match:
        raise ParameterOutOfRange(f"range {text!r} is not of the form name=values")
    name, body = match.groups()
    if name != case.parameter:
        raise ParameterOutOfRange(f"{case.case_id} sweeps {case.parameter!r}, not {name!r}")
    values: List[int] = []
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            low, high = part.split("..", 1)
            values.extend(range(int(low), int(high) + 1))
        else:
            values.append(int(part))
    if not values:
        raise ParameterOutOfRange(f"range {text!r} names no values")
    return tuple(values)


def validate_values(case: TheoremCase, values: Sequence[int]) -> None:
    rejected = [v for v in values if not case.accepts(v)]
    if rejected:
        raise ParameterOutOfRange(f"{case.case_id} does not apply to {case.parameter} = {rejected}")


def run_case(case: TheoremCase, value: int) -> CaseOutcome:
    logger.info(f"Running {case.case_id} at {case.parameter}={value}")
    try:
        check = case.oracle(value)
    except Exception as e:
        logger.error(f"Error running {case.case_id} at {case.parameter}={value}: {str(e)}")
        check = Check(False, "", "error", f"{type(e).__name__}: {e}")
    if not check.passed:
        logger.warning(f"{case.case_id} at {case.parameter}={value} failed: {check.detail}")
    return CaseOutcome(
        case_id=case.case_id,
        parameter=case.parameter,
        value=value,
        passed=check.passed,
        expected=check.expected,
        observed=check.observed,
        detail=check.detail,
    )
