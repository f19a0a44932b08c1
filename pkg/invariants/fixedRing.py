"""
Fixed subspaces A_d^H, minimal homogeneous generators of A^H, and the Hilbert-series
certificate attached to them.
"""
from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, PrivateAttr
from tqdm import tqdm

from cyclotomic.field import CycNum
from cyclotomic.sparse import SparseEchelon, SparseVec, sparse_kernel
from algebras.gradedAlgebra import GradedAlgebraSpec
from utils.config import EngineSettings
from utils.errors import DegreeBoundTooSmall, ParameterOutOfRange

logger = logging.getLogger(__name__)

SCHEMA_ID = "hopf-reflections/1"

REGULAR = "regular-consistent"
NOT_REGULAR = "certified-not-regular"
NOT_FREE = "not-free"
INCONCLUSIVE = "inconclusive"


class GeneratorRecord(BaseModel):
    degree: int
    text: str
    coefficients: Dict[str, dict] = Field(default_factory=dict)


class InvariantReport(BaseModel):
    """
    Result of minimal_generators.

    Parameters:
    -----------
    algebra : str
        module algebra name, e.g. "Aminus"
    degrees : list of int
        generator degrees in the order they were found
    hilbert_prefix : list of int
        dim (A^H)_d for d = 0..max_degree
    certificate : str
        regular-consistent, certified-not-regular, not-free or inconclusive
    """
    schema_id: str = Field(default=SCHEMA_ID, alias="schema")
    algebra: str
    family: str
    hopf_parameters: Dict[str, int]
    parameters: Dict[str, Any] = Field(default_factory=dict)
    max_degree: int
    degrees: List[int] = Field(default_factory=list)
    generators: List[GeneratorRecord] = Field(default_factory=list)
    hilbert_prefix: List[int] = Field(default_factory=list)
    certificate: str = INCONCLUSIVE
    certificate_detail: str = ""
    product_of_degrees: int = 0
    dim_H: int = 0
    conjecture_product_holds: Optional[bool] = None
    inner_faithful: Optional[bool] = None
    faithful: Optional[bool] = None

    model_config = {"populate_by_name": True}

    _vectors: List[Tuple[int, SparseVec]] = PrivateAttr(default_factory=list)

    @property
    def generator_vectors(self) -> List[Tuple[int, SparseVec]]:
        return self._vectors

    def to_json(self) -> dict:
        return self.model_dump(by_alias=True)


def is_fixed(A: GradedAlgebraSpec, vec: SparseVec, d: int) -> bool:
    """h.f = eps(h) f for every generator h."""
    H = A.hopf
    for g in range(H.ngens):
        image = A.act(g, d, vec)
        eps = H.counit(g)
        expected = {k: eps * c for k, c in vec.items() if eps * c}
        if set(image) != set(expected) or any(image[k] != expected[k] for k in image):
            return False
    return True


def fixed_subspace(A: GradedAlgebraSpec, d: int) -> List[SparseVec]:
    """Kernel of the stacked maps (g - eps(g)) on A_d, one vector per free monomial."""
    H = A.hopf
    dim = A.degree_basis(d).dimension
    rows: List[SparseVec] = [dict() for _ in range(dim * H.ngens)]
    for g in range(H.ngens):
        eps = H.counit(g)
        for k, column in enumerate(A.action_columns(g, d)):
            for r, value in column.items():
                rows[g * dim + r][k] = value
            row = rows[g * dim + k]
            updated = row[k] - eps if k in row else -eps
            if updated:
                row[k] = updated
            else:
                row.pop(k, None)
    kernel = sparse_kernel([r for r in rows if r], dim, A.conductor)
    logger.debug(f"{A.name}: fixed subspace in degree {d} has dimension {len(kernel)} of {dim}")
    return kernel


def hilbert_prefix(A: GradedAlgebraSpec, D: int, invariant: bool = True) -> List[int]:
    """Graded dimensions of A^H (or of A itself) in degrees 0..D."""
    if D < 0:
        raise ParameterOutOfRange(f"degree bound {D} is negative")
    if not invariant:
        return A.hilbert_function(D)
    return [len(fixed_subspace(A, d)) for d in range(D + 1)]


def free_hilbert_prefix(degrees: List[int], D: int) -> List[int]:
    """Coefficients of prod 1/(1 - t^d) through t^D."""
    series = np.zeros(D + 1, dtype=np.int64)
    series[0] = 1
    for deg in degrees:
        for k in range(deg, D + 1):
            series[k] += series[k - deg]
    return series.tolist()


def certificate_for(degrees: List[int], prefix: List[int], gk: int) -> Tuple[str, str]:
    bound = 2 if gk == 2 else 3
    if len(degrees) > bound:
        return NOT_REGULAR, f"{len(degrees)} generators exceed the bound {bound} for GK dimension {gk}"
    if len(degrees) < gk:
        return INCONCLUSIVE, f"only {len(degrees)} generators found for GK dimension {gk}"
    expected = free_hilbert_prefix(degrees, len(prefix) - 1)
    if expected == list(prefix):
        return REGULAR, "Hilbert prefix equals prod 1/(1-t^d)"
    first = next(d for d, (a, b) in enumerate(zip(prefix, expected)) if a != b)
    return NOT_FREE, f"Hilbert mismatch at degree {first}: {prefix[first]} != {expected[first]}"


class InvariantFiltration:
    """Degree-by-degree span of products of already chosen invariant generators."""

    def __init__(self, A: GradedAlgebraSpec):
        self.A = A
        self.generators: List[Tuple[int, SparseVec]] = []
        self.spans: Dict[int, SparseEchelon] = {}
        zero_span = SparseEchelon(1)
        zero_span.add({0: CycNum.one(A.conductor)})
        self.spans[0] = zero_span

    def products(self, d: int) -> SparseEchelon:
        """Span in degree d of g * s, g a chosen generator, s in the span of degree d - deg g."""
        A = self.A
        echelon = SparseEchelon(A.degree_basis(d).dimension)
        for e, g_vec in self.generators:
            if e > d:
                continue
            lower = self.spans.get(d - e)
            if lower is None:
                continue
            for s in lower.basis():
                echelon.add(A.multiply(g_vec, e, s, d - e))
        return echelon

    def close_degree(self, d: int, candidates: List[SparseVec]) -> List[SparseVec]:
        """Add candidates missing from the product span; returns the new generators."""
        span = self.products(d)
        new = []
        for f in candidates:
            if span.add(f):
                new.append(f)
                self.generators.append((d, f))
        self.spans[d] = span
        return new


def _coefficients(A: GradedAlgebraSpec, vec: SparseVec, d: int) -> Dict[str, dict]:
    basis = A.degree_basis(d)
    return {A.word_text(basis.monomials[k]): c.to_json() for k, c in sorted(vec.items())}


def minimal_generators(A: GradedAlgebraSpec, D: Optional[int] = None, progress: bool = False) -> InvariantReport:
    """
    Minimal homogeneous generators of A^H through degree D.

    Parameters:
    -----------
    A : GradedAlgebraSpec
        module algebra
    D : int or None
        degree bound; defaults to EngineSettings.degree_bound(dim H)
    progress : bool
        show a tqdm bar over degrees
    """
    H = A.hopf
    if D is None:
        D = EngineSettings.from_env().degree_bound(H.dimension)
    if D < 2:
        raise ParameterOutOfRange(f"degree bound {D} < 2")
    filtration = InvariantFiltration(A)
    prefix = [1]
    records: List[GeneratorRecord] = []
    for d in tqdm(range(1, D + 1), desc=f"{A.name} invariants", disable=not progress):
        fixed = fixed_subspace(A, d)
        prefix.append(len(fixed))
        for f in filtration.close_degree(d, fixed):
            records.append(GeneratorRecord(degree=d, text=A.format(f, d), coefficients=_coefficients(A, f, d)))
            logger.info(f"{A.name}: new invariant generator in degree {d}")
    degrees = [d for d, _ in filtration.generators]
    if degrees:
        top = max(degrees)
        late = [d for d in degrees if d > D - top]
        if late:
            logger.error(f"Error computing invariants of {A.name}: generator in degree {late[0]} too close to D = {D}")
            raise DegreeBoundTooSmall(f"generator in degree {late[0]} with D = {D}; need D >= {late[0] + top}")
    certificate, detail = certificate_for(degrees, prefix, A.dim_v)
    product = int(np.prod(degrees)) if degrees else 0
    report = InvariantReport(
        algebra=A.name,
        family=H.family,
        hopf_parameters=dict(H.params),
        parameters={k: (v.to_json() if isinstance(v, CycNum) else v) for k, v in A.params.items()},
        max_degree=D,
        degrees=degrees,
        generators=records,
        hilbert_prefix=prefix,
        certificate=certificate,
        certificate_detail=detail,
        product_of_degrees=product,
        dim_H=H.dimension,
        conjecture_product_holds=(product == H.dimension) if certificate == REGULAR else None,
        inner_faithful=A.inner_faithful,
    )
    report._vectors = list(filtration.generators)
    logger.info(f"{A.name} over {H.name}: degrees {degrees}, {certificate}")
    return report
