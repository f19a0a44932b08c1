"""
Invariants of Ore extensions: comparison with the invariants of the base, and the
t-parity of invariants for the A_{4m} (m even) algebras.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from cyclotomic.linalg import CycMatrix
from cyclotomic.sparse import SparseVec, sparse_kernel
from algebras.gradedAlgebra import GradedAlgebraSpec
from algebras.oreExtension import ore_extend
from invariants.fixedRing import fixed_subspace
from representations.labels import RepLabel, trivial_label
from representations.representation import intertwiners, tensor_power
from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

T = 2


def t_degree(word) -> int:
    return sum(1 for x in word if x == T)


def _require_ore(A: GradedAlgebraSpec) -> None:
    if A.ore is None:
        raise ParameterOutOfRange(f"{A.name} is not an Ore extension")


def bigraded_fixed_dimensions(A: GradedAlgebraSpec, D: int) -> Dict[Tuple[int, int], int]:
    """dim of fixed vectors in A_d spanned by monomials with t-degree k, keyed (d, k)."""
    _require_ore(A)
    H = A.hopf
    out: Dict[Tuple[int, int], int] = {}
    for d in range(D + 1):
        basis = A.degree_basis(d)
        by_k: Dict[int, List[int]] = {}
        for idx, word in enumerate(basis.monomials):
            by_k.setdefault(t_degree(word), []).append(idx)
        for k, columns in sorted(by_k.items()):
            local = {c: pos for pos, c in enumerate(columns)}
            rows: List[SparseVec] = []
            for g in range(H.ngens):
                eps = H.counit(g)
                cols = A.action_columns(g, d)
                block: Dict[int, SparseVec] = {}
                for c in columns:
                    for r, value in cols[c].items():
                        if r not in local:
                            raise ParameterOutOfRange(f"{A.name}: action does not preserve t-degree")
                        block.setdefault(local[r], {})[local[c]] = value
                for pos in range(len(columns)):
                    row = block.setdefault(pos, {})
                    updated = row[pos] - eps if pos in row else -eps
                    if updated:
                        row[pos] = updated
                    else:
                        row.pop(pos, None)
                rows.extend(r for r in block.values() if r)
            out[(d, k)] = len(sparse_kernel(rows, len(columns), A.conductor))
    return out


def ore_invariants_check(base: GradedAlgebraSpec, sigma: CycMatrix, D: int, t_label: Optional[RepLabel] = None) -> bool:
    """
    For t trivial (the default), the invariants of base[t; sigma] in degree d must have
    dimension sum_k dim (base^H)_{d-k}.
    """
    if t_label is None:
        t_label = trivial_label(base.hopf.family, base.hopf.params)
    extended = ore_extend(base, sigma, t_label, strict=True)
    table = ore_fixed_comparison(base, extended, D)
    bad = [row for row in table if row[1] != row[2]]
    if bad:
        d, got, want = bad[0]
        logger.warning(f"{extended.name}: {got} invariants in degree {d}, base predicts {want}")
    return not bad


def ore_fixed_comparison(base: GradedAlgebraSpec, extended: GradedAlgebraSpec, D: int) -> List[Tuple[int, int, int]]:
    base_dims = [len(fixed_subspace(base, d)) for d in range(D + 1)]
    rows = []
    for d in range(D + 1):
        rows.append((d, len(fixed_subspace(extended, d)), sum(base_dims[: d + 1])))
    return rows


@dataclass
class ParityCheck:
    even_only: bool
    odd_summands: List[Tuple[int, int]] = field(default_factory=list)
    odd_fixed: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.even_only and not self.odd_summands


def odd_t_power_check(A: GradedAlgebraSpec, D: int) -> ParityCheck:
    """
    Every invariant up to degree D uses only even powers of t, and no odd tensor power
    of the t-module occurs as a summand of a base component (d, k) with d + k <= D.
    """
    _require_ore(A)
    dims = bigraded_fixed_dimensions(A, D)
    odd_fixed = [(d, k) for (d, k), n in sorted(dims.items()) if k % 2 and n]
    base = A.ore.base
    odd_summands = []
    for k in range(1, D + 1, 2):
        source = tensor_power(A.ore.t_rep, k)
        for d in range(D - k + 1):
            if intertwiners(source, base.degree_module(d)):
                odd_summands.append((d, k))
    if odd_fixed:
        logger.warning(f"{A.name}: invariants with odd t-degree at {odd_fixed[:3]}")
    return ParityCheck(even_only=not odd_fixed, odd_summands=odd_summands, odd_fixed=odd_fixed)
