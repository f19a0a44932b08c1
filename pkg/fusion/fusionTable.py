"""
Grothendieck-ring structure constants computed from the catalog.

N[a, b, c] is the multiplicity of label c in a ⊗ b, stored as a numpy integer cube.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from hopf.presentation import HopfPresentation
from representations.catalog import irreducible_catalog
from representations.decompose import decompose
from representations.labels import RepLabel, trivial_label
from utils.errors import BijectionNotDimensionPreserving

logger = logging.getLogger(__name__)


class FusionTable:
    """
    Parameters:
    -----------
    labels : list of RepLabel
        ordered label list; the cube axes follow this order
    constants : np.ndarray
        integer array of shape (k, k, k)
    name : str
        algebra the table belongs to
    """

    def __init__(self, labels: List[RepLabel], constants: np.ndarray, name: str = "", unit: Optional[RepLabel] = None):
        self.labels = list(labels)
        self.constants = np.asarray(constants, dtype=np.int64)
        self.name = name
        self.dims = np.array([label.dimension for label in self.labels], dtype=np.int64)
        self._index = {label: i for i, label in enumerate(self.labels)}
        self.unit = unit

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: RepLabel) -> int:
        return self._index[label]

    def product(self, a: RepLabel, b: RepLabel) -> Counter:
        row = self.constants[self.index(a), self.index(b)]
        return Counter({self.labels[c]: int(v) for c, v in enumerate(row) if v})

    def product_text(self, a: RepLabel, b: RepLabel) -> str:
        parts = []
        for label, mult in sorted(self.product(a, b).items(), key=lambda item: self.index(item[0])):
            parts.append(str(label) if mult == 1 else f"{mult}{label}")
        return " + ".join(parts)

    def check_dimensions(self) -> bool:
        lhs = np.einsum("abc,c->ab", self.constants, self.dims)
        return bool(np.array_equal(lhs, np.outer(self.dims, self.dims)))

    def check_associativity(self) -> bool:
        left = np.einsum("abe,ecd->abcd", self.constants, self.constants)
        right = np.einsum("bce,aed->abcd", self.constants, self.constants)
        return bool(np.array_equal(left, right))

    def unit_label(self) -> Optional[RepLabel]:
        """A label acting as two-sided identity, preferring the declared trivial one."""
        k = len(self.labels)
        eye = np.eye(k, dtype=np.int64)
        candidates = ([self.unit] if self.unit in self._index else []) + self.labels
        for label in candidates:
            u = self.index(label)
            if np.array_equal(self.constants[u], eye) and np.array_equal(self.constants[:, u, :], eye):
                return label
        return None

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.constants, self.constants.transpose(1, 0, 2)))

    def to_frame(self) -> pd.DataFrame:
        names = [str(label) for label in self.labels]
        data = [[self.product_text(a, b) for b in self.labels] for a in self.labels]
        return pd.DataFrame(data, index=names, columns=names)

    def to_json(self) -> dict:
        return {
            "algebra": self.name,
            "labels": [str(label) for label in self.labels],
            "dimensions": [int(d) for d in self.dims],
            "structure_constants": self.constants.tolist(),
        }


def build_fusion_table(H: HopfPresentation) -> FusionTable:
    catalog = irreducible_catalog(H)
    labels = [label for label, _ in catalog]
    k = len(labels)
    cube = np.zeros((k, k, k), dtype=np.int64)
    index = {label: i for i, label in enumerate(labels)}
    for a, (_, rep_a) in enumerate(catalog):
        for b, (_, rep_b) in enumerate(catalog):
            dec = decompose(rep_a.tensor(rep_b), catalog)
            for label, mult in dec.multiplicities.items():
                cube[a, b, index[label]] = mult
    table = FusionTable(labels, cube, H.name, trivial_label(H.family, H.params))
    logger.info(f"Fusion table of {H.name}: {k} labels")
    return table


def is_commutative(table: FusionTable) -> bool:
    return table.is_commutative()


def compare_fusion_isomorphism(t1: FusionTable, t2: FusionTable, bijection: Dict[RepLabel, RepLabel]) -> bool:
    """True iff the bijection carries every structure constant of t1 to the matching one of t2."""
    if len(t1) != len(t2) or len(bijection) != len(t1) or len(set(bijection.values())) != len(t2):
        raise BijectionNotDimensionPreserving(f"{len(t1)} vs {len(t2)} labels, {len(bijection)} assigned")
    for a, b in bijection.items():
        if a.dimension != b.dimension:
            raise BijectionNotDimensionPreserving(f"{a} (dim {a.dimension}) -> {b} (dim {b.dimension})")
    perm = np.array([t2.index(bijection[label]) for label in t1.labels])
    transported = t2.constants[np.ix_(perm, perm, perm)]
    return bool(np.array_equal(t1.constants, transported))


def find_fusion_isomorphism(t1: FusionTable, t2: FusionTable) -> Optional[Dict[RepLabel, RepLabel]]:
    """Backtracking search for a dimension-preserving bijection that preserves all structure constants."""
    if len(t1) != len(t2) or sorted(t1.dims.tolist()) != sorted(t2.dims.tolist()):
        return None
    k = len(t1)
    N1, N2 = t1.constants, t2.constants
    assignment: List[int] = []
    used = [False] * k

    def consistent() -> bool:
        i = len(assignment) - 1
        img = assignment
        for a in range(i + 1):
            for b in range(i + 1):
                for c in range(i + 1):
                    if i not in (a, b, c):
                        continue
                    if N1[a, b, c] != N2[img[a], img[b], img[c]]:
                        return False
        return True

    def search() -> bool:
        i = len(assignment)
        if i == k:
            return True
        for j in range(k):
            if used[j] or t2.dims[j] != t1.dims[i]:
                continue
            used[j] = True
            assignment.append(j)
            if consistent() and search():
                return True
            assignment.pop()
            used[j] = False
        return False

    if not search():
        return None
    return {t1.labels[i]: t2.labels[j] for i, j in enumerate(assignment)}


def one_dimensional_group(table: FusionTable) -> Tuple[Dict[Tuple[RepLabel, RepLabel], RepLabel], bool]:
    """Multiplication of the invertible (one-dimensional) labels and whether it is abelian."""
    ones = [label for label in table.labels if label.dimension == 1]
    mult: Dict[Tuple[RepLabel, RepLabel], RepLabel] = {}
    for a in ones:
        for b in ones:
            (c, _), = table.product(a, b).items()
            mult[(a, b)] = c
    abelian = all(mult[(a, b)] == mult[(b, a)] for a in ones for b in ones)
    return mult, abelian
