"""Faithfulness of an action: every irreducible of H turns up in some graded component."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from algebras.gradedAlgebra import GradedAlgebraSpec
from representations.catalog import irreducible_catalog
from representations.labels import RepLabel
from representations.representation import intertwiners

logger = logging.getLogger(__name__)


@dataclass
class FaithfulnessResult:
    faithful: bool
    first_degree: Dict[RepLabel, int] = field(default_factory=dict)
    missing: List[RepLabel] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.faithful


def faithfulness_check(A: GradedAlgebraSpec, D: int) -> FaithfulnessResult:
    """Search A_0..A_D for a copy of each catalog irreducible."""
    catalog = irreducible_catalog(A.hopf)
    first: Dict[RepLabel, int] = {}
    for d in range(D + 1):
        pending = [(label, rep) for label, rep in catalog if label not in first]
        if not pending:
            break
        component = A.degree_module(d)
        for label, rep in pending:
            if intertwiners(rep, component):
                first[label] = d
    missing = [label for label, _ in catalog if label not in first]
    if missing:
        logger.info(f"{A.name}: {len(missing)} irreducibles absent through degree {D}")
    return FaithfulnessResult(faithful=not missing, first_degree=first, missing=missing)
