"""Decomposition of a module into catalog irreducibles by intertwiner spaces."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from cyclotomic.linalg import CycMatrix
from representations.catalog import irreducible_catalog
from representations.labels import RepLabel
from representations.representation import Representation, intertwiners
from utils.errors import CatalogIncomplete

logger = logging.getLogger(__name__)


@dataclass
class Decomposition:
    multiplicities: Counter = field(default_factory=Counter)
    witnesses: Dict[RepLabel, List[CycMatrix]] = field(default_factory=dict)

    def labels(self) -> List[RepLabel]:
        return sorted(self.multiplicities.elements())

    def total_dimension(self) -> int:
        return sum(label.dimension * mult for label, mult in self.multiplicities.items())


def multiplicity(label_rep: Representation, rep: Representation) -> int:
    return len(intertwiners(label_rep, rep))


def decompose(
    rep: Representation,
    catalog: Optional[Sequence[Tuple[RepLabel, Representation]]] = None,
) -> Decomposition:
    """Multiset of catalog labels with injective witnesses S -> rep for each copy."""
    if catalog is None:
        catalog = irreducible_catalog(rep.hopf)
    result = Decomposition()
    for label, irrep in catalog:
        maps = intertwiners(irrep, rep)
        if maps:
            result.multiplicities[label] = len(maps)
            result.witnesses[label] = maps
    total = result.total_dimension()
    if total != rep.dimension:
        logger.error(f"Error decomposing {rep!r}: summands cover {total} of {rep.dimension} dimensions")
        raise CatalogIncomplete(f"summands cover {total} of {rep.dimension} dimensions")
    return result
