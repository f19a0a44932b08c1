import logging
import os
from typing import Any, Optional

import numpy as np
import orjson
from pydantic import BaseModel

from cyclotomic.field import CycNum
from cyclotomic.linalg import CycMatrix
from representations.labels import RepLabel

logger = logging.getLogger(__name__)

OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS


def _default(obj: Any):
    if isinstance(obj, (CycNum, CycMatrix)):
        return obj.to_json()
    if isinstance(obj, RepLabel):
        return obj.text()
    if isinstance(obj, BaseModel):
        return obj.model_dump(by_alias=True)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(document: Any) -> bytes:
    return orjson.dumps(document, default=_default, option=OPTIONS)


def write_document(document: Any, path: str, report_dir: Optional[str] = None) -> str:
    """Write a JSON document; bare file names land in report_dir."""
    if report_dir and not os.path.dirname(path):
        path = os.path.join(report_dir, path)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as handle:
        handle.write(dumps(document))
    logger.info(f"Wrote {path}")
    return path


def loads(data: bytes | str) -> Any:
    return orjson.loads(data)
