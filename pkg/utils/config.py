import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

load_dotenv()


class EngineSettings(BaseModel):
    """
    Runtime knobs read from the environment (or a .env file).

    Parameters:
    -----------
    max_degree : int or None
        HOPF_MAX_DEGREE; when set it replaces the default bound 2*dim(H) + 2
    log_level : str
        HOPF_LOG_LEVEL, one of the standard logging level names
    report_dir : str
        HOPF_REPORT_DIR, directory used for --out files given without a directory
    """
    max_degree: Optional[int] = Field(default=None, ge=1)
    log_level: str = "INFO"
    report_dir: str = "."

    @classmethod
    def from_env(cls) -> "EngineSettings":
        raw_degree = os.getenv("HOPF_MAX_DEGREE")
        try:
            return cls(
                max_degree=int(raw_degree) if raw_degree else None,
                log_level=os.getenv("HOPF_LOG_LEVEL", "INFO").upper(),
                report_dir=os.getenv("HOPF_REPORT_DIR", "."),
            )
        except (ValueError, ValidationError) as e:
            logger.error(f"Error reading engine settings: {e}")
            raise ParameterOutOfRange(f"HOPF_MAX_DEGREE={raw_degree!r}") from e

    def degree_bound(self, hopf_dimension: int) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return 2 * hopf_dimension + 2
