"""
Runtime Settings

Read from the environment (and a ``.env`` file, loaded by the entry point);
command-line flags override them.
"""

import logging
import os
from typing import Literal

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Process-wide defaults for the command-line driver"""

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    jobs: int = Field(default=1, ge=1)
    engine: Literal["auto", "exact", "quotient", "both"] = "auto"
    timings: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from QFACTORS_* environment variables

        Raises:
            pydantic.ValidationError: If a variable holds an invalid value
        """
        values = {
            "log_level": os.environ.get("QFACTORS_LOG_LEVEL", "INFO").upper(),
            "jobs": os.environ.get("QFACTORS_JOBS", "1"),
            "engine": os.environ.get("QFACTORS_ENGINE", "auto").lower(),
            "timings": os.environ.get("QFACTORS_TIMINGS", "false"),
        }
        return cls.model_validate(values)
