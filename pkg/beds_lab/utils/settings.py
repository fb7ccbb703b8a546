"""Process-level settings read from the environment (and an optional .env file)."""
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator


class Settings(BaseModel):
    log_level: str = Field(default="INFO")
    audit_db: Optional[str] = Field(default=None, description="sqlite path for the run audit trail")
    default_out_dir: str = Field(default="runs")

    @field_validator("log_level")
    @classmethod
    def _upper(cls, v: str) -> str:
        v = v.upper()
        if v not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return v


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv()
    return Settings(
        log_level=os.getenv("BEDS_LAB_LOG_LEVEL", "INFO"),
        audit_db=os.getenv("BEDS_LAB_AUDIT_DB") or None,
        default_out_dir=os.getenv("BEDS_LAB_DEFAULT_OUT_DIR", "runs"),
    )
