import json
import logging
import sys
from datetime import datetime, timezone

from .settings import get_settings


def get_logger(name: str = "beds_lab"):
    # children of "beds_lab" share one switch for --quiet
    full = name if name.startswith("beds_lab") else f"beds_lab.{name}"
    logger = logging.getLogger(full)
    if not logger.handlers:
        logger.setLevel(get_settings().log_level)
        handler = logging.StreamHandler(sys.stdout)
        fmt = logging.Formatter('%(asctime)s | %(levelname)s | %(name)s | %(message)s')
        handler.setFormatter(fmt)
        logger.addHandler(handler)
        logger.propagate = False
    return logger


def set_quiet(quiet: bool = True):
    """Lower every beds_lab logger to WARNING (or restore the configured level)."""
    level = logging.WARNING if quiet else get_settings().log_level
    for name, obj in logging.root.manager.loggerDict.items():
        if name.startswith("beds_lab") and isinstance(obj, logging.Logger):
            obj.setLevel(level)


def log_event(kind: str, seed: int, status: str = "ok", **metrics):
    log_entry = {
        "kind": kind,
        "seed": seed,
        "status": status,
        "metrics": metrics,
        "ts": datetime.now(timezone.utc).isoformat(),
    }
    get_logger("events").info(json.dumps(log_entry, sort_keys=True, default=str))
    return log_entry
