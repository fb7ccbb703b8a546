from dataclasses import dataclass, field
from typing import Any, Dict, List

import pandas as pd


@dataclass
class ScenarioPlan:
    kind: str
    steps: List[str]
    out_dir: str


@dataclass
class ScenarioResult:
    """What a runner hands back before anything touches the disk."""

    frames: Dict[str, pd.DataFrame] = field(default_factory=dict)
    texts: Dict[str, str] = field(default_factory=dict)
    metrics: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)


@dataclass
class WrittenArtifacts:
    paths: List[str]
    elapsed_sec: float
    error: str = None
