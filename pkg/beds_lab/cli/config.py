"""Line-oriented scenario config: one ``[kind]`` header followed by ``key = value`` lines.

``seed`` and ``out_dir`` sit in the section with the kind's own keys. Lists are
comma separated. Lines starting with ``#`` or ``;`` are comments.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import BaseModel, ValidationError

from ..utils.errors import ConfigError, ConfigIssue
from ..utils.logger import get_logger
from ..utils.settings import get_settings
from .schemas import KIND_MODELS

logger = get_logger("config")

_HEADER = re.compile(r"^\[\s*([A-Za-z_][\w-]*)\s*\]$")
_KEY_IN_MESSAGE = re.compile(r"^(?:Value error, )?([A-Za-z_]\w*):")
_RESERVED = ("seed", "out_dir")


@dataclass(frozen=True)
class ScenarioConfig:
    kind: str
    seed: int
    out_dir: str
    params: BaseModel

    def echo(self) -> dict:
        return {"kind": self.kind, "seed": self.seed, "out_dir": self.out_dir, **self.params.model_dump()}


def _issues_from_validation(err: ValidationError, lines: Dict[str, int], header_line: int) -> List[ConfigIssue]:
    issues = []
    for e in err.errors():
        key = str(e["loc"][0]) if e["loc"] else None
        msg = e["msg"]
        if key is None:
            # model-level rules name their key at the front of the message
            m = _KEY_IN_MESSAGE.match(msg)
            key = m.group(1) if m else None
        if e["type"] == "missing":
            msg = "missing required key"
        elif e["type"] == "extra_forbidden":
            msg = "unknown key"
        elif msg.startswith("Value error, "):
            msg = msg[len("Value error, "):]
        line = lines.get(key, header_line) if key else header_line
        issues.append(ConfigIssue(line=line, key=key, message=msg))
    return issues


def _scan(text: str) -> Tuple[str, int, Dict[str, str], Dict[str, int], List[ConfigIssue]]:
    kind, header_line = None, None
    values: Dict[str, str] = {}
    lines: Dict[str, int] = {}
    issues: List[ConfigIssue] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#;":
            continue
        header = _HEADER.match(line)
        if header:
            if kind is not None:
                issues.append(ConfigIssue(lineno, None, f"second section header (first on line {header_line})"))
                continue
            kind, header_line = header.group(1), lineno
            if kind not in KIND_MODELS:
                issues.append(ConfigIssue(lineno, "kind", f"unknown kind {kind!r}; expected one of {sorted(KIND_MODELS)}"))
            continue
        if "=" not in line:
            issues.append(ConfigIssue(lineno, None, f"expected 'key = value', got {line!r}"))
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if kind is None:
            issues.append(ConfigIssue(lineno, key, "key appears before the [kind] header"))
            continue
        if key in values:
            issues.append(ConfigIssue(lineno, key, f"duplicate key (lines {lines[key]} and {lineno})"))
            continue
        values[key] = value
        lines[key] = lineno

    if kind is None:
        issues.append(ConfigIssue(None, "kind", "missing [kind] section header"))
    return kind, header_line, values, lines, issues


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate a scenario config, reporting every issue found at once."""
    kind, header_line, values, lines, issues = _scan(text)

    seed = 0
    if "seed" in values:
        try:
            seed = int(values.pop("seed"))
        except ValueError:
            issues.append(ConfigIssue(lines["seed"], "seed", "seed must be an integer"))
    out_dir = values.pop("out_dir", None)

    params = None
    model = KIND_MODELS.get(kind)
    if model is not None:
        try:
            params = model.model_validate(values)
        except ValidationError as e:
            issues.extend(_issues_from_validation(e, lines, header_line))

    if issues:
        issues.sort(key=lambda i: (i.line is None, i.line or 0))
        logger.warning(f"❌ Config rejected with {len(issues)} issue(s)")
        raise ConfigError(issues)

    if out_dir is None:
        out_dir = str(Path(get_settings().default_out_dir) / kind)
    return ScenarioConfig(kind=kind, seed=seed, out_dir=out_dir, params=params)


def _render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ", ".join(_render_value(x) for x in v)
    return str(v)


def render_config(cfg: ScenarioConfig) -> str:
    """Inverse of ``parse_config`` on valid configs."""
    out = [f"[{cfg.kind}]", f"seed = {cfg.seed}", f"out_dir = {cfg.out_dir}"]
    for name in type(cfg.params).model_fields:
        value = getattr(cfg.params, name)
        if value is None:
            continue
        out.append(f"{name} = {_render_value(value)}")
    return "\n".join(out) + "\n"


def load_config(path) -> Tuple[ScenarioConfig, str]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_config(text), text
