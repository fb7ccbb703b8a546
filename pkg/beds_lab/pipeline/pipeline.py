import json
import pathlib
import time
from datetime import datetime, timezone
from typing import List, Optional

from ..cli.config import ScenarioConfig, render_config
from ..cli.schemas import ErrorEntry, RunReport
from ..executors.csv_writer import emit_frame, write_text
from ..executors.runners import RUNNERS
from ..utils.audit import log_run
from ..utils.cache import config_hash
from ..utils.errors import BedsLabError
from ..utils.logger import get_logger, log_event
from .nodes import ScenarioPlan, ScenarioResult, WrittenArtifacts

REPORT_NAME = "report.json"

# numeric failures and anything unexpected share the numeric exit status
UNEXPECTED_EXIT_CODE = 3


def plan_scenario(cfg: ScenarioConfig) -> ScenarioPlan:
    return ScenarioPlan(kind=cfg.kind, steps=["run", "write_artifacts", "report"], out_dir=cfg.out_dir)


def execute_scenario(cfg: ScenarioConfig) -> ScenarioResult:
    return RUNNERS[cfg.kind](cfg.params, cfg.seed)


def write_artifacts(result: ScenarioResult, out_dir, written: List[str]) -> WrittenArtifacts:
    """Persist frames then texts; ``written`` collects names as they land on disk."""
    start = time.perf_counter()
    out = pathlib.Path(out_dir)
    for name, frame in result.frames.items():
        emit_frame(frame, out / name)
        written.append(name)
    for name, text in result.texts.items():
        write_text(text, out / name)
        written.append(name)
    return WrittenArtifacts(paths=list(written), elapsed_sec=round(time.perf_counter() - start, 4))


def _error_entry(cfg: ScenarioConfig, e: Exception) -> ErrorEntry:
    context = {"kind": cfg.kind, "seed": cfg.seed}
    if isinstance(e, BedsLabError):
        context.update(e.context())
        code = e.exit_code
    else:
        code = UNEXPECTED_EXIT_CODE
    return ErrorEntry(type=type(e).__name__, message=str(e), exit_code=code, context=context)


def write_report(report: RunReport, out_dir) -> pathlib.Path:
    payload = json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"
    return write_text(payload, pathlib.Path(out_dir) / REPORT_NAME)


def run_scenario(cfg: ScenarioConfig, config_text: Optional[str] = None) -> RunReport:
    """Run one scenario end to end and write its artifacts plus report.json.

    Errors raised by the scenario are recorded in the report instead of
    propagating; only a failure to write report.json itself escapes.
    """
    logger = get_logger("pipeline")
    plan = plan_scenario(cfg)
    logger.info(f"🎯 Starting {plan.kind} scenario, seed={cfg.seed}, out_dir={plan.out_dir}")

    start = time.perf_counter()
    written: List[str] = []
    result = ScenarioResult()
    error = None
    try:
        logger.info(f"⚡ Running {plan.kind}")
        result = execute_scenario(cfg)
        logger.info(f"📊 {len(result.metrics)} metrics, {len(result.frames) + len(result.texts)} artifacts")
        write_artifacts(result, plan.out_dir, written)
    except BedsLabError as e:
        logger.error(f"❌ {plan.kind} failed: {type(e).__name__}: {e}")
        error = _error_entry(cfg, e)
    except Exception as e:
        logger.exception(f"❌ {plan.kind} failed unexpectedly: {e}")
        error = _error_entry(cfg, e)

    wall = time.perf_counter() - start
    report = RunReport(
        kind=cfg.kind,
        status="ok" if error is None else "error",
        seed=cfg.seed,
        config=cfg.echo(),
        metrics=result.metrics if error is None else {},
        artifacts=[name for name in written if (pathlib.Path(plan.out_dir) / name).exists()],
        notes=result.notes,
        wall_time_s=wall,
        created_at=datetime.now(timezone.utc).isoformat(),
        error=error,
    )
    write_report(report, plan.out_dir)
    logger.info(f"✅ Report written to {pathlib.Path(plan.out_dir) / REPORT_NAME} ({report.status})")

    log_event(cfg.kind, cfg.seed, report.status, wall_time_s=round(wall, 4), **report.metrics)
    log_run(
        cfg.kind, cfg.seed, report.status, wall, plan.out_dir,
        config_hash(config_text if config_text is not None else render_config(cfg)),
    )
    return report
