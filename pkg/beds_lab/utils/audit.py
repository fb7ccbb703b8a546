import datetime
import sqlite3

from .logger import get_logger
from .settings import get_settings

logger = get_logger("audit")

_SCHEMA = (
    "CREATE TABLE IF NOT EXISTS runs("
    "kind TEXT, seed INTEGER, status TEXT, wall_time_s REAL, out_dir TEXT, config_hash TEXT, ts TEXT)"
)


def log_run(kind: str, seed: int, status: str, wall_time_s: float, out_dir: str, config_hash: str, db_path=None):
    """Append one scenario run to the sqlite audit trail, if one is configured.

    Failures to write are logged and swallowed; the audit trail never fails a run.
    """
    db_path = db_path or get_settings().audit_db
    if not db_path:
        return False
    ts = datetime.datetime.now(datetime.timezone.utc).isoformat()
    try:
        with sqlite3.connect(db_path) as conn:
            conn.execute(_SCHEMA)
            conn.execute(
                "INSERT INTO runs(kind, seed, status, wall_time_s, out_dir, config_hash, ts) VALUES (?, ?, ?, ?, ?, ?, ?)",
                (kind, int(seed), status, float(wall_time_s), str(out_dir), config_hash, ts),
            )
            conn.commit()
    except Exception as e:
        logger.warning(f"Audit log error: {e}")
        return False
    return True


def read_runs(db_path):
    with sqlite3.connect(db_path) as conn:
        conn.row_factory = sqlite3.Row
        rows = conn.execute("SELECT * FROM runs ORDER BY rowid").fetchall()
    return [dict(r) for r in rows]
