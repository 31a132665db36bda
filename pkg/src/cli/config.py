"""
Solver configuration from the environment and experiment profiles.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DEFAULT_PROFILE = Path("profiles") / "default.json"


def _env_bool(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else None


class Settings(BaseModel):
    """Solver settings; CLI flags and profile entries override these."""

    timeout_s: float = Field(default=60.0, gt=0, description="Wall-clock budget per instance")
    cache_bytes: int = Field(default=1 << 30, gt=0, description="Transposition table capacity")
    node_budget: Optional[int] = Field(default=None, gt=0, description="Optional node budget per instance")
    streamliner_fraction: float = Field(default=0.1, ge=0, le=1, description="Budget share for phase 1")
    jobs: int = Field(default=1, ge=1, description="Batch parallelism")
    log_level: str = Field(default="INFO", description="Root log level")
    debug: bool = Field(default=False, description="Check apply/undo round trips during search")
    progress_every: int = Field(default=100, ge=1, description="Batch progress log interval")
    games_dir: str = Field(default="games", description="Where bare game names are looked up")

    @classmethod
    def from_env(cls, load: bool = True) -> "Settings":
        """
        Read settings from SOLVER_* environment variables.

        Args:
            load (bool): load a .env file from the working directory first

        Returns:
            Settings: the environment settings
        """
        if load:
            load_dotenv()
        return cls(
            timeout_s=float(os.getenv("SOLVER_TIMEOUT_S", "60")),
            cache_bytes=int(os.getenv("SOLVER_CACHE_BYTES", str(1 << 30))),
            node_budget=_env_int("SOLVER_NODE_BUDGET"),
            streamliner_fraction=float(os.getenv("SOLVER_STREAMLINER_FRACTION", "0.1")),
            jobs=_env_int("SOLVER_JOBS") or os.cpu_count() or 1,
            log_level=os.getenv("SOLVER_LOG_LEVEL", "INFO").upper(),
            debug=_env_bool("SOLVER_DEBUG"),
            progress_every=int(os.getenv("SOLVER_PROGRESS_EVERY", "100")),
            games_dir=os.getenv("SOLVER_GAMES_DIR", "games"),
        )

    def with_profile(self, entry: Dict[str, Any]) -> "Settings":
        """Settings with a profile entry's timeout_s, cache_bytes and node_budget applied."""
        known = {key: entry[key] for key in ("timeout_s", "cache_bytes", "node_budget") if key in entry}
        return self.model_copy(update=known)


def load_profile(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """
    Load an experiment profile keyed by game name.

    A missing default profile gives an empty mapping; a missing explicit
    profile is an error.
    """
    target = Path(path) if path else DEFAULT_PROFILE
    if not target.exists():
        if path:
            raise FileNotFoundError(f"Profile not found: {target}")
        return {}
    try:
        with open(target, "r") as f:
            profile = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Error reading profile {target}: {str(e)}")
        raise
    if not isinstance(profile, dict):
        raise ValueError(f"Profile {target} must be a JSON object keyed by game name")
    return profile


def resolve_rules_path(rules: str, games_dir: str = "games") -> Path:
    """A rules argument as a path: an existing file, or a game name under games_dir."""
    path = Path(rules)
    if path.exists():
        return path
    candidate = Path(games_dir) / (rules if rules.endswith(".json") else f"{rules}.json")
    if candidate.exists():
        return candidate
    raise FileNotFoundError(f"Rules file not found: {rules}")
