"""Runtime configuration for the CLI and the library defaults.

Config values resolve in three layers: built-in defaults, then an optional
``key=value`` config file, then the ``PIPEFORGE_SEED`` environment variable
(seed only), then explicit CLI flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from pathlib import Path


@dataclass
class Config:
    """Knobs shared across commands; all sizes strictly positive."""

    embedding_dim: int = 256
    hidden_size: int = 32
    rounds: int = 2
    max_nodes: int = 16
    k_default: int = 5
    retry_budget: int = 50
    hash_seed: int = 0
    seed: int = 7
    workdir: Path = field(default_factory=lambda: Path("."))
    corpus_dir: Path | None = None
    model_file: Path | None = None
    index_file: Path | None = None
    registry_file: Path | None = None

    def __post_init__(self) -> None:
        for name in ("embedding_dim", "hidden_size", "rounds", "max_nodes",
                     "k_default", "retry_budget"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(f"config value {name} must be positive, got {value}")


_INT_KEYS = {"embedding_dim", "hidden_size", "rounds", "max_nodes",
             "k_default", "retry_budget", "hash_seed", "seed"}
_PATH_KEYS = {"workdir", "corpus_dir", "model_file", "index_file", "registry_file"}


def load_config(path: Path | None = None, env: dict[str, str] | None = None) -> Config:
    """Build a :class:`Config` from an optional key=value file plus environment.

    Unknown keys in the file raise ``ValueError`` so typos do not silently
    fall back to defaults. ``PIPEFORGE_SEED`` overrides the seed.
    """
    env = os.environ if env is None else env
    values: dict[str, object] = {}
    if path is not None:
        known = {f.name for f in fields(Config)}
        for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            if key in _INT_KEYS:
                values[key] = int(value)
            elif key in _PATH_KEYS:
                values[key] = Path(value)
            else:
                values[key] = value
    cfg = Config(**values)  # type: ignore[arg-type]
    if "PIPEFORGE_SEED" in env:
        cfg.seed = int(env["PIPEFORGE_SEED"])
    return cfg
