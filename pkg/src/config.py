"""
Run configuration.

Precedence, lowest first: built-in defaults, the `[hooklab]` table of a TOML
file (--config or HOOKLAB_CONFIG), the HOOKLAB_THREADS / HOOKLAB_SEED /
HOOKLAB_TRIALS env vars, then command-line flags.
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Mapping, Optional, Tuple

import tomli
from sympy import QQ

from errors import ConfigError
from exact_arith import DEFAULT_BOUND, DEFAULT_RESAMPLE_BUDGET, DEFAULT_TRIALS
from log import debug
from report import FORMATS
from verifiers import DEFAULT_M, DEFAULT_TOL, DEFAULT_TRUNCATION, VerifyOptions

ENV_VARS = {
    "HOOKLAB_THREADS": "threads",
    "HOOKLAB_SEED": "seed",
    "HOOKLAB_TRIALS": "trials",
}


@dataclass(frozen=True)
class RunConfig:
    command: str = "verify"
    identity: Optional[str] = None
    identities: Tuple[str, ...] = ("all",)
    family: Optional[str] = None
    shape: Optional[str] = None
    perm: Optional[str] = None
    size: Optional[str] = None
    d: Optional[int] = None
    mode: Optional[str] = None
    trials: int = DEFAULT_TRIALS
    seed: int = 0  # random mode draws from Random(seed); unset means seed 0
    bound: int = DEFAULT_BOUND
    budget: int = DEFAULT_RESAMPLE_BUDGET
    truncation: int = DEFAULT_TRUNCATION
    M: int = DEFAULT_M
    tol: object = DEFAULT_TOL
    beta: object = None
    q: object = None
    max_size: int = 6
    threads: int = 1
    format: str = "json"
    output: Optional[str] = None
    timing: bool = False
    x: Optional[Tuple] = None
    y: Optional[Tuple] = None

    def __post_init__(self):
        if self.threads < 1:
            raise ConfigError(f"threads must be at least 1, got {self.threads}")
        if self.trials < 0:
            raise ConfigError(f"trials must be nonnegative, got {self.trials}")
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown output format {self.format!r}", {"formats": list(FORMATS)})

    def options(self, d: Optional[int] = None) -> VerifyOptions:
        """VerifyOptions for one verifier call; `d` overrides the configured d."""
        return VerifyOptions(d=self.d if d is None else d, mode=self.mode, trials=self.trials,
                             seed=self.seed, bound=self.bound, budget=self.budget,
                             truncation=self.truncation, M=self.M, tol=self.tol, beta=self.beta,
                             q=self.q, timing=self.timing)


_INT_KEYS = {"d", "trials", "seed", "bound", "budget", "truncation", "M", "max_size", "threads"}
_RATIONAL_KEYS = {"tol", "beta", "q"}


def parse_rational(text) -> object:
    """"3", "-1/8" or an int, as an exact rational."""
    if isinstance(text, int):
        return QQ(text)
    try:
        if "/" in str(text):
            p, q = str(text).split("/", 1)
            return QQ(int(p), int(q))
        return QQ(int(str(text)))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"Not an exact rational: {text!r}") from None


def parse_rationals(text: str) -> Tuple:
    return tuple(parse_rational(v) for v in text.split(",") if v.strip())


def _coerce(key: str, value, source: str):
    if key in _INT_KEYS:
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{source}: {key} must be an integer, got {value!r}") from None
    if key in _RATIONAL_KEYS:
        return parse_rational(value)
    if key == "identities":
        return tuple(value) if isinstance(value, (list, tuple)) else tuple(str(value).split(","))
    if key in ("x", "y") and isinstance(value, str):
        return parse_rationals(value)
    if key == "timing":
        return bool(value)
    return value


def _apply(config: RunConfig, values: Mapping, source: str) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    updates = {}
    for key, value in values.items():
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigError(f"{source}: unknown setting {key!r}")
        if value is not None:
            updates[key] = _coerce(key, value, source)
    if updates:
        debug(f"config from {source}: {sorted(updates)}")
    return replace(config, **updates)


def load_file(path: str) -> Dict:
    try:
        with open(path, "rb") as f:
            data = tomli.load(f)
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}") from None
    except tomli.TOMLDecodeError as e:
        raise ConfigError(f"Malformed config file {path}: {e}") from None
    table = data.get("hooklab", {})
    if not isinstance(table, dict):
        raise ConfigError(f"{path}: [hooklab] must be a table")
    return table


def env_values(environ: Optional[Mapping[str, str]] = None) -> Dict:
    environ = os.environ if environ is None else environ
    return {key: environ[var] for var, key in ENV_VARS.items() if environ.get(var)}


def build_config(flags: Mapping, config_path: Optional[str] = None,
                 environ: Optional[Mapping[str, str]] = None) -> RunConfig:
    """Layer defaults, file, env and flags into one RunConfig."""
    environ = os.environ if environ is None else environ
    config = RunConfig()
    path = config_path or environ.get("HOOKLAB_CONFIG")
    if path:
        config = _apply(config, load_file(path), path)
    config = _apply(config, env_values(environ), "environment")
    return _apply(config, flags, "command line")
