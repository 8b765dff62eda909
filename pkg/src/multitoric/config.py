"""JSON configuration files describing a triple ``B`` with optional curvature data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exprparse import ParseError, ScalarFn
from .triples import GRID_MARGIN, MatrixFn


class ConfigError(ValueError):
    pass


@dataclass
class Extension:
    kind: str
    m: int = 1
    n: int = 1


@dataclass
class TripleConfig:
    domain: tuple[float, float]
    B: MatrixFn
    C: MatrixFn | None = None
    S: MatrixFn | None = None
    D: list[list[Fraction]] | None = None
    extension: Extension | None = None
    bracket: tuple[float, float] | None = None
    raw: bytes = b""

    @property
    def scan_bracket(self) -> tuple[float, float]:
        if self.bracket is not None:
            return self.bracket
        lo, hi = self.domain
        return lo + GRID_MARGIN, hi - GRID_MARGIN


def _matrix(data, name: str, domain) -> MatrixFn:
    if not (isinstance(data, list) and len(data) == 3 and all(isinstance(r, list) and len(r) == 3 for r in data)):
        raise ConfigError(f"{name}: expected 3 rows of 3 expression strings")
    rows = []
    for p, row in enumerate(data):
        out = []
        for i, src in enumerate(row):
            where = f"{name}[{p}][{i}]"
            if not isinstance(src, str):
                raise ConfigError(f"{where}: expected an expression string, got {type(src).__name__}")
            try:
                out.append(ScalarFn(src))
            except ParseError as exc:
                raise ConfigError(f"{where}: {exc}") from None
        rows.append(out)
    return MatrixFn(rows, domain)


def _pair(data, name: str) -> tuple[float, float]:
    if not (isinstance(data, list) and len(data) == 2 and all(isinstance(x, (int, float)) for x in data)):
        raise ConfigError(f"{name}: expected [t_min, t_max]")
    lo, hi = float(data[0]), float(data[1])
    if not lo < hi:
        raise ConfigError(f"{name}: need t_min < t_max")
    return lo, hi


def parse_config(data: dict, raw: bytes = b"") -> TripleConfig:
    if not isinstance(data, dict):
        raise ConfigError("top level must be a JSON object")
    known = {"domain", "B", "C", "S", "D", "extension", "bracket", "description"}
    extra = set(data) - known
    if extra:
        raise ConfigError(f"unknown keys: {', '.join(sorted(extra))}")
    if "domain" not in data or "B" not in data:
        raise ConfigError("'domain' and 'B' are required")
    domain = _pair(data["domain"], "domain")
    cfg = TripleConfig(domain, _matrix(data["B"], "B", domain), raw=raw)
    if "C" in data:
        cfg.C = _matrix(data["C"], "C", domain)
    if "S" in data:
        cfg.S = _matrix(data["S"], "S", domain)
    if "D" in data:
        d = data["D"]
        if not (isinstance(d, list) and len(d) == 3 and all(isinstance(r, list) and len(r) == 3 for r in d)):
            raise ConfigError("D: expected a 3x3 array of rational constants")
        try:
            cfg.D = [[Fraction(str(x)) for x in row] for row in d]
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"D: {exc}") from None
    if cfg.C is not None and (cfg.S is not None or cfg.D is not None):
        raise ConfigError("give either C or (S, D), not both")
    if (cfg.S is None) != (cfg.D is None) and cfg.C is None:
        if cfg.S is None:
            raise ConfigError("D given without S")
        cfg.D = [[Fraction(0)] * 3 for _ in range(3)]
    if "extension" in data:
        ext = data["extension"]
        if not isinstance(ext, dict) or ext.get("kind") not in ("su2", "circle"):
            raise ConfigError("extension.kind must be 'su2' or 'circle'")
        m, n = ext.get("m", 1), ext.get("n", 1)
        if not (isinstance(m, int) and isinstance(n, int) and m > 0 and n > 0):
            raise ConfigError("extension.m and extension.n must be positive integers")
        cfg.extension = Extension(ext["kind"], m, n)
    if "bracket" in data:
        cfg.bracket = _pair(data["bracket"], "bracket")
        if not (domain[0] <= cfg.bracket[0] and cfg.bracket[1] <= domain[1]):
            raise ConfigError("bracket must lie inside the domain")
    return cfg


def load_config(path) -> TripleConfig:
    raw = Path(path).read_bytes()
    try:
        data = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{path}: not UTF-8 ({exc})") from None
    return parse_config(data, raw)
