"""Hypergraph edge-list files, experiment configs, and result tables.

Edge-list format (UTF-8, LF):

    # optional comment lines
    k n m
    v1 v2 ... vk        (m lines, 1-based, strictly increasing)

Config format: flat ``key=value`` lines, ``#`` comments allowed.  Known
keys: k, j, n (required), trials (default 50), seed (default 1), eps,
gamma, omega, s, c, delta (default 0.25), eps_grid (comma-separated
floats), ell_list (comma-separated ints), sample_cap (default 10^6).

CSV cells: reals printed with 17 significant digits so they round-trip
exactly; booleans as true/false; missing values empty.  JSON output
mirrors the CSV columns, one object per row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .analysis import RegimeParams
from .errors import ConfigError, ParseError
from .experiments import ExperimentConfig
from .models import Hypergraph
from .params import Params


def parse_hypergraph(text: str, j: int) -> Hypergraph:
    """Parse an edge-list file; j comes from the caller (the file stores
    only k, n, m).  Errors name the offending line."""
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: header must be 'k n m', got {line!r}")
            k, n, m = (_parse_int(tok, lineno) for tok in tokens)
            if m < 0:
                raise ParseError(f"line {lineno}: edge count m must be >= 0, got {m}")
            header = (k, n, m)
            continue
        k, n, _ = header
        if len(tokens) != k:
            raise ParseError(f"line {lineno}: expected {k} vertices, got {len(tokens)}")
        vertices = tuple(_parse_int(tok, lineno) for tok in tokens)
        prev = 0
        for v in vertices:
            if v <= prev:
                raise ParseError(
                    f"line {lineno}: vertices must be strictly increasing and >= 1"
                )
            prev = v
        if vertices[-1] > n:
            raise ParseError(f"line {lineno}: vertex {vertices[-1]} outside [1, {n}]")
        if vertices in seen:
            raise ParseError(
                f"line {lineno}: duplicate edge {vertices} (first seen on line {seen[vertices]})"
            )
        seen[vertices] = lineno
        edges.append(vertices)
    if header is None:
        raise ParseError("line 1: missing 'k n m' header")
    k, n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges but the body has {len(edges)}")
    return Hypergraph(Params(k, j, n), tuple(edges))


def write_hypergraph(h: Hypergraph) -> str:
    """Canonical serialization; edges come out sorted by edge rank."""
    lines = [f"{h.params.k} {h.params.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from None


@dataclass
class ResultTable:
    """Rectangular table of typed cells (int/float/bool/str, None for
    missing); one row per trial or per sweep point."""

    columns: list[str]
    rows: list[list[object]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if len(set(self.columns)) != len(self.columns):
            raise ConfigError(f"duplicate column names in {self.columns}")
        for row in self.rows:
            self._check_width(row)

    def _check_width(self, row: list[object]) -> None:
        if len(row) != len(self.columns):
            raise ConfigError(
                f"row width {len(row)} does not match {len(self.columns)} columns"
            )

    def add_row(self, *cells: object) -> None:
        row = list(cells)
        self._check_width(row)
        self.rows.append(row)


def _format_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    text = str(value)
    if any(ch in text for ch in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def write_csv(table: ResultTable) -> str:
    """CSV with a header row, cells formatted per the module contract."""
    lines = [",".join(_format_cell(c) for c in table.columns)]
    lines.extend(",".join(_format_cell(c) for c in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def write_json(table: ResultTable) -> str:
    """The same table as a JSON list, one object per row."""
    objs = [dict(zip(table.columns, row)) for row in table.rows]
    return json.dumps(objs, indent=2) + "\n"


_INT_KEYS = ("k", "j", "n", "trials", "seed", "s", "sample_cap")
_FLOAT_KEYS = ("eps", "gamma", "omega", "c", "delta")
_LIST_FLOAT_KEYS = ("eps_grid",)
_LIST_INT_KEYS = ("ell_list",)
_ALL_KEYS = frozenset(_INT_KEYS + _FLOAT_KEYS + _LIST_FLOAT_KEYS + _LIST_INT_KEYS)


def parse_config(text: str) -> ExperimentConfig:
    """Parse flat key=value experiment configuration."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = _convert(key, value, lineno)

    for required in ("k", "j", "n"):
        if required not in values:
            raise ConfigError(f"missing required key {required!r}")
    params = Params(values["k"], values["j"], values["n"])
    regime = RegimeParams(
        eps=values.get("eps"),
        gamma=values.get("gamma"),
        omega=values.get("omega"),
        s=values.get("s"),
        c=values.get("c"),
        delta=values.get("delta", 0.25),
    )
    return ExperimentConfig(
        params=params,
        regime=regime,
        trials=values.get("trials", 50),
        base_seed=values.get("seed", 1),
        eps_grid=tuple(values.get("eps_grid", ())),
        ell_list=tuple(values.get("ell_list", ())),
        sample_cap=values.get("sample_cap", 10**6),
    )


def _convert(key: str, value: str, lineno: int) -> object:
    try:
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _LIST_FLOAT_KEYS:
            return [float(tok) for tok in value.split(",") if tok.strip()]
        return [int(tok) for tok in value.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError(f"line {lineno}: bad value for key {key!r}: {value!r}") from None
