"""Degree-truncated S-function series M_π, L_π and the branching maps.

M_π = Σ_n h_n[s_π] and L_π = Σ_n (-1)^n e_n[s_π] are built independently
from plethysms; that they are mutually inverse is checked, not assumed.
Every operation taking a degree D is exact in grades ≤ D and drops the rest.

Setting ``CHARHOPF_CACHE_DIR`` persists computed series as JSON files there.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .partitions import Partition, partition
from .plethysm import plethysm
from .schur import skew
from .symfunc import SymFunc
from .textio import symfunc_from_json, symfunc_to_json

KINDS = ("M", "L")


@dataclass(frozen=True)
class TruncatedSeries:
    pi: Partition
    kind: str
    degree: int
    value: SymFunc


def _cache_file(pi: Partition, kind: str, degree: int) -> Path | None:
    root = os.environ.get("CHARHOPF_CACHE_DIR")
    if not root:
        return None
    name = "series_" + ("-".join(map(str, pi))) + f"_{kind}_{degree}.json"
    return Path(root) / name


@lru_cache(maxsize=None)
def _series_value(pi: Partition, kind: str, degree: int) -> SymFunc:
    path = _cache_file(pi, kind, degree)
    if path is not None and path.exists():
        return symfunc_from_json(json.loads(path.read_text(encoding="utf-8")))
    w = sum(pi)
    sp = SymFunc.schur(pi)
    out = SymFunc.one()
    n = 1
    while n * w <= degree:
        if kind == "M":
            out = out + plethysm(SymFunc.schur((n,)), sp)
        else:
            out = out + plethysm(SymFunc.schur((1,) * n), sp) * (-1) ** n
        n += 1
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(symfunc_to_json(out), sort_keys=True), encoding="utf-8")
        os.replace(tmp, path)
    return out


def series(pi: Iterable[int], kind: str, degree: int) -> TruncatedSeries:
    """M_π (kind "M") or L_π (kind "L") through grade ``degree``."""
    pi = partition(pi)
    if not pi:
        raise ValueError("series need a non-empty partition π")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return TruncatedSeries(pi, kind, degree, _series_value(pi, kind, degree))


def _check_degree(f: SymFunc, degree: int) -> None:
    if f.degree() > degree:
        raise ValueError(f"argument has grade {f.degree()} above the truncation degree {degree}")


def branch_to_subgroup(f: SymFunc, pi: Iterable[int], degree: int) -> SymFunc:
    """f / M_π: Char-GL to Char-H_π branching."""
    _check_degree(f, degree)
    return skew(f, series(pi, "M", degree).value)


def branch_to_group(f: SymFunc, pi: Iterable[int], degree: int) -> SymFunc:
    """f / L_π: the inverse branching back to Char-GL."""
    _check_degree(f, degree)
    return skew(f, series(pi, "L", degree).value)
