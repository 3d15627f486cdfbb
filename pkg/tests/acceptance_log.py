"""Shared store for the one-line acceptance verdicts."""

from __future__ import annotations

from typing import Dict, List

LINES: Dict[int, str] = {}


def verdict(number: int, title: str, failures: List[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:2d} [{status}] {title}"
    if failures:
        line += " :: " + "; ".join(failures)
    LINES[number] = line
    print(line)
    assert not failures, line
