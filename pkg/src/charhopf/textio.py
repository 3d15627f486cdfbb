"""Text and JSON forms of partitions, SymFuncs and tensors.

Text form: ``3*s[2,1] - s[1,1,1]``; the unit is ``s[]`` and zero is ``0``.
The expression grammar accepts ``+``, ``-``, integer scalars written as
``k*s[...]`` and ``s[...]`` atoms, nothing else.

JSON form of a SymFunc::

    {"terms": [{"partition": [2, 1], "coeff": "3"}, ...]}

with coefficients as decimal strings and terms sorted by
(weight, reverse-lex partition).  Tensors use ``"partitions"`` (a list of
partitions, one per slot) plus ``"rank"`` and ``"orientation"``.
"""

from __future__ import annotations

import json
import re
from typing import Any, Dict

from .partitions import Partition, partition
from .symfunc import SymFunc
from .tensor import TensorSF


class ParseError(ValueError):
    pass


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def _format_terms(pairs) -> str:
    pieces = []
    for body, c in pairs:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        txt = body if a == 1 else f"{a}*{body}"
        pieces.append((sign, txt))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, txt in pieces[1:]:
        out += f" {sign} {txt}"
    return out


def format_symfunc(f: SymFunc) -> str:
    return _format_terms(("s" + format_partition(lam), c) for lam, c in f.items())


def format_tensor(t: TensorSF) -> str:
    def body(key):
        parts = []
        for lam, o in zip(key, t.orientation):
            atom = "s" + format_partition(lam)
            parts.append(atom + "*" if o == "dual" else atom)
        return "⊗".join(parts)

    return _format_terms((body(k), c) for k, c in t.items())


_PART_RE = re.compile(r"^\s*\[?\s*(\d+(?:\s*,\s*\d+)*)?\s*\]?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[2,1]``, ``2,1``, ``2 1`` or ``[]``."""
    cleaned = text.strip()
    if not cleaned.startswith("[") and " " in cleaned and "," not in cleaned:
        cleaned = ",".join(cleaned.split())
    m = _PART_RE.match(cleaned)
    if not m:
        raise ParseError(f"not a partition: {text!r}")
    body = m.group(1)
    parts = [int(x) for x in body.split(",")] if body else []
    try:
        return partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<atom>s\s*\[[^\]]*\])|(?P<op>[+\-*]))")


def parse_symfunc(text: str) -> SymFunc:
    """Parse a term expression like ``s[2,1] + 2*s[1] - s[]``.

    A bare bracketed partition such as ``[2]`` is read as s_[2].
    """
    stripped = text.strip()
    if stripped.startswith("["):
        return SymFunc.schur(parse_partition(stripped))
    if stripped == "0":
        return SymFunc.zero()
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("atom"):
            atom = m.group("atom")
            tokens.append(("atom", parse_partition(atom[atom.index("["):])))
        else:
            tokens.append(("op", m.group("op")))
    if not tokens:
        raise ParseError("empty expression")

    terms: Dict[Partition, int] = {}
    i = 0
    expect_term = True
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError("dangling operator")
        kind, val = tokens[i]
        if kind == "num":
            if i + 2 < len(tokens) and tokens[i + 1] == ("op", "*") and tokens[i + 2][0] == "atom":
                coeff, lam = val, tokens[i + 2][1]
                i += 3
            else:
                raise ParseError("integer scalars must multiply an s[...] atom")
        elif kind == "atom":
            coeff, lam = 1, val
            i += 1
        else:
            raise ParseError(f"unexpected operator {val!r}")
        terms[lam] = terms.get(lam, 0) + sign * coeff
        expect_term = False
        if i < len(tokens):
            if tokens[i][0] != "op" or tokens[i][1] not in "+-":
                raise ParseError("terms must be separated by + or -")
            expect_term = True
    if expect_term:
        raise ParseError("dangling operator")
    return SymFunc(terms)


def symfunc_to_json(f: SymFunc) -> Dict[str, Any]:
    return {"terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in f.items()]}


def symfunc_from_json(obj: Dict[str, Any]) -> SymFunc:
    return SymFunc({partition(t["partition"]): int(t["coeff"]) for t in obj["terms"]})


def tensor_to_json(t: TensorSF) -> Dict[str, Any]:
    return {
        "rank": t.rank,
        "orientation": list(t.orientation),
        "terms": [
            {"partitions": [list(p) for p in key], "coeff": str(c)} for key, c in t.items()
        ],
    }


def tensor_from_json(obj: Dict[str, Any]) -> TensorSF:
    return TensorSF(
        obj["rank"],
        {tuple(partition(p) for p in t["partitions"]): int(t["coeff"]) for t in obj["terms"]},
        obj.get("orientation"),
    )


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)
