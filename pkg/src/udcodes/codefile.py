"""JSON code-table files.

Schema version 1::

    {
      "schema_version": 1,
      "k": 3,                 # arity
      "signed": false,        # alphabet {0..k-1} (false) or {-(k-1)..k-1}
      "n": 4,                 # code length
      "T": 8,                 # number of users
      "constituents": [       # one list of integer words per user, in user order
        [[0,0,0,0],[1,1,1,1]],
        ...
      ],
      "trace": {...},         # optional construction trace
      "provenance": {...}     # optional: {"mode": "pow2", "m": 2} or
                              #           {"mode": "arbitrary", "profile": {...}}
    }

Words are integer arrays, never digit strings, so arities above 10 are
unambiguous. Words inside a constituent are written in lexicographic order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .codebook import MultiUserCode
from .construction import Trace, trace_from_dict

SCHEMA_VERSION = 1


class CodeFileError(ValueError):
    """Malformed or inconsistent code-table file."""


@dataclass(frozen=True)
class CodeFile:
    code: MultiUserCode
    trace: Optional[Trace] = None
    provenance: Optional[dict] = None


def to_dict(doc: CodeFile) -> dict:
    code = doc.code
    data = {
        "schema_version": SCHEMA_VERSION,
        "k": code.k,
        "signed": code.alphabet.signed,
        "n": code.n,
        "T": code.T,
        "constituents": [[list(w) for w in c.words] for c in code],
    }
    if doc.trace is not None:
        data["trace"] = doc.trace.to_dict()
    if doc.provenance is not None:
        data["provenance"] = doc.provenance
    return data


def dumps(doc: CodeFile) -> str:
    data = to_dict(doc)
    compact = lambda v: json.dumps(v, separators=(",", ":"))  # noqa: E731
    lines = ["{"]
    keys = list(data)
    for pos, key in enumerate(keys):
        tail = "," if pos < len(keys) - 1 else ""
        if key == "constituents":
            lines.append('  "constituents": [')
            cons = data[key]
            for i, c in enumerate(cons):
                lines.append("    " + compact(c) + ("," if i < len(cons) - 1 else ""))
            lines.append("  ]" + tail)
        else:
            lines.append(f"  {json.dumps(key)}: {compact(data[key])}{tail}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dict(data) -> CodeFile:
    if not isinstance(data, dict):
        raise CodeFileError("top level must be a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CodeFileError(f"unsupported schema_version {data.get('schema_version')!r}")
    try:
        k, n, T = int(data["k"]), int(data["n"]), int(data["T"])
        signed = bool(data.get("signed", False))
        cons = data["constituents"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFileError(f"missing or invalid field: {exc}") from None
    if not isinstance(cons, list) or len(cons) != T:
        raise CodeFileError(f"T={T} but {len(cons) if isinstance(cons, list) else '?'} constituents")
    for i, c in enumerate(cons):
        if not isinstance(c, list):
            raise CodeFileError(f"constituent {i + 1} is not a list")
        for w in c:
            if (not isinstance(w, list) or len(w) != n
                    or not all(isinstance(s, int) and not isinstance(s, bool) for s in w)):
                raise CodeFileError(f"constituent {i + 1}: every word must be {n} integers")
    try:
        code = MultiUserCode.from_words(cons, k, signed)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from None

    trace = None
    if data.get("trace") is not None:
        try:
            trace = trace_from_dict(data["trace"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CodeFileError(f"bad trace: {exc}") from None
        if (trace.length, trace.users, trace.arity) != (n, T, k) or signed:
            raise CodeFileError("trace does not describe a code of this shape")
    return CodeFile(code, trace, data.get("provenance"))


def loads(text: str) -> CodeFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"not valid JSON: {exc}") from None
    return from_dict(data)


def load(path) -> CodeFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc}") from None


def dump(doc: CodeFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
