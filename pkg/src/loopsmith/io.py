"""Cayley-table JSON files.

Schema: ``{"name": str, "order": n, "elements": [n labels], "table": [[...]]}``
with ``table[i][j]`` the index of ``e_i · e_j``. Chein loop files add
``"embedding": {"u_index": n, "group_order": n}``.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .chein import CheinEmbedding
from .errors import ValidationError
from .groups import FiniteGroup, validate_group
from .loops import FiniteLoop, validate_loop


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def cayley_record(L: FiniteLoop, name: str) -> dict:
    return {"name": name, **L.to_json()}


def chein_record(E: CheinEmbedding, name: str) -> dict:
    rec = cayley_record(E.loop, name)
    rec["embedding"] = {"u_index": E.u_index, "group_order": E.n}
    return rec


def content_hash(L: FiniteLoop) -> str:
    return hashlib.sha256(dumps(L.to_json()).encode()).hexdigest()


def read_record(path) -> dict:
    try:
        rec = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(rec, dict) or "table" not in rec:
        raise ValidationError(f"{path}: missing 'table'")
    if "order" in rec and rec["order"] != len(rec["table"]):
        raise ValidationError(f"{path}: 'order' is {rec['order']} but table has {len(rec['table'])} rows")
    return rec


def load_group(path) -> FiniteGroup:
    rec = read_record(path)
    return validate_group(rec["table"], rec.get("elements"))


def load_loop(path) -> FiniteLoop:
    rec = read_record(path)
    return validate_loop(rec["table"], rec.get("elements"))


def write_record(rec: dict, path) -> None:
    Path(path).write_text(dumps(rec))
