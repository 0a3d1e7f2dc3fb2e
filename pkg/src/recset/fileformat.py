"""On-disk document format for recognizable sets.

One JSON object per automaton:

    {
      "format_version": 1,
      "base": 2,
      "state_count": 3,
      "initial": 0,
      "finals": [1],
      "transitions": [[0, 1, 1], [1, 0, 2], ...],   # [from, digit, to]
      "contains_zero": false
    }

Strict loading (the default) rejects unknown fields and automata accepting a
word with a leading zero; lenient loading tolerates unknown fields and repairs
leading-zero acceptance by intersecting with the canonical-word language.
"""

from __future__ import annotations

import json
from pathlib import Path

from .automata import Dfa, RecognizableSet, restrict_to_canonical
from .errors import ValidationError

FORMAT_VERSION = 1

_FIELDS = ("format_version", "base", "state_count", "initial",
           "finals", "transitions", "contains_zero")


def document_from_set(s: RecognizableSet) -> dict:
    """Plain-data document for a set; transitions sorted for determinism."""
    transitions = sorted((src, d, dst) for (src, d), dst in s.dfa.transitions.items())
    return {
        "format_version": FORMAT_VERSION,
        "base": s.base,
        "state_count": s.dfa.state_count,
        "initial": s.dfa.initial,
        "finals": sorted(s.dfa.finals),
        "transitions": [list(t) for t in transitions],
        "contains_zero": s.contains_zero,
    }


def _as_int(doc: dict, name: str) -> int:
    value = doc[name]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"field {name!r} must be an integer")
    return value


def set_from_document(doc, *, strict: bool = True) -> RecognizableSet:
    """Validate a document and build the in-memory set."""
    if not isinstance(doc, dict):
        raise ValidationError("automaton document must be a JSON object")
    missing = [f for f in _FIELDS if f not in doc]
    if missing:
        raise ValidationError(f"missing fields: {', '.join(missing)}")
    if strict:
        unknown = sorted(set(doc) - set(_FIELDS))
        if unknown:
            raise ValidationError(f"unknown fields: {', '.join(unknown)}")
    version = _as_int(doc, "format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format_version {version}, expected {FORMAT_VERSION}")
    base = _as_int(doc, "base")
    state_count = _as_int(doc, "state_count")
    initial = _as_int(doc, "initial")
    if not isinstance(doc["contains_zero"], bool):
        raise ValidationError("field 'contains_zero' must be a boolean")
    if not isinstance(doc["finals"], list):
        raise ValidationError("field 'finals' must be a list of state indices")
    finals = []
    for f in doc["finals"]:
        if not isinstance(f, int) or isinstance(f, bool):
            raise ValidationError("field 'finals' must contain integers only")
        finals.append(f)
    if not isinstance(doc["transitions"], list):
        raise ValidationError("field 'transitions' must be a list of [from, digit, to] triples")
    transitions: dict[tuple[int, int], int] = {}
    for i, triple in enumerate(doc["transitions"]):
        if (not isinstance(triple, list) or len(triple) != 3
                or any(not isinstance(x, int) or isinstance(x, bool) for x in triple)):
            raise ValidationError(f"transition #{i} must be an integer triple [from, digit, to]")
        src, digit, dst = triple
        if not 0 <= digit < base:
            raise ValidationError(f"transition #{i}: digit {digit} out of range for base {base}")
        if (src, digit) in transitions:
            raise ValidationError(f"duplicate transition for state {src}, digit {digit}")
        transitions[(src, digit)] = dst
    dfa = Dfa(base, state_count, initial, frozenset(finals), transitions)
    try:
        return RecognizableSet(dfa, doc["contains_zero"])
    except ValidationError:
        if strict:
            raise
        return RecognizableSet(restrict_to_canonical(dfa), doc["contains_zero"])


def dumps_automaton(s: RecognizableSet) -> str:
    """Deterministic text form: sorted keys, one field per line, inline lists."""
    doc = document_from_set(s)
    lines = ["{"]
    for i, key in enumerate(sorted(doc)):
        value = json.dumps(doc[key], separators=(",", ":"))
        comma = "," if i < len(doc) - 1 else ""
        lines.append(f'  "{key}": {value}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_automaton(text: str, *, strict: bool = True) -> RecognizableSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(
            f"parse error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    return set_from_document(doc, strict=strict)


def write_automaton(path, s: RecognizableSet) -> None:
    Path(path).write_text(dumps_automaton(s), encoding="utf-8")


def read_automaton(path, *, strict: bool = True) -> RecognizableSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}") from e
    return loads_automaton(text, strict=strict)
