"""Spine documents: the JSON interchange form of a spine, plus group-table
files.

A spine document is a single UTF-8 JSON object with fields format_version,
objects, sets, pairs, morphisms, and optional meta. Pair keys join the two
object labels with "|", so labels may not contain that character.
Serialization is canonical: parse followed by serialize reproduces a
serialized document byte for byte.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .errors import (
    DocumentSyntaxError,
    SchemaError,
    ValidationError,
)
from .groups import GroupTable
from .model import FiniteMap, FiniteSet, GroupoidSpine, validate_spine

FORMAT_VERSION = 1

_SPINE_KEYS = {"format_version", "objects", "sets", "pairs", "morphisms", "meta"}


def _require(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise SchemaError(message, path)


def _check_label(label: Any, path: str) -> str:
    _require(isinstance(label, str), f"expected a string, got {type(label).__name__}", path)
    _require(label != "", "labels may not be empty", path)
    if "|" in label:
        raise SchemaError(f"label {label!r} contains the reserved character '|'", path)
    return label


def serialize_spine(spine: GroupoidSpine, meta: Optional[dict] = None) -> str:
    """Canonical document text: objects in spine order, pairs in canonical
    order, morphism lists verbatim, mapping keys in carrier order."""
    doc: dict[str, Any] = {"format_version": FORMAT_VERSION}
    doc["objects"] = list(spine.objects)
    doc["sets"] = {o: list(spine.sets[o].elements) for o in spine.objects}
    pairs = spine.sorted_pairs()
    doc["pairs"] = [[i, j] for i, j in pairs]
    doc["morphisms"] = {
        f"{i}|{j}": [
            {x: f(x) for x in spine.sets[i].elements}
            for f in spine.morphisms[(i, j)]
        ]
        for i, j in pairs
    }
    if meta is not None:
        doc["meta"] = meta
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_spine(text: str | bytes) -> tuple[GroupoidSpine, Optional[dict]]:
    """Structural parse only: returns the spine and its meta block.

    Raises DocumentSyntaxError for malformed JSON and SchemaError (with a
    path like morphisms."1|3"[2]) for shape problems.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentSyntaxError(f"not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    _require(isinstance(doc, dict), "document must be a JSON object", "$")
    for key in doc:
        if key not in _SPINE_KEYS:
            raise SchemaError(f"unknown top-level key {key!r}", "$")
    for key in ("format_version", "objects", "sets", "pairs", "morphisms"):
        _require(key in doc, f"missing required key {key!r}", "$")
    _require(
        doc["format_version"] == FORMAT_VERSION,
        f"unsupported format_version {doc['format_version']!r}",
        "format_version",
    )

    objects = doc["objects"]
    _require(isinstance(objects, list) and objects, "objects must be a non-empty list", "objects")
    objects = [_check_label(o, f"objects[{n}]") for n, o in enumerate(objects)]
    _require(len(set(objects)) == len(objects), "duplicate object labels", "objects")

    raw_sets = doc["sets"]
    _require(isinstance(raw_sets, dict), "sets must be an object", "sets")
    sets: dict[str, FiniteSet] = {}
    for o, elems in raw_sets.items():
        path = f'sets."{o}"'
        _require(o in objects, f"set for unknown object {o!r}", path)
        _require(isinstance(elems, list) and elems, "must be a non-empty list", path)
        labels = [_check_label(e, f"{path}[{n}]") for n, e in enumerate(elems)]
        try:
            sets[o] = FiniteSet(o, labels)
        except ValueError as exc:
            raise SchemaError(str(exc), path) from None
    for o in objects:
        _require(o in sets, f"object {o!r} has no carrier set", "sets")

    raw_pairs = doc["pairs"]
    _require(isinstance(raw_pairs, list), "pairs must be a list", "pairs")
    pairs: list[tuple[str, str]] = []
    for n, pair in enumerate(raw_pairs):
        path = f"pairs[{n}]"
        _require(
            isinstance(pair, list) and len(pair) == 2,
            "each pair must be a two-element list",
            path,
        )
        i, j = (_check_label(x, path) for x in pair)
        _require(i in objects and j in objects, "pair names an unknown object", path)
        _require((i, j) not in pairs, f"duplicate pair ({i},{j})", path)
        pairs.append((i, j))

    raw_mor = doc["morphisms"]
    _require(isinstance(raw_mor, dict), "morphisms must be an object", "morphisms")
    morphisms: dict[tuple[str, str], list[FiniteMap]] = {}
    for key, fams in raw_mor.items():
        path = f'morphisms."{key}"'
        parts = key.split("|")
        _require(len(parts) == 2, 'keys must look like "i|j"', path)
        i, j = parts
        _require((i, j) in pairs, f"({i},{j}) is not a listed pair", path)
        _require(isinstance(fams, list), "must be a list of mappings", path)
        maps = []
        for n, mapping in enumerate(fams):
            mpath = f"{path}[{n}]"
            _require(isinstance(mapping, dict), "each morphism must be an object", mpath)
            for x, y in mapping.items():
                _check_label(x, mpath)
                _check_label(y, mpath)
            try:
                maps.append(FiniteMap(i, j, mapping))
            except ValueError as exc:
                raise SchemaError(str(exc), mpath) from None
        morphisms[(i, j)] = maps
    for pair in pairs:
        _require(
            pair in morphisms,
            f"pair ({pair[0]},{pair[1]}) has no morphism list",
            "morphisms",
        )

    meta = doc.get("meta")
    try:
        spine = GroupoidSpine(objects, sets, pairs, morphisms)
    except ValueError as exc:
        raise SchemaError(str(exc), "$") from None
    return spine, meta


def parse_document(text: str | bytes) -> GroupoidSpine:
    """Parse and validate a spine document.

    Validation failures raise ValidationError carrying the full report.
    """
    spine, _ = load_spine(text)
    report = validate_spine(spine)
    if not report.ok:
        raise ValidationError(report)
    return spine


_GROUP_KEYS = {"format_version", "elements", "identity", "product", "inverse", "meta"}


def serialize_group(table: GroupTable, meta: Optional[dict] = None) -> str:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "elements": list(table.elements),
        "identity": table.identity,
        "product": {
            f"{a}|{b}": table.op(a, b)
            for a in table.elements
            for b in table.elements
        },
        "inverse": {a: table.inv(a) for a in table.elements},
    }
    if meta is not None:
        doc["meta"] = meta
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_group(text: str | bytes) -> GroupTable:
    """Parse a group-table file; the inverse block is optional."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentSyntaxError(f"not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    _require(isinstance(doc, dict), "document must be a JSON object", "$")
    for key in doc:
        if key not in _GROUP_KEYS:
            raise SchemaError(f"unknown top-level key {key!r}", "$")
    for key in ("format_version", "elements", "identity", "product"):
        _require(key in doc, f"missing required key {key!r}", "$")
    _require(
        doc["format_version"] == FORMAT_VERSION,
        f"unsupported format_version {doc['format_version']!r}",
        "format_version",
    )
    elements = doc["elements"]
    _require(
        isinstance(elements, list) and elements,
        "elements must be a non-empty list",
        "elements",
    )
    for n, e in enumerate(elements):
        _check_label(e, f"elements[{n}]")
    raw = doc["product"]
    _require(isinstance(raw, dict), "product must be an object", "product")
    product: dict[tuple[str, str], str] = {}
    for key, value in raw.items():
        path = f'product."{key}"'
        parts = key.split("|")
        _require(len(parts) == 2, 'keys must look like "a|b"', path)
        _check_label(value, path)
        product[(parts[0], parts[1])] = value
    inverse = doc.get("inverse")
    if inverse is not None:
        _require(isinstance(inverse, dict), "inverse must be an object", "inverse")
    try:
        return GroupTable(elements, doc["identity"], product, inverse)
    except ValueError as exc:
        raise SchemaError(str(exc), "$") from None
