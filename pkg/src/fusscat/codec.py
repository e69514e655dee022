"""Canonical JSON for diagrams, trees and dissections.

Canonical means sorted keys and no whitespace, so encoded objects can be
compared byte for byte.
"""
import json

from .diagrams import Diagram, validate_diagram
from .dissections import Dissection, validate_dissection
from .errors import ParseError, ValidationError
from .trees import FullKAryTree, validate_nested, validate_tree

KINDS = ("diagram", "tree", "dissection")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def to_json(obj):
    """Plain JSON-able form of a library object."""
    if isinstance(obj, Diagram):
        return {"n": obj.n, "k": obj.k, "stars": obj.as_lists()}
    if isinstance(obj, FullKAryTree):
        return obj.to_nested()
    if isinstance(obj, Dissection):
        return {"sides": obj.sides, "k": obj.k, "faces": obj.as_lists()}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def encode(obj) -> str:
    return dumps(to_json(obj))


def kind_of(obj) -> str:
    for kind, cls in zip(KINDS, (Diagram, FullKAryTree, Dissection)):
        if isinstance(obj, cls):
            return kind
    raise TypeError(f"not a fusscat object: {type(obj).__name__}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int_rows(value, what):
    if not isinstance(value, list) or not all(isinstance(r, list) and all(_is_int(x) for x in r) for r in value):
        raise ParseError(f"{what} must be a list of integer lists")
    return value


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    missing = [key for key in keys if key not in data]
    if missing:
        raise ParseError(f"{what} is missing keys {missing}")
    for key in keys:
        if key in ("n", "k", "sides") and not _is_int(data[key]):
            raise ParseError(f"{what} field {key!r} must be an integer")


def from_json(data, kind: str, k=None):
    """Build and validate an object from already-parsed JSON."""
    if kind == "diagram":
        _require(data, ("n", "k", "stars"), "diagram")
        d = Diagram(data["n"], data["k"], tuple(tuple(s) for s in _int_rows(data["stars"], "stars")))
        report = validate_diagram(d)
        if not report.ok:
            raise ValidationError("; ".join(report.violations), report.violations)
        return d
    if kind == "tree":
        _check_tree_shape(data)
        if k is not None:
            report = validate_nested(data, k)
            if not report.ok:
                raise ValidationError("; ".join(report.violations), report.violations)
        t = FullKAryTree.from_nested(data, k)
        report = validate_tree(t)
        if not report.ok:
            raise ValidationError("; ".join(report.violations), report.violations)
        return t
    if kind == "dissection":
        _require(data, ("sides", "k", "faces"), "dissection")
        p = Dissection(data["sides"], data["k"], tuple(tuple(f) for f in _int_rows(data["faces"], "faces")))
        report = validate_dissection(p)
        if not report.ok:
            raise ValidationError("; ".join(report.violations), report.violations)
        return p
    raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")


def _check_tree_shape(data):
    stack = [data]
    while stack:
        node = stack.pop()
        if not isinstance(node, list):
            raise ParseError("a tree is a list of child trees")
        stack.extend(node)


def decode(text: str, kind: str, k=None):
    """Parse canonical (or any well-formed) JSON text into a validated object.

    Malformed text raises :class:`ParseError`; a well-formed but invalid object
    raises :class:`ValidationError`.
    """
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, RecursionError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return from_json(data, kind, k)
