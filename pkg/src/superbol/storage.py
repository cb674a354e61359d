"""JSON serialization of structures, maps, and conventions.

Rationals are serialized as strings in lowest terms ("3/2", "-4", "0") so no
float ever enters a file; product lists are sparse (omitted entries are zero)
and the basis order in the file is authoritative for reporting.  Saving is
deterministic: entries are emitted in basis-index order, map names sorted.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Union

from .core import Element, EvenMap, SuperSpace
from .structures import (
    BinaryStructure,
    Convention,
    HomBinaryTernary,
    HomSuperalgebra,
    HomTripleSystem,
    TernaryStructure,
    grading_check,
)

KIND_BINARY = "hom_superalgebra"
KIND_TERNARY = "hom_triple"
KIND_BOTH = "hom_binary_ternary"
KINDS = (KIND_BINARY, KIND_TERNARY, KIND_BOTH)

Structure = Union[HomSuperalgebra, HomTripleSystem, HomBinaryTernary]


class AlgebraFileError(ValueError):
    """Malformed or inconsistent algebra file."""


@dataclass(frozen=True)
class AlgebraDocument:
    """A structure plus the file-level context it travels with."""

    name: str
    structure: Structure
    maps: Mapping[str, EvenMap] = field(default_factory=dict)
    convention: Convention = Convention.UNIT

    @property
    def kind(self) -> str:
        if isinstance(self.structure, HomSuperalgebra):
            return KIND_BINARY
        if isinstance(self.structure, HomTripleSystem):
            return KIND_TERNARY
        return KIND_BOTH

    @property
    def space(self) -> SuperSpace:
        return self.structure.space


_RATIONAL_SHAPE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _rat(text: str, where: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_SHAPE.match(text.strip()):
        raise AlgebraFileError(f"{where}: cannot parse rational {text!r} (expected 'p' or 'p/q')")
    return Fraction(text.strip())


def _index(space: SuperSpace, name: str, where: str) -> int:
    try:
        return space.index(str(name))
    except KeyError:
        raise AlgebraFileError(f"{where}: unknown basis name {name!r}") from None


def _parse_products(space: SuperSpace, entries, arity: int, label: str):
    constants: dict[tuple, dict[int, Fraction]] = {}
    for position, entry in enumerate(entries or []):
        where = f"{label}[{position}]"
        if not isinstance(entry, (list, tuple)) or len(entry) != arity + 2:
            raise AlgebraFileError(f"{where}: expected {arity + 2} fields, got {entry!r}")
        key = tuple(_index(space, n, where) for n in entry[:arity])
        target = _index(space, entry[arity], where)
        coeff = _rat(entry[arity + 1], where)
        slot = constants.setdefault(key, {})
        slot[target] = slot.get(target, Fraction(0)) + coeff
    return {key: Element(space, coords) for key, coords in constants.items()}


def _check_grading(structure, label: str) -> None:
    report = grading_check(structure)
    if not report.passed:
        raise AlgebraFileError(f"{label} grading violation: {report.detail}")


def _parse_map(space: SuperSpace, name: str, rows) -> EvenMap:
    if not isinstance(rows, list) or len(rows) != space.dim:
        raise AlgebraFileError(f"map {name!r}: expected {space.dim} rows")
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != space.dim:
            raise AlgebraFileError(f"map {name!r} row {r}: expected {space.dim} entries")
        parsed.append(tuple(_rat(v, f"map {name!r} row {r}") for v in row))
    try:
        return EvenMap(space, tuple(parsed))
    except ValueError as exc:
        raise AlgebraFileError(f"map {name!r}: {exc}") from exc


def load(path) -> AlgebraDocument:
    """Read and fully validate an algebra file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise AlgebraFileError(f"{path}: top level must be an object")

    kind = data.get("kind")
    if kind not in KINDS:
        raise AlgebraFileError(f"kind must be one of {KINDS}, got {kind!r}")

    raw_basis = data.get("basis")
    if not isinstance(raw_basis, list) or not raw_basis:
        raise AlgebraFileError("basis must be a nonempty list")
    pairs = []
    for position, item in enumerate(raw_basis):
        if not isinstance(item, dict) or "name" not in item or "parity" not in item:
            raise AlgebraFileError(f"basis[{position}]: expected {{name, parity}}")
        if item["parity"] not in (0, 1):
            raise AlgebraFileError(f"basis[{position}]: parity must be 0 or 1")
        pairs.append((str(item["name"]), int(item["parity"])))
    try:
        space = SuperSpace.build(pairs)
    except ValueError as exc:
        raise AlgebraFileError(str(exc)) from exc

    maps = {
        str(name): _parse_map(space, str(name), rows)
        for name, rows in (data.get("maps") or {}).items()
    }

    twist_ref = data.get("twist", "id")
    if twist_ref == "id":
        twist = EvenMap.identity(space)
    elif twist_ref in maps:
        twist = maps[twist_ref]
    else:
        raise AlgebraFileError(f"twist {twist_ref!r} is not 'id' or a defined map name")

    convention_ref = data.get("convention", "unit")
    try:
        convention = Convention(convention_ref)
    except ValueError:
        raise AlgebraFileError(f"convention must be 'unit' or 'half', got {convention_ref!r}") from None

    binary = None
    ternary = None
    if kind in (KIND_BINARY, KIND_BOTH):
        binary = BinaryStructure(space, _parse_products(space, data.get("binary"), 2, "binary"))
        _check_grading(binary, "binary")
    if kind in (KIND_TERNARY, KIND_BOTH):
        ternary = TernaryStructure(space, _parse_products(space, data.get("ternary"), 3, "ternary"))
        _check_grading(ternary, "ternary")

    if kind == KIND_BINARY:
        structure: Structure = HomSuperalgebra(binary, twist)
    elif kind == KIND_TERNARY:
        structure = HomTripleSystem(ternary, twist)
    else:
        structure = HomBinaryTernary(binary, ternary, twist)

    name = str(data.get("name", path.stem))
    return AlgebraDocument(name=name, structure=structure, maps=maps, convention=convention)


def _product_rows(space: SuperSpace, constants, arity: int):
    rows = []
    for key in sorted(constants):
        element = constants[key]
        for target, coeff in element.coords.items():
            rows.append(
                [space.names[i] for i in key] + [space.names[target], str(coeff)]
            )
    return rows


def _map_rows(even_map: EvenMap):
    return [[str(v) for v in row] for row in even_map.matrix]


def document_to_dict(document: AlgebraDocument) -> dict:
    space = document.space
    structure = document.structure
    maps = dict(document.maps)

    twist = getattr(structure, "twist")
    if twist.is_identity():
        twist_ref = "id"
    else:
        twist_ref = next((n for n, m in maps.items() if m == twist), None)
        if twist_ref is None:
            twist_ref = "twist"
            maps[twist_ref] = twist

    data = {
        "name": document.name,
        "kind": document.kind,
        "convention": document.convention.value,
        "basis": [{"name": n, "parity": p} for n, p in space.basis],
        "binary": [],
        "ternary": [],
        "maps": {name: _map_rows(maps[name]) for name in sorted(maps)},
        "twist": twist_ref,
    }
    binary = getattr(structure, "binary", None)
    if binary is not None:
        data["binary"] = _product_rows(space, binary.constants, 2)
    ternary = getattr(structure, "ternary", None)
    if ternary is not None:
        data["ternary"] = _product_rows(space, ternary.constants, 3)
    return data


def save(document: AlgebraDocument, path) -> None:
    """Write a document; loading it back reproduces the structure tensor-exactly."""
    Path(path).write_text(json.dumps(document_to_dict(document), indent=2) + "\n")
