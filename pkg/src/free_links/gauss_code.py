"""Gauss-code parsing, serialization and chord interlacement."""

import logging
from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import ValidationError

from .errors import DiagramError, DiagramParseError
from .models import Component, Diagram

logger = logging.getLogger(__name__)

FLAGS = ("@long", "@ordered")
EMPTY_COMPONENT = "o"
ORIENT_MARK = "+"


def _parse_label(token: str, text: str) -> int:
    if not (token.isascii() and token.isdigit()) or int(token) < 1:
        raise DiagramParseError(f"Invalid crossing label: {token!r}", text)
    return int(token)


def _parse_component(part: str, text: str) -> Component:
    tokens = part.split()
    if not tokens:
        raise DiagramParseError("Empty component (use 'o' for a crossingless circle)", text)

    if tokens == [EMPTY_COMPONENT]:
        return Component()

    oriented = False
    if tokens[0].startswith(ORIENT_MARK):
        oriented = True
        rest = tokens[0][len(ORIENT_MARK) :]
        tokens = ([rest] if rest else []) + tokens[1:]
        if not tokens or tokens == [EMPTY_COMPONENT]:
            raise DiagramParseError("Orientation mark on empty component", text)

    if EMPTY_COMPONENT in tokens:
        raise DiagramParseError("'o' must stand alone as a component", text)

    return Component(word=tuple(_parse_label(t, text) for t in tokens), oriented=oriented)


def parse_diagram(text: str) -> Diagram:
    """
    Parse a Gauss-code string into a Diagram.

    Labels are kept as written; only emit_diagram renumbers them.

    Args:
        text: Gauss code such as ``"@ordered +1 2 3 ; 1 ; 2 ; 3"``

    Returns:
        Parsed Diagram with its flags and orientation marks

    Raises:
        DiagramParseError: If the text violates the grammar or a diagram invariant
    """
    tokens = text.split()
    flags: List[str] = []
    while tokens and tokens[0].startswith("@"):
        flag = tokens.pop(0)
        if flag not in FLAGS:
            raise DiagramParseError(f"Unknown flag: {flag}", text)
        if flag in flags:
            raise DiagramParseError(f"Duplicate flag: {flag}", text)
        flags.append(flag)

    body = " ".join(tokens)
    if not body:
        raise DiagramParseError("Diagram has no components", text)
    if "@" in body:
        raise DiagramParseError("Flags must precede the first component", text)

    components = tuple(_parse_component(part, text) for part in body.split(";"))
    try:
        diagram = Diagram(
            components=components,
            long="@long" in flags,
            ordered="@ordered" in flags,
        )
    except ValidationError as e:
        raise DiagramParseError(_validation_message(e), text) from e

    logger.debug(f"Parsed diagram with {len(components)} component(s)")
    return diagram


def read_diagram_file(path: Path) -> Diagram:
    """Parse the first non-blank, non-comment line of a file."""
    if not path.exists():
        raise FileNotFoundError(f"Diagram file not found: {path}")
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return parse_diagram(stripped)
    raise DiagramParseError(f"No diagram found in {path}")


def _validation_message(error: ValidationError) -> str:
    return "; ".join(str(e["msg"]).removeprefix("Value error, ") for e in error.errors())


def relabel_map(diagram: Diagram) -> Dict[int, int]:
    """Renumbering 1..n by first occurrence, scanning components in order."""
    return {label: i for i, label in enumerate(diagram.labels, start=1)}


def relabel(diagram: Diagram) -> Diagram:
    """Return the diagram with labels renumbered by first occurrence."""
    mapping = relabel_map(diagram)
    return diagram.model_copy(
        update={
            "components": tuple(
                Component(word=tuple(mapping[x] for x in comp.word), oriented=comp.oriented)
                for comp in diagram.components
            )
        }
    )


def emit_diagram(diagram: Diagram) -> str:
    """
    Serialize a diagram in canonical text form.

    Flags come first (``@long`` before ``@ordered``), labels are renumbered by
    first occurrence and components are joined by ``" ; "``.
    """
    mapping = relabel_map(diagram)
    parts: List[str] = []
    if diagram.long:
        parts.append("@long")
    if diagram.ordered:
        parts.append("@ordered")

    rendered = []
    for comp in diagram.components:
        if not comp.word:
            rendered.append(EMPTY_COMPONENT)
            continue
        text = " ".join(str(mapping[x]) for x in comp.word)
        rendered.append(ORIENT_MARK + text if comp.oriented else text)
    parts.append(" ; ".join(rendered))
    return " ".join(parts)


def build_diagram(
    words: List[Tuple[int, ...]] | Tuple[Tuple[int, ...], ...],
    oriented: Tuple[bool, ...] | None = None,
    long: bool = False,
    ordered: bool = False,
) -> Diagram:
    """Construct a diagram from raw words, wrapping validation failures in DiagramError."""
    try:
        return Diagram.from_words(words, oriented=oriented, long=long, ordered=ordered)
    except ValidationError as e:
        raise DiagramError(_validation_message(e), str(list(words))) from e


def component_of(diagram: Diagram, label: int) -> int | None:
    """Index of the component holding both occurrences of ``label``, or None if split."""
    occ = diagram.occurrences().get(label)
    if occ is None:
        raise DiagramError(f"Unknown crossing label: {label}", str(diagram))
    (c1, _), (c2, _) = occ
    return c1 if c1 == c2 else None


def linked(diagram: Diagram, x: int, y: int) -> bool:
    """
    Whether chords ``x`` and ``y`` interlace on their common component.

    Raises:
        DiagramError: If x equals y, a label is unknown, or the four endpoints
            do not lie on one component
    """
    if x == y:
        raise DiagramError(f"Chord {x} cannot be tested against itself", str(diagram))

    occ = diagram.occurrences()
    for label in (x, y):
        if label not in occ:
            raise DiagramError(f"Unknown crossing label: {label}", str(diagram))

    comps = {c for c, _ in occ[x]} | {c for c, _ in occ[y]}
    if len(comps) != 1:
        raise DiagramError(f"Chords {x} and {y} do not share a component", str(diagram))

    (_, i), (_, j) = occ[x]
    return sum(1 for _, p in occ[y] if i < p < j) == 1
