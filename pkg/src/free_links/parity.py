"""Gaussian and component parities, and the parity axioms checked on move instances."""

import logging
from typing import Dict

from .gauss_code import component_of, linked
from .models import Diagram, MoveInstance, MoveKind, Parity, ParityKind
from .moves import apply_move
from .errors import ParityError

logger = logging.getLogger(__name__)


def intercomponent_count(diagram: Diagram) -> int:
    """Number of crossings whose two occurrences lie on different components."""
    return sum(1 for x in diagram.labels if component_of(diagram, x) is None)


def _require(diagram: Diagram, kind: ParityKind) -> None:
    if kind == ParityKind.GAUSSIAN:
        if intercomponent_count(diagram):
            raise ParityError(
                "Gaussian parity needs every chord on a single component", str(diagram)
            )
    elif len(diagram.components) != 2:
        raise ParityError("Component parity needs exactly two components", str(diagram))


def default_parity_kind(diagram: Diagram) -> ParityKind:
    """Gaussian parity for knots, component parity for two-component links."""
    if len(diagram.components) == 1:
        return ParityKind.GAUSSIAN
    if len(diagram.components) == 2:
        return ParityKind.COMPONENT
    raise ParityError(
        f"No parity is defined for {len(diagram.components)}-component diagrams", str(diagram)
    )


def _parity(diagram: Diagram, kind: ParityKind, x: int) -> Parity:
    home = component_of(diagram, x)
    if kind == ParityKind.COMPONENT:
        return Parity.EVEN if home is not None else Parity.ODD
    partners = [
        y for y in diagram.labels if y != x and component_of(diagram, y) == home
    ]
    count = sum(1 for y in partners if linked(diagram, x, y))
    return Parity.ODD if count % 2 else Parity.EVEN


def parity_of(diagram: Diagram, kind: ParityKind, x: int) -> Parity:
    """
    Parity of crossing ``x``.

    Gaussian: odd iff ``x`` is linked with an odd number of chords.
    Component: odd iff the two occurrences of ``x`` lie on different components.

    Raises:
        ParityError: If the kind does not apply to the diagram or x is unknown
    """
    _require(diagram, kind)
    if x not in diagram.occurrences():
        raise ParityError(f"Unknown crossing label: {x}", str(diagram))
    return _parity(diagram, kind, x)


def parities(diagram: Diagram, kind: ParityKind) -> Dict[int, Parity]:
    """Parity of every crossing, keyed by label in first-occurrence order."""
    _require(diagram, kind)
    return {x: _parity(diagram, kind, x) for x in diagram.labels}


def odd_crossings(diagram: Diagram, kind: ParityKind) -> list:
    return [x for x, p in parities(diagram, kind).items() if p == Parity.ODD]


def even_crossings(diagram: Diagram, kind: ParityKind) -> list:
    return [x for x, p in parities(diagram, kind).items() if p == Parity.EVEN]


def check_parity_axioms(diagram: Diagram, kind: ParityKind, move: MoveInstance) -> bool:
    """
    Check the parity axioms on one move instance.

    Crossings not taking part in the move must keep their parity. The crossing
    of a first move is even, the two crossings of a second move share their
    parity, and a third move keeps each crossing's parity with zero or two odd
    crossings among its three.

    Raises:
        ParityError: If the kind does not apply before or after the move
    """
    before = parities(diagram, kind)
    after = parities(apply_move(diagram, move), kind)

    participants = set(move.labels)
    spectators = (set(before) & set(after)) - participants
    if any(before[x] != after[x] for x in spectators):
        logger.debug(f"Spectator parity changed under {move.kind.value} at {move.site}")
        return False

    if move.kind == MoveKind.R1_REMOVE:
        return before[move.labels[0]] == Parity.EVEN
    if move.kind == MoveKind.R1_ADD:
        return after[move.labels[0]] == Parity.EVEN
    if move.kind == MoveKind.R2_REMOVE:
        x, y = move.labels
        return before[x] == before[y]
    if move.kind == MoveKind.R2_ADD:
        x, y = move.labels
        return after[x] == after[y]

    triple = move.labels
    if any(before[x] != after[x] for x in triple):
        return False
    return sum(1 for x in triple if before[x] == Parity.ODD) in (0, 2)
