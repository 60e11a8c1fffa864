"""Symmetry-aware canonical forms, isomorphism and orientation helpers."""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import DiagramError
from .gauss_code import build_diagram
from .models import Component, Diagram, SymmetryConfig

logger = logging.getLogger(__name__)

Part = Tuple[int, Tuple[int, ...]]  # (orientation mark, relabeled word)


def _variants(diagram: Diagram, index: int, cfg: SymmetryConfig) -> List[Tuple[int, ...]]:
    """Words a component may be written as under the symmetry configuration."""
    comp = diagram.components[index]
    word = comp.word
    if not word:
        return [()]

    closed = diagram.is_closed_component(index)
    if closed and cfg.allow_rotation:
        forms = [word[i:] + word[:i] for i in range(len(word))]
    else:
        forms = [word]

    if cfg.allow_reflection_per_component and not comp.oriented:
        forms += [tuple(reversed(f)) for f in forms]
    return list(dict.fromkeys(forms))


class _State:
    __slots__ = ("used", "mapping", "parts", "order")

    def __init__(
        self,
        used: frozenset,
        mapping: Dict[int, int],
        parts: Tuple[Part, ...],
        order: Tuple[int, ...],
    ):
        self.used = used
        self.mapping = mapping
        self.parts = parts
        self.order = order

    def signature(self) -> Tuple[frozenset, Tuple[Tuple[int, int], ...]]:
        return self.used, tuple(sorted(self.mapping.items()))

    def extend(self, index: int, word: Tuple[int, ...], oriented: bool) -> "_State":
        mapping = dict(self.mapping)
        relabeled = []
        for x in word:
            if x not in mapping:
                mapping[x] = len(mapping) + 1
            relabeled.append(mapping[x])
        part = (int(oriented), tuple(relabeled))
        return _State(self.used | {index}, mapping, self.parts + (part,), self.order + (index,))


def canonical_form(diagram: Diagram, cfg: Optional[SymmetryConfig] = None) -> Diagram:
    """
    Least arrangement of a diagram under the configured symmetries.

    Components are compared one at a time as (orientation mark, word relabeled
    by first occurrence); every arrangement that ties on the prefix is kept, so
    the minimum is exact. The long component always stays first and is never
    rotated.

    Args:
        diagram: Diagram to canonicalize
        cfg: Symmetries to quotient by; defaults to those implied by the flags

    Returns:
        Relabeled diagram with the same flags
    """
    cfg = cfg or SymmetryConfig.for_diagram(diagram)
    n = len(diagram.components)
    states = [_State(frozenset(), {}, (), ())]

    for step in range(n):
        if diagram.long and step == 0:
            candidates: Iterable[int] = [0]
        elif cfg.allow_component_permutation:
            candidates = range(n)
        else:
            candidates = [step]

        best: Optional[Part] = None
        frontier: Dict[Tuple, _State] = {}
        for state in states:
            for index in candidates:
                if index in state.used:
                    continue
                oriented = diagram.components[index].oriented
                for word in _variants(diagram, index, cfg):
                    nxt = state.extend(index, word, oriented)
                    part = nxt.parts[-1]
                    if best is None or part < best:
                        best = part
                        frontier = {}
                    if part == best:
                        frontier.setdefault(nxt.signature(), nxt)
        states = list(frontier.values())

    winner = states[0]
    return build_diagram(
        [part[1] for part in winner.parts],
        oriented=tuple(bool(part[0]) for part in winner.parts),
        long=diagram.long,
        ordered=diagram.ordered,
    )


def canonical_code(diagram: Diagram, cfg: Optional[SymmetryConfig] = None) -> str:
    return str(canonical_form(diagram, cfg))


def is_isomorphic(d1: Diagram, d2: Diagram, cfg: Optional[SymmetryConfig] = None) -> bool:
    """
    True iff both diagrams have the same canonical form under ``cfg``.

    Raises:
        DiagramError: If the diagrams' long/ordered flags differ
    """
    if (d1.long, d1.ordered) != (d2.long, d2.ordered):
        raise DiagramError(f"Flag mismatch between {d1} and {d2}")
    cfg = cfg or SymmetryConfig.for_diagram(d1)
    return canonical_form(d1, cfg) == canonical_form(d2, cfg)


def _check_indices(diagram: Diagram, indices: Iterable[int]) -> List[int]:
    result = list(indices)
    for i in result:
        if not 0 <= i < len(diagram.components):
            raise DiagramError(f"Invalid component index: {i}", str(diagram))
    return result


def reverse_orientation(diagram: Diagram, comps: Iterable[int]) -> Diagram:
    """
    Reverse the listed components' words, keeping labels and orientation marks.

    Raises:
        DiagramError: If an index is out of range
    """
    targets = set(_check_indices(diagram, comps))
    return diagram.model_copy(
        update={
            "components": tuple(
                Component(word=tuple(reversed(comp.word)), oriented=comp.oriented)
                if i in targets
                else comp
                for i, comp in enumerate(diagram.components)
            )
        }
    )


def swap_components(diagram: Diagram, i: int = 0, j: int = 1) -> Diagram:
    """Exchange two components (the long component cannot move)."""
    _check_indices(diagram, (i, j))
    if diagram.long and 0 in (i, j) and i != j:
        raise DiagramError("The long component must stay first", str(diagram))
    comps = list(diagram.components)
    comps[i], comps[j] = comps[j], comps[i]
    return diagram.model_copy(update={"components": tuple(comps)})


def forget_orientation(diagram: Diagram, comps: Optional[Iterable[int]] = None) -> Diagram:
    """Clear orientation marks on the listed components (all by default)."""
    targets = set(range(len(diagram.components)) if comps is None else _check_indices(diagram, comps))
    return diagram.model_copy(
        update={
            "components": tuple(
                Component(word=comp.word) if i in targets else comp
                for i, comp in enumerate(diagram.components)
            )
        }
    )


def orient(diagram: Diagram, comps: Iterable[int]) -> Diagram:
    """Mark the listed non-empty components as oriented."""
    targets = set(_check_indices(diagram, comps))
    return diagram.model_copy(
        update={
            "components": tuple(
                Component(
                    word=comp.word,
                    oriented=comp.oriented or (i in targets and bool(comp.word)),
                )
                for i, comp in enumerate(diagram.components)
            )
        }
    )
