"""Reidemeister moves on Gauss words: enumeration, application, R2 reduction and BFS."""

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .canonical import canonical_code
from .errors import DiagramError, MoveError
from .gauss_code import build_diagram
from .models import Diagram, MoveInstance, MoveKind, MoveStep, Position, SymmetryConfig

logger = logging.getLogger(__name__)

ALL_KINDS = frozenset(MoveKind)
DECREASING = frozenset({MoveKind.R1_REMOVE, MoveKind.R2_REMOVE})

_GROWTH = {MoveKind.R1_ADD: 1, MoveKind.R2_ADD: 2}

Pair = Tuple[Position, Position]


def adjacent_pairs(diagram: Diagram) -> List[Pair]:
    """
    Edges between consecutive word positions, as (p, q) with q following p.

    Closed components wrap around; the long component does not.
    """
    pairs: List[Pair] = []
    for c, comp in enumerate(diagram.components):
        m = len(comp.word)
        if m < 2:
            continue
        last = m if diagram.is_closed_component(c) else m - 1
        for i in range(last):
            pairs.append(((c, i), (c, (i + 1) % m)))
    return pairs


def arcs(diagram: Diagram) -> List[Position]:
    """Insertion points ``(component, k)``: before index k, or at the end of the long word."""
    result: List[Position] = []
    for c, comp in enumerate(diagram.components):
        m = len(comp.word)
        count = m + 1 if not diagram.is_closed_component(c) else max(m, 1)
        result.extend((c, k) for k in range(count))
    return result


def _label(diagram: Diagram, p: Position) -> int:
    return diagram.components[p[0]].word[p[1]]


def _pair_labels(diagram: Diagram, pair: Pair) -> Tuple[int, int]:
    return _label(diagram, pair[0]), _label(diagram, pair[1])


def _fresh_labels(diagram: Diagram, count: int) -> Tuple[int, ...]:
    top = max(diagram.labels, default=0)
    return tuple(range(top + 1, top + 1 + count))


def _r1_sites(diagram: Diagram) -> List[MoveInstance]:
    seen: Set[int] = set()
    found = []
    for p, q in adjacent_pairs(diagram):
        x, y = _pair_labels(diagram, (p, q))
        if x == y and x not in seen:
            seen.add(x)
            found.append(MoveInstance(kind=MoveKind.R1_REMOVE, site=(p, q), labels=(x,)))
    return found


def _r2_sites(diagram: Diagram) -> List[MoveInstance]:
    by_labels: Dict[frozenset, List[Pair]] = {}
    for pair in adjacent_pairs(diagram):
        x, y = _pair_labels(diagram, pair)
        if x != y:
            by_labels.setdefault(frozenset((x, y)), []).append(pair)

    found = []
    for key, pairs in by_labels.items():
        site = next(
            (
                (e1, e2)
                for i, e1 in enumerate(pairs)
                for e2 in pairs[i + 1 :]
                if not set(e1) & set(e2)
            ),
            None,
        )
        if site is not None:
            e1, e2 = site
            found.append(
                MoveInstance(
                    kind=MoveKind.R2_REMOVE,
                    site=(*e1, *e2),
                    labels=tuple(sorted(key)),
                )
            )
    return found


def _r3_sites(diagram: Diagram) -> List[MoveInstance]:
    pairs = [
        (pair, frozenset(_pair_labels(diagram, pair)))
        for pair in adjacent_pairs(diagram)
        if len(set(_pair_labels(diagram, pair))) == 2
    ]
    seen: Set[frozenset] = set()
    found = []
    for i, (e1, l1) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            e2, l2 = pairs[j]
            if set(e1) & set(e2) or len(l1 & l2) != 1:
                continue
            l3 = l1 ^ l2
            for k in range(j + 1, len(pairs)):
                e3, labels3 = pairs[k]
                if labels3 != l3 or set(e3) & (set(e1) | set(e2)):
                    continue
                key = frozenset((e1, e2, e3))
                if key in seen:
                    continue
                seen.add(key)
                found.append(
                    MoveInstance(
                        kind=MoveKind.R3,
                        site=(*e1, *e2, *e3),
                        labels=tuple(sorted(l1 | l2)),
                    )
                )
    return found


def _r1_add_sites(diagram: Diagram) -> List[MoveInstance]:
    labels = _fresh_labels(diagram, 1)
    return [MoveInstance(kind=MoveKind.R1_ADD, site=(arc,), labels=labels) for arc in arcs(diagram)]


def _r2_add_sites(diagram: Diagram) -> List[MoveInstance]:
    labels = _fresh_labels(diagram, 2)
    points = arcs(diagram)
    found = []
    for i, p in enumerate(points):
        for q in points[i:]:
            for antiparallel in (False, True):
                found.append(
                    MoveInstance(
                        kind=MoveKind.R2_ADD,
                        site=(p, q),
                        labels=labels,
                        antiparallel=antiparallel,
                    )
                )
    return found


_FINDERS = {
    MoveKind.R1_REMOVE: _r1_sites,
    MoveKind.R2_REMOVE: _r2_sites,
    MoveKind.R3: _r3_sites,
    MoveKind.R1_ADD: _r1_add_sites,
    MoveKind.R2_ADD: _r2_add_sites,
}


def find_moves(diagram: Diagram, kinds: Optional[Iterable[MoveKind]] = None) -> List[MoveInstance]:
    """
    Enumerate move instances of the requested kinds (all kinds by default).

    R2_remove sites are reported once per label pair.
    """
    wanted = set(kinds) if kinds is not None else ALL_KINDS
    found: List[MoveInstance] = []
    for kind in MoveKind:
        if kind in wanted:
            found.extend(_FINDERS[kind](diagram))
    return found


def _is_adjacent(diagram: Diagram, p: Position, q: Position) -> bool:
    if p[0] != q[0] or not 0 <= p[0] < len(diagram.components):
        return False
    m = len(diagram.components[p[0]].word)
    if not (0 <= p[1] < m and 0 <= q[1] < m) or m < 2:
        return False
    if q[1] == p[1] + 1:
        return True
    return diagram.is_closed_component(p[0]) and p[1] == m - 1 and q[1] == 0


def _check_pairs(diagram: Diagram, move: MoveInstance) -> List[Pair]:
    site = move.site
    expected = {MoveKind.R1_REMOVE: 2, MoveKind.R2_REMOVE: 4, MoveKind.R3: 6}[move.kind]
    if len(site) != expected or len(set(site)) != expected:
        raise MoveError(f"Malformed {move.kind.value} site {site}", str(diagram))
    pairs = [(site[i], site[i + 1]) for i in range(0, expected, 2)]
    if not all(_is_adjacent(diagram, p, q) for p, q in pairs):
        raise MoveError(f"Stale {move.kind.value} site {site}", str(diagram))
    return pairs


def _validate(diagram: Diagram, move: MoveInstance) -> None:
    if move.kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
        valid = set(arcs(diagram))
        count = 1 if move.kind == MoveKind.R1_ADD else 2
        if len(move.site) != count or not all(a in valid for a in move.site):
            raise MoveError(f"Stale {move.kind.value} site {move.site}", str(diagram))
        if len(move.labels) != count or set(move.labels) & set(diagram.labels):
            raise MoveError(f"Labels {move.labels} are not fresh", str(diagram))
        return

    pairs = _check_pairs(diagram, move)
    labels = [_pair_labels(diagram, pair) for pair in pairs]
    if move.kind == MoveKind.R1_REMOVE:
        ok = labels[0][0] == labels[0][1] == move.labels[0]
    elif move.kind == MoveKind.R2_REMOVE:
        sets = {frozenset(pair) for pair in labels}
        ok = len(sets) == 1 and sets.pop() == frozenset(move.labels) and len(move.labels) == 2
    else:
        sets = [frozenset(pair) for pair in labels]
        union = frozenset().union(*sets)
        ok = (
            all(len(s) == 2 for s in sets)
            and len(set(sets)) == 3
            and len(union) == 3
            and union == frozenset(move.labels)
        )
    if not ok:
        raise MoveError(f"Stale {move.kind.value} site {move.site}", str(diagram))


def _rebuild(diagram: Diagram, words: List[List[int]]) -> Diagram:
    return build_diagram(
        [tuple(w) for w in words],
        oriented=tuple(comp.oriented and bool(w) for comp, w in zip(diagram.components, words)),
        long=diagram.long,
        ordered=diagram.ordered,
    )


def _insert(words: List[List[int]], inserts: List[Tuple[Position, Tuple[int, ...]]]) -> None:
    # larger index first so earlier arcs keep their meaning
    for (c, k), letters in sorted(inserts, key=lambda item: item[0], reverse=True):
        words[c][k:k] = list(letters)


def apply_move(diagram: Diagram, move: MoveInstance) -> Diagram:
    """
    Apply a move instance. Labels are not renumbered; added crossings use the
    instance's fresh labels.

    Raises:
        MoveError: If the site does not fit the diagram
    """
    _validate(diagram, move)
    words = [list(comp.word) for comp in diagram.components]

    if move.kind in (MoveKind.R1_REMOVE, MoveKind.R2_REMOVE):
        drop = set(move.site)
        words = [
            [x for i, x in enumerate(comp.word) if (c, i) not in drop]
            for c, comp in enumerate(diagram.components)
        ]
    elif move.kind == MoveKind.R3:
        for p, q in _check_pairs(diagram, move):
            words[p[0]][p[1]], words[q[0]][q[1]] = words[q[0]][q[1]], words[p[0]][p[1]]
    elif move.kind == MoveKind.R1_ADD:
        (x,) = move.labels
        _insert(words, [(move.site[0], (x, x))])
    else:
        x, y = move.labels
        p, q = move.site
        if p == q:
            block = (x, y, y, x) if move.antiparallel else (x, y, x, y)
            _insert(words, [(p, block)])
        else:
            _insert(words, [(p, (x, y)), (q, (y, x) if move.antiparallel else (x, y))])

    result = _rebuild(diagram, words)
    if len(result.components) != len(diagram.components):
        raise MoveError(f"{move.kind.value} changed the component count", str(diagram))
    return result


def find_r2_site(diagram: Diagram) -> Optional[MoveInstance]:
    """Lexicographically least decreasing second-move site, if any."""
    sites = _r2_sites(diagram)
    return min(sites, key=lambda m: m.site) if sites else None


def is_irreducible_r2(diagram: Diagram) -> bool:
    return find_r2_site(diagram) is None


def reduce_r2(diagram: Diagram) -> Diagram:
    """Remove bigons greedily, always at the least site, until none remains."""
    site = find_r2_site(diagram)
    while site is not None:
        diagram = apply_move(diagram, site)
        site = find_r2_site(diagram)
    return diagram


def bfs_equivalence(
    d1: Diagram,
    d2: Diagram,
    max_crossings: int,
    max_depth: int,
    kinds: Optional[Iterable[MoveKind]] = None,
) -> Optional[List[MoveStep]]:
    """
    Shortest move path from ``d1`` to a diagram isomorphic to ``d2``.

    States are deduplicated by canonical form under the symmetry implied by
    the diagrams' flags. ``None`` means "not found within bounds", never a
    proof of non-equivalence.

    Raises:
        DiagramError: If the diagrams' flags differ
    """
    if (d1.long, d1.ordered) != (d2.long, d2.ordered):
        raise DiagramError(f"Flag mismatch between {d1} and {d2}")

    cfg = SymmetryConfig.for_diagram(d1)
    target = canonical_code(d2, cfg)
    start = canonical_code(d1, cfg)
    if start == target:
        return []

    allowed = set(kinds) if kinds is not None else set(ALL_KINDS)
    visited = {start}
    queue: deque = deque([(d1, [])])
    while queue:
        diagram, path = queue.popleft()
        if len(path) >= max_depth:
            continue
        room = max_crossings - diagram.crossing_count
        usable = {k for k in allowed if _GROWTH.get(k, 0) <= room}
        for move in find_moves(diagram, usable):
            result = apply_move(diagram, move)
            code = canonical_code(result, cfg)
            if code in visited:
                continue
            visited.add(code)
            step_path = path + [MoveStep(move=move, result=result)]
            if code == target:
                logger.debug(f"Found path of length {len(step_path)} after {len(visited)} states")
                return step_path
            queue.append((result, step_path))
        logger.debug(f"BFS frontier {len(queue)}, visited {len(visited)}")

    logger.debug(f"No path within bounds after {len(visited)} states")
    return None
