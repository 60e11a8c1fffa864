"""Framed 4-valent graph view of a diagram: smoothing and unicursal traversal."""

import logging
from collections import Counter
from functools import cached_property
from typing import Dict, List, NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict

from .errors import DiagramError
from .gauss_code import build_diagram
from .models import Diagram, Position, Resolution, SmoothingChoice

logger = logging.getLogger(__name__)

# Virtual vertex carrying the two infinite edges of a long component.
# Only slots 0 (arrival from the end) and 2 (departure to the start) are used.
INF = 0

HalfEdge = Tuple[int, int]  # (vertex, slot)

# Slots 0 and 2 belong to the first occurrence of a label (in, out),
# slots 1 and 3 to the second. Opposite slots are s and (s + 2) % 4.
_PAIRINGS: Dict[Resolution, Dict[int, int]] = {
    Resolution.A: {0: 1, 1: 0, 2: 3, 3: 2},
    Resolution.B: {0: 3, 3: 0, 1: 2, 2: 1},
}


def opposite(slot: int) -> int:
    return (slot + 2) % 4


class Passage(NamedTuple):
    """One pass of a traversal through a vertex."""

    vertex: int
    forward: bool  # arrived through an in-slot
    origin: int  # component the passed occurrence came from
    position: Position  # where that occurrence sat in the source diagram


class Strand(NamedTuple):
    """A unicursal component found by traversal."""

    passages: Tuple[Passage, ...]
    key: Position
    long: bool = False

    @property
    def word(self) -> Tuple[int, ...]:
        return tuple(p.vertex for p in self.passages)

    @property
    def origins(self) -> frozenset:
        return frozenset(p.origin for p in self.passages)


class FramedGraph(BaseModel):
    """
    Framed 4-graph with the fixed opposite pairing of half-edges.

    ``occurrences`` records, per (vertex, occurrence), the position the
    occurrence had in the diagram the graph was built from; smoothing keeps
    these so traversals can report which component each passage came from.
    ``loops`` holds one source position per crossingless circle.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[HalfEdge, HalfEdge], ...]
    occurrences: Tuple[Tuple[int, int, int, int], ...]  # (vertex, occ, comp, index)
    loops: Tuple[Position, ...] = ()
    long: bool = False
    ordered: bool = False
    oriented_components: Tuple[int, ...] = ()

    @property
    def free_loops(self) -> int:
        return len(self.loops)

    @property
    def vertex_count(self) -> int:
        return sum(1 for v in self.vertices if v != INF)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def mate(self) -> Dict[HalfEdge, HalfEdge]:
        result: Dict[HalfEdge, HalfEdge] = {}
        for a, b in self.edges:
            result[a] = b
            result[b] = a
        return result

    @cached_property
    def positions(self) -> Dict[Tuple[int, int], Position]:
        return {(v, k): (c, i) for v, k, c, i in self.occurrences}

    def origin(self, vertex: int, slot: int) -> int:
        return self.positions[(vertex, slot % 2)][0]

    def validate_pairing(self) -> None:
        """
        Raises:
            DiagramError: If some half-edge is unmatched or matched twice
        """
        counts = Counter(h for edge in self.edges for h in edge)
        expected = set()
        for v in self.vertices:
            expected.update([(v, 0), (v, 2)] if v == INF else [(v, s) for s in range(4)])
        bad = [h for h in expected if counts[h] != 1]
        extra = [h for h in counts if h not in expected]
        if bad or extra:
            raise DiagramError(f"Malformed half-edge pairing at {sorted(bad + extra)}")


def to_framed_graph(diagram: Diagram) -> FramedGraph:
    """Build the framed graph of a diagram."""
    seen: Counter = Counter()
    occ: Dict[Position, HalfEdge] = {}
    records: List[Tuple[int, int, int, int]] = []
    for c, comp in enumerate(diagram.components):
        for i, x in enumerate(comp.word):
            k = seen[x]
            seen[x] += 1
            occ[(c, i)] = (x, k)
            records.append((x, k, c, i))

    edges: List[Tuple[HalfEdge, HalfEdge]] = []
    loops: List[Position] = []
    for c, comp in enumerate(diagram.components):
        m = len(comp.word)
        if diagram.long and c == 0:
            if m == 0:
                edges.append(((INF, 2), (INF, 0)))
                continue
            edges.append(((INF, 2), occ[(0, 0)]))
            for i in range(m - 1):
                x, k = occ[(0, i)]
                edges.append(((x, k + 2), occ[(0, i + 1)]))
            x, k = occ[(0, m - 1)]
            edges.append(((x, k + 2), (INF, 0)))
            continue
        if m == 0:
            loops.append((c, -1))
            continue
        for i in range(m):
            x, k = occ[(c, i)]
            edges.append(((x, k + 2), occ[(c, (i + 1) % m)]))

    vertices = tuple(([INF] if diagram.long else []) + diagram.labels)
    return FramedGraph(
        vertices=vertices,
        edges=tuple(edges),
        occurrences=tuple(records),
        loops=tuple(loops),
        long=diagram.long,
        ordered=diagram.ordered,
        oriented_components=tuple(
            c for c, comp in enumerate(diagram.components) if comp.oriented
        ),
    )


def _walk(graph: FramedGraph, start: HalfEdge, used: set) -> List[Passage]:
    passages: List[Passage] = []
    h = start
    while True:
        used.add(h)
        arrival = graph.mate[h]
        used.add(arrival)
        v, s = arrival
        if v == INF:
            break
        passages.append(
            Passage(
                vertex=v,
                forward=s < 2,
                origin=graph.origin(v, s),
                position=graph.positions[(v, s % 2)],
            )
        )
        h = (v, opposite(s))
        if h == start:
            break
    return passages


def traverse(graph: FramedGraph) -> List[Strand]:
    """
    Unicursal components of the graph, always continuing through opposite half-edges.

    The long component comes first and runs from its start to its end. Closed
    components start at their smallest source position and run in the direction
    that arrives there through an in-slot. Crossingless circles are not included.
    """
    used: set = set()
    strands: List[Strand] = []
    if graph.long:
        strands.append(Strand(passages=tuple(_walk(graph, (INF, 2), used)), key=(-1, -1), long=True))

    for v, k, c, i in sorted(graph.occurrences, key=lambda r: (r[2], r[3])):
        arrival = (v, k)
        if arrival in used:
            continue
        passages = _walk(graph, graph.mate[arrival], used)
        strands.append(Strand(passages=tuple(passages), key=(c, i)))
    return strands


def strand_orientation(graph: FramedGraph, strand: Strand) -> Tuple[bool, bool]:
    """
    Whether a traversed strand inherits an orientation, and whether it runs backward.

    A strand is oriented when every passage comes from an oriented component
    and all passages agree in direction.
    """
    if not strand.passages:
        return False, False
    oriented = set(graph.oriented_components)
    if not all(p.origin in oriented for p in strand.passages):
        return False, False
    directions = {p.forward for p in strand.passages}
    if len(directions) != 1:
        return False, False
    return True, not directions.pop()


def from_framed_graph(graph: FramedGraph) -> Diagram:
    """
    Read a diagram back off a framed graph.

    Components are ordered by their smallest source position (the long
    component first); crossingless circles become empty components.

    Raises:
        DiagramError: If the pairing is malformed
    """
    graph.validate_pairing()

    entries: List[Tuple[Position, Tuple[int, ...], bool]] = []
    for strand in traverse(graph):
        oriented, backward = strand_orientation(graph, strand)
        word = strand.word[::-1] if backward and not strand.long else strand.word
        entries.append((strand.key, word, oriented))
    for position in graph.loops:
        entries.append((position, (), False))

    entries.sort(key=lambda e: e[0])
    return build_diagram(
        [w for _, w, _ in entries],
        oriented=tuple(o for _, _, o in entries),
        long=graph.long,
        ordered=graph.ordered,
    )


def smooth_vertex(graph: FramedGraph, x: int, resolution: Resolution) -> FramedGraph:
    """
    Remove vertex ``x`` by repasting its four half-edges in pairs.

    Raises:
        DiagramError: If ``x`` is not a vertex of the graph
    """
    if x == INF or x not in graph.vertices:
        raise DiagramError(f"Cannot smooth unknown crossing {x}")

    pairing = _PAIRINGS[resolution]
    mate = graph.mate
    kept = [e for e in graph.edges if e[0][0] != x and e[1][0] != x]

    visited: set = set()
    for s in range(4):
        near = mate[(x, s)]
        if near[0] == x or s in visited:
            continue
        cur = s
        while True:
            visited.add(cur)
            t = pairing[cur]
            visited.add(t)
            far = mate[(x, t)]
            if far[0] != x:
                break
            cur = far[1]
        kept.append((near, far))

    loops = list(graph.loops)
    remaining = {s for s in range(4) if s not in visited}
    while remaining:
        s = min(remaining)
        cur = s
        while cur in remaining:
            remaining.discard(cur)
            t = pairing[cur]
            remaining.discard(t)
            cur = mate[(x, t)][1]
        loops.append(graph.positions[(x, s % 2)])

    # model_copy would carry the cached mate table along
    return FramedGraph(
        vertices=tuple(v for v in graph.vertices if v != x),
        edges=tuple(kept),
        occurrences=tuple(r for r in graph.occurrences if r[0] != x),
        loops=tuple(loops),
        long=graph.long,
        ordered=graph.ordered,
        oriented_components=graph.oriented_components,
    )


def smooth_graph(graph: FramedGraph, choice: SmoothingChoice) -> FramedGraph:
    for x, resolution in choice.choices:
        graph = smooth_vertex(graph, x, resolution)
    return graph
