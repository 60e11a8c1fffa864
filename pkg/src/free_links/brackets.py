"""Smoothings, R2 quotient projections, bracket invariants and the splitting map."""

import itertools
import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .canonical import canonical_form, orient, reverse_orientation
from .errors import BracketError
from .framed_graph import (
    FramedGraph,
    Strand,
    from_framed_graph,
    smooth_graph,
    smooth_vertex,
    to_framed_graph,
    traverse,
)
from .gauss_code import build_diagram, component_of
from .models import (
    Diagram,
    FormalSum,
    Parity,
    ParityKind,
    QuotientConfig,
    Resolution,
    SmoothingChoice,
    SymmetryConfig,
    ZgElement,
)
from .moves import reduce_r2
from .parity import intercomponent_count, parities

logger = logging.getLogger(__name__)

DEFAULT_MAX_SMOOTHING = 20

# Unordered, unoriented; a split crossingless circle is zero.
ZG = QuotientConfig()
# Long knots: the long component is oriented from its start, reversal is not a symmetry.
ZG_1_OR = QuotientConfig(long=True, allow_reflection=False)
# Two-component links with an oriented first component and an unoriented second one.
LINK = QuotientConfig(ordered=True, orient_first=True)

SPLIT = Resolution.B
JOIN = Resolution.A


def smooth_at(diagram: Diagram, x: int, resolution: Resolution) -> Diagram:
    """
    Smooth one crossing.

    Components whose pieces no longer run in a single direction lose their
    orientation mark.
    """
    return from_framed_graph(smooth_vertex(to_framed_graph(diagram), x, resolution))


def smooth(diagram: Diagram, choice: SmoothingChoice) -> Diagram:
    """Apply every resolution of ``choice`` at once."""
    return from_framed_graph(smooth_graph(to_framed_graph(diagram), choice))


def split_smoothing_of(diagram: Diagram, x: int) -> Diagram:
    """
    The smoothing of ``x`` that yields two components.

    Raises:
        BracketError: If the diagram has more than one component
    """
    if len(diagram.components) != 1:
        raise BracketError("Splitting needs a one-component diagram", str(diagram))
    for resolution in (SPLIT, JOIN):
        result = smooth_at(diagram, x, resolution)
        if len(result.components) == 2:
            return result
    raise BracketError(f"No smoothing of {x} gives two components", str(diagram))


def make_formal_sum(diagrams: Iterable[Diagram]) -> FormalSum:
    """Mod-2 sum of diagrams, each identified up to relabeling and its own flags' symmetry."""
    counts: Dict[str, Diagram] = {}
    for diagram in diagrams:
        canon = canonical_form(diagram, SymmetryConfig.for_diagram(diagram))
        code = str(canon)
        if code in counts:
            del counts[code]
        else:
            counts[code] = canon
    return FormalSum(terms=tuple(counts[code] for code in sorted(counts)))


def _normalize(diagram: Diagram, cfg: QuotientConfig) -> Diagram:
    if diagram.long != cfg.long:
        raise BracketError("Long flag does not match the quotient configuration", str(diagram))
    marks = tuple(
        comp.oriented and cfg.orient_first and i == 0
        for i, comp in enumerate(diagram.components)
    )
    return build_diagram(diagram.words, oriented=marks, long=cfg.long, ordered=cfg.ordered)


def _has_split_loop(diagram: Diagram) -> bool:
    return len(diagram.components) > 1 and any(not comp.word for comp in diagram.components)


def zg_project(diagrams: FormalSum | Iterable[Diagram], cfg: QuotientConfig) -> ZgElement:
    """
    Project a sum of diagrams into the quotient described by ``cfg``.

    Each diagram is reduced by decreasing second moves and canonicalized;
    with ``kill_split_loops`` those holding a crossingless component next to
    others are dropped. Coefficients are taken mod 2.

    Raises:
        BracketError: If the diagrams do not share their flags
    """
    items = list(diagrams.terms if isinstance(diagrams, FormalSum) else diagrams)
    if len({(d.long, d.ordered) for d in items}) > 1:
        raise BracketError("Diagrams in one sum must share their flags")

    symmetry = cfg.symmetry()
    members: Dict[str, Diagram] = {}
    for diagram in items:
        reduced = reduce_r2(_normalize(diagram, cfg))
        if cfg.kill_split_loops and _has_split_loop(reduced):
            continue
        canon = canonical_form(reduced, symmetry)
        code = str(canon)
        if code in members:
            del members[code]
        else:
            members[code] = canon
    return ZgElement(config=cfg, members=tuple(members[code] for code in sorted(members)))


def _expand(
    diagram: Diagram, crossings: List[int], max_crossings: int
) -> Iterator[Tuple[SmoothingChoice, FramedGraph]]:
    if len(crossings) > max_crossings:
        raise BracketError(
            f"Refusing to expand {len(crossings)} crossings (limit {max_crossings})",
            str(diagram),
        )
    logger.debug(f"Expanding {2 ** len(crossings)} smoothings of {len(crossings)} crossing(s)")
    graph = to_framed_graph(diagram)
    for resolutions in itertools.product((Resolution.A, Resolution.B), repeat=len(crossings)):
        choice = SmoothingChoice(choices=tuple(zip(crossings, resolutions)))
        yield choice, smooth_graph(graph, choice)


def _component_count(graph: FramedGraph) -> int:
    return len(traverse(graph)) + graph.free_loops


def _intracomponent(diagram: Diagram) -> List[int]:
    return [x for x in diagram.labels if component_of(diagram, x) is not None]


def _require_components(diagram: Diagram, count: int, name: str) -> None:
    if len(diagram.components) != count:
        raise BracketError(
            f"{name} needs {count} component(s), got {len(diagram.components)}", str(diagram)
        )


def bracket_curly(diagram: Diagram, max_crossings: int = DEFAULT_MAX_SMOOTHING) -> ZgElement:
    """
    Sum over all smoothings of the intracomponent (even) crossings of a
    two-component diagram; summands of every component count are kept.
    """
    _require_components(diagram, 2, "The curly bracket")
    summands = [
        from_framed_graph(graph)
        for _, graph in _expand(diagram, _intracomponent(diagram), max_crossings)
    ]
    return zg_project(summands, ZG.model_copy(update={"long": diagram.long}))


def bracket_square(diagram: Diagram, max_crossings: int = DEFAULT_MAX_SMOOTHING) -> ZgElement:
    """One-component summands of the smoothings at Gaussian-even crossings of a knot."""
    _require_components(diagram, 1, "The square bracket")
    if diagram.long:
        raise BracketError("The square bracket takes a closed knot", str(diagram))
    return zg_project(_one_component_summands(diagram, max_crossings), ZG)


def bracket_square_or(diagram: Diagram, max_crossings: int = DEFAULT_MAX_SMOOTHING) -> ZgElement:
    """
    Oriented bracket of a long knot.

    Summands that keep a single long component are oriented from the initial
    infinite edge to the final one; reversal is not a symmetry of the result.
    """
    if not diagram.long:
        raise BracketError("The oriented square bracket takes a long knot", str(diagram))
    _require_components(diagram, 1, "The oriented square bracket")
    return zg_project(_one_component_summands(diagram, max_crossings), ZG_1_OR)


def _one_component_summands(diagram: Diagram, max_crossings: int) -> List[Diagram]:
    even = [x for x, p in parities(diagram, ParityKind.GAUSSIAN).items() if p == Parity.EVEN]
    return [
        from_framed_graph(graph)
        for _, graph in _expand(diagram, even, max_crossings)
        if _component_count(graph) == 1
    ]


def in_oriented_link_category(diagram: Diagram) -> bool:
    """Two components, the first oriented, with an odd number of intercomponent crossings."""
    return (
        len(diagram.components) == 2
        and diagram.components[0].oriented
        and intercomponent_count(diagram) % 2 == 1
    )


def _pure_strands(graph: FramedGraph) -> Optional[Tuple[Strand, Strand]]:
    """The two strands of a summand, first-component strand first, or None."""
    strands = traverse(graph)
    if graph.free_loops or len(strands) != 2:
        return None
    first = [s for s in strands if s.origins == {0}]
    second = [s for s in strands if s.origins == {1}]
    if len(first) != 1 or len(second) != 1:
        return None
    return first[0], second[0]


def _odd_oriented(
    strand: Strand, intercomponent: set, reverse_traversal: bool = False
) -> Tuple[int, ...]:
    passages = strand.passages[::-1] if reverse_traversal else strand.passages
    # a reversed traversal flips every agreement bit
    agree = sum(
        1 for p in passages if p.vertex in intercomponent and p.forward != reverse_traversal
    )
    word = tuple(p.vertex for p in passages)
    # the linking count is odd, so exactly one direction has an odd number of agreements
    return word if agree % 2 == 1 else word[::-1]


def orient_summand(
    original: Diagram,
    choice: SmoothingChoice,
    reverse_traversal: bool = False,
) -> Diagram:
    """
    Orient the first-component strand of a two-component smoothing.

    The strand is traversed in some direction; at each intercomponent crossing
    the passage either agrees or disagrees with the original orientation of the
    first component. The odd linking count splits into an odd and an even
    number of agreements, and the strand takes the direction backed by the odd
    one. A second move between the components adds two agreements or two
    disagreements and leaves that choice unchanged.
    ``reverse_traversal`` starts from the opposite direction and must give the
    same answer.

    Args:
        original: Link with an oriented first component and odd intercomponent count
        choice: Resolutions at intracomponent crossings only

    Returns:
        Ordered two-component diagram, first component oriented

    Raises:
        BracketError: If the preconditions do not hold
    """
    if not in_oriented_link_category(original):
        raise BracketError(
            "Orienting a summand needs an oriented two-component link with odd linking",
            str(original),
        )
    intracomponent = set(_intracomponent(original))
    if any(x not in intracomponent for x, _ in choice.choices):
        raise BracketError("Only intracomponent crossings may be smoothed", str(original))

    graph = smooth_graph(to_framed_graph(original), choice)
    strands = _pure_strands(graph)
    if strands is None:
        raise BracketError("Smoothing does not leave exactly two components", str(original))

    intercomponent = set(original.labels) - intracomponent
    first = _odd_oriented(strands[0], intercomponent, reverse_traversal)
    return build_diagram(
        [first, strands[1].word], oriented=(True, False), long=original.long, ordered=True
    )


def _oriented_two_component_summands(diagram: Diagram, max_crossings: int) -> List[Diagram]:
    intercomponent = {x for x in diagram.labels if component_of(diagram, x) is None}
    summands = []
    for _, graph in _expand(diagram, _intracomponent(diagram), max_crossings):
        strands = _pure_strands(graph)
        if strands is None:
            continue
        first = _odd_oriented(strands[0], intercomponent)
        summands.append(
            build_diagram(
                [first, strands[1].word], oriented=(True, False), long=diagram.long, ordered=True
            )
        )
    return summands


def bracket_curly2(diagram: Diagram, max_crossings: int = DEFAULT_MAX_SMOOTHING) -> ZgElement:
    """
    Oriented two-component bracket.

    Zero when the number of intercomponent crossings is even. Otherwise the
    sum over smoothings of intracomponent crossings that leave exactly two
    components, each summand oriented by the odd-agreement rule.

    Raises:
        BracketError: If the diagram is not a two-component link with its first component oriented
    """
    _require_components(diagram, 2, "The oriented two-component bracket")
    if not diagram.components[0].oriented:
        raise BracketError("The first component must carry an orientation", str(diagram))
    cfg = LINK.model_copy(update={"long": diagram.long})
    if intercomponent_count(diagram) % 2 == 0:
        return ZgElement(config=cfg)
    return zg_project(_oriented_two_component_summands(diagram, max_crossings), cfg)


def bracket_two_component(diagram: Diagram, max_crossings: int = DEFAULT_MAX_SMOOTHING) -> ZgElement:
    """Unoriented sum of the two-component summands of the curly bracket."""
    _require_components(diagram, 2, "The two-component bracket")
    summands = [
        from_framed_graph(graph)
        for _, graph in _expand(diagram, _intracomponent(diagram), max_crossings)
        if _pure_strands(graph) is not None
    ]
    return zg_project(summands, ZG.model_copy(update={"long": diagram.long}))


def delta(diagram: Diagram, parity: Optional[Parity] = None) -> FormalSum:
    """
    Sum of the splitting smoothings over all crossings of a knot, or over
    those of the given Gaussian parity. The knot is read as oriented in its
    written direction, so both components of each summand are oriented.

    Raises:
        BracketError: If the diagram is not a closed one-component knot
    """
    _require_components(diagram, 1, "The splitting map")
    if diagram.long:
        raise BracketError("The splitting map takes a closed knot", str(diagram))

    if parity is None:
        crossings = diagram.labels
    else:
        crossings = [x for x, p in parities(diagram, ParityKind.GAUSSIAN).items() if p == parity]

    oriented = orient(diagram, [0]) if diagram.components[0].word else diagram
    summands = [split_smoothing_of(oriented, x) for x in crossings]
    logger.debug(f"Splitting map produced {len(summands)} summand(s)")
    return make_formal_sum(summands)


def delta_parity(diagram: Diagram, parity: Parity) -> FormalSum:
    return delta(diagram, parity)


def reverse_summands(total: FormalSum) -> FormalSum:
    """Reverse every component of every term."""
    return make_formal_sum(
        reverse_orientation(term, range(len(term.components))) for term in total.terms
    )
