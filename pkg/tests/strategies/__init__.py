"""Hypothesis strategies for random diagrams and move instances."""

from typing import Iterable, Optional

from hypothesis import assume
from hypothesis import strategies as st

from free_links.models import Diagram, MoveInstance, MoveKind
from free_links.moves import find_moves


@st.composite
def diagrams(
    draw,
    max_crossings: int = 6,
    min_components: int = 1,
    max_components: int = 3,
    long: Optional[bool] = None,
    ordered: Optional[bool] = None,
    oriented: Optional[bool] = None,
) -> Diagram:
    """Valid diagrams: a shuffled double-occurrence word cut into components."""
    n = draw(st.integers(0, max_crossings))
    letters = draw(st.permutations([x for x in range(1, n + 1) for _ in range(2)]))
    k = draw(st.integers(min_components, max_components))
    cuts = sorted(draw(st.lists(st.integers(0, 2 * n), min_size=k - 1, max_size=k - 1)))
    bounds = [0, *cuts, 2 * n]
    words = [tuple(letters[a:b]) for a, b in zip(bounds, bounds[1:])]

    marks = tuple(
        bool(word) and (draw(st.booleans()) if oriented is None else oriented) for word in words
    )
    return Diagram.from_words(
        words,
        oriented=marks,
        long=draw(st.booleans()) if long is None else long,
        ordered=draw(st.booleans()) if ordered is None else ordered,
    )


def knots(max_crossings: int = 6, long: bool = False, oriented: Optional[bool] = None):
    return diagrams(
        max_crossings=max_crossings,
        min_components=1,
        max_components=1,
        long=long,
        ordered=False,
        oriented=oriented,
    )


def long_knots(max_crossings: int = 6):
    return knots(max_crossings=max_crossings, long=True)


@st.composite
def oriented_links(draw, max_crossings: int = 5) -> Diagram:
    """Two-component closed links, first component oriented, second not."""
    d = draw(
        diagrams(
            max_crossings=max_crossings,
            min_components=2,
            max_components=2,
            long=False,
            ordered=True,
            oriented=False,
        )
    )
    assume(d.words[0])
    return Diagram.from_words(d.words, oriented=(True, False), ordered=True)


@st.composite
def diagrams_with_move(
    draw, source=None, kinds: Optional[Iterable[MoveKind]] = None
) -> tuple[Diagram, MoveInstance]:
    """A diagram together with one of its move instances."""
    d = draw(source if source is not None else diagrams())
    moves = find_moves(d, kinds)
    assume(moves)
    return d, draw(st.sampled_from(moves))
