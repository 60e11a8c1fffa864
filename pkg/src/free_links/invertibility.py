"""Non-invertibility certificates, the distance-sequence invariant and built-in examples."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from .brackets import (
    LINK,
    ZG_1_OR,
    bracket_curly2,
    bracket_square_or,
    delta,
    in_oriented_link_category,
    zg_project,
)
from .canonical import (
    canonical_form,
    forget_orientation,
    orient,
    reverse_orientation,
    swap_components,
)
from .errors import CertificateError
from .gauss_code import build_diagram, component_of, linked, parse_diagram
from .models import (
    BetaOrbit,
    Certificate,
    Condition,
    Diagram,
    Parity,
    ParityKind,
    SymmetryConfig,
    ZgElement,
)
from .moves import find_r2_site
from .parity import parities

logger = logging.getLogger(__name__)

EXAMPLE_LINK = "+1 2 3 4 5 6 7 8 9 10 11 ; 1 9 5 2 7 11 3 10 6 4 8"
EXAMPLE_KNOT = "1 2 3 4 5 6 7 8 9 10 11 12 1 10 6 3 8 12 4 11 7 5 9 2"

SEARCH_LIMIT = 8

LONG_THEOREM = "long"
LINK_THEOREM = "link"
KNOT_DELTA_THEOREM = "knot-delta"

# Ordered, no reversal of anything: the long component is compared as written.
_RIGID = SymmetryConfig(
    allow_component_permutation=False,
    allow_rotation=False,
    allow_reflection_per_component=False,
)
# Ordered links up to rotations and reversal of unoriented components.
_ORDERED = SymmetryConfig(allow_component_permutation=False)


def builtin_example_link() -> Diagram:
    """Two-component link with every crossing between the components, first one oriented."""
    return parse_diagram(EXAMPLE_LINK)


def builtin_example_knot() -> Diagram:
    """Knot with a unique chord linked with all others; splitting there gives the example link."""
    return parse_diagram(EXAMPLE_KNOT)


def orbit_representative(sequence: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    """Least rotation of the sequence or of its negation mod ``n``."""
    if not sequence:
        return ()
    negated = tuple((-x) % n for x in sequence)
    return min(
        s[i:] + s[:i] for s in (tuple(sequence), negated) for i in range(len(sequence))
    )


def beta_sequence(diagram: Diagram, swap: bool = False) -> BetaOrbit:
    """
    Distances along the second component between crossings consecutive along the first.

    Args:
        diagram: Two-component link, all crossings between components, first oriented
        swap: Exchange the roles of the components first

    Raises:
        CertificateError: If the diagram has the wrong shape
    """
    if swap:
        if len(diagram.components) != 2:
            raise CertificateError("Distance sequences need two components", str(diagram))
        diagram = orient(forget_orientation(swap_components(diagram)), [0])

    if len(diagram.components) != 2:
        raise CertificateError("Distance sequences need two components", str(diagram))
    if not diagram.components[0].oriented:
        raise CertificateError("The first component must carry an orientation", str(diagram))
    inner = [x for x in diagram.labels if component_of(diagram, x) is not None]
    if inner:
        raise CertificateError(f"Crossing {inner[0]} lies on a single component", str(diagram))

    first, second = diagram.words
    n = len(first)
    where = {x: i for i, x in enumerate(second)}
    sequence = tuple((where[first[(i + 1) % n]] - where[first[i]]) % n for i in range(n))
    return BetaOrbit(n=n, sequence=sequence, representative=orbit_representative(sequence, n))


def _first_even(diagram: Diagram) -> Optional[int]:
    return next(
        (x for x, p in parities(diagram, ParityKind.GAUSSIAN).items() if p == Parity.EVEN), None
    )


def _irreducibility(diagram: Diagram) -> Condition:
    site = find_r2_site(diagram)
    return Condition(
        name="r2_irreducible",
        holds=site is None,
        witness=None if site is None else f"bigon {site.labels[0]},{site.labels[1]}",
    )


def check_long_theorem(diagram: Diagram, max_crossings: int = 20) -> Certificate:
    """
    Certificate for a long knot: all crossings odd, no decreasing second move,
    and not isomorphic to itself with the orientation reversed.

    Raises:
        CertificateError: If the diagram is not a one-component long knot
    """
    if not diagram.long or len(diagram.components) != 1:
        raise CertificateError("The long-knot theorem needs a one-component long knot", str(diagram))

    even = _first_even(diagram)
    odd = Condition(
        name="all_crossings_odd",
        holds=even is None,
        witness=None if even is None else f"crossing {even} is even",
    )
    irreducible = _irreducibility(diagram)

    canon = canonical_form(diagram, _RIGID)
    reversed_canon = canonical_form(reverse_orientation(diagram, [0]), _RIGID)
    asymmetric = Condition(
        name="not_reversal_isomorphic",
        holds=canon != reversed_canon,
        witness=str(reversed_canon),
    )

    consistency = []
    if odd.holds and irreducible.holds:
        value = bracket_square_or(diagram, max_crossings)
        expected = zg_project([diagram], ZG_1_OR)
        consistency.append(
            Condition(
                name="bracket_is_self",
                holds=value == expected,
                witness=", ".join(value.member_codes()),
            )
        )
    return Certificate.from_conditions(LONG_THEOREM, [odd, irreducible, asymmetric], consistency)


def _linear_words(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Linear double-occurrence words on labels 1..n numbered by first occurrence,
    in lexicographic order, skipping curls and bigons.
    """
    word: List[int] = []
    counts = [0] * (n + 2)
    # label pair -> end positions of adjacent occurrences
    pairs: Dict[frozenset, List[int]] = {}

    def extend(next_label: int) -> Iterator[Tuple[int, ...]]:
        if len(word) == 2 * n:
            yield tuple(word)
            return
        k = len(word)
        candidates = [x for x in range(1, next_label) if counts[x] == 1]
        if next_label <= n:
            candidates.append(next_label)
        for x in candidates:
            if word and word[-1] == x:
                continue
            key = frozenset((word[-1], x)) if word else None
            if key is not None and any(end < k - 1 for end in pairs.get(key, [])):
                continue
            word.append(x)
            counts[x] += 1
            if key is not None:
                pairs.setdefault(key, []).append(k)
            yield from extend(next_label + 1 if x == next_label else next_label)
            if key is not None:
                pairs[key].pop()
            counts[x] -= 1
            word.pop()

    yield from extend(1)


def _all_odd(word: Tuple[int, ...]) -> bool:
    spans = {}
    for i, x in enumerate(word):
        spans.setdefault(x, []).append(i)
    for x, (i, j) in spans.items():
        inside = sum(1 for y, (a, b) in spans.items() if y != x and (i < a < j) != (i < b < j))
        if inside % 2 == 0:
            return False
    return True


def _relabeled(word: Tuple[int, ...]) -> Tuple[int, ...]:
    mapping: Dict[int, int] = {}
    return tuple(mapping.setdefault(x, len(mapping) + 1) for x in word)


def search_long_example(max_n: int) -> Optional[Diagram]:
    """
    Smallest long knot, lexicographically least among its size, meeting all
    three conditions of the long-knot theorem.

    Raises:
        CertificateError: If ``max_n`` exceeds the search guard
    """
    if max_n > SEARCH_LIMIT:
        raise CertificateError(f"Search is limited to {SEARCH_LIMIT} crossings, got {max_n}")

    for n in range(1, max_n + 1):
        checked = 0
        for word in _linear_words(n):
            checked += 1
            if not _all_odd(word) or _relabeled(word[::-1]) == word:
                continue
            logger.debug(f"Long witness with {n} crossings after {checked} candidates")
            return build_diagram([word], long=True)
        logger.debug(f"No long witness with {n} crossings ({checked} candidates)")
    return None


def _as_link(diagram: Diagram) -> Diagram:
    """Ordered copy with only the first component oriented."""
    return build_diagram(
        diagram.words, oriented=(True, False), long=diagram.long, ordered=True
    )


def check_link_theorem(
    diagram: Diagram,
    symmetry: Optional[SymmetryConfig] = None,
    max_crossings: int = 20,
) -> Certificate:
    """
    Certificate for a two-component link with an oriented first component.

    Conditions: every crossing joins the two components; no decreasing second
    move applies; the link differs from itself with the first component
    reversed; and, disregarding orientation, it differs from the link with the
    components interchanged.

    Args:
        diagram: Link with an odd number of intercomponent crossings
        symmetry: Symmetries used by the two isomorphism queries; defaults to
            rotations and reversal of unoriented components, no permutation

    Raises:
        CertificateError: If the link has the wrong shape
    """
    if not in_oriented_link_category(diagram):
        raise CertificateError(
            "The link theorem needs two components, the first oriented, with odd linking",
            str(diagram),
        )
    cfg = symmetry or _ORDERED
    cfg = cfg.model_copy(update={"allow_component_permutation": False})
    link = _as_link(diagram)

    inner = next((x for x in link.labels if component_of(link, x) is not None), None)
    between = Condition(
        name="all_crossings_intercomponent",
        holds=inner is None,
        witness=None if inner is None else f"crossing {inner} lies on one component",
    )
    irreducible = _irreducibility(link)

    canon = canonical_form(link, cfg)
    flipped = canonical_form(reverse_orientation(link, [0]), cfg)
    asymmetric = Condition(
        name="not_isomorphic_to_first_reversed",
        holds=canon != flipped,
        witness=str(flipped),
    )

    plain = forget_orientation(link)
    swapped = canonical_form(swap_components(plain), cfg)
    no_swap = Condition(
        name="no_role_swap_isomorphism",
        holds=canonical_form(plain, cfg) != swapped,
        witness=str(swapped),
    )

    consistency = []
    if between.holds and irreducible.holds:
        value = bracket_curly2(link, max_crossings)
        consistency.append(
            Condition(
                name="bracket_is_self",
                holds=value == zg_project([link], LINK),
                witness=", ".join(value.member_codes()),
            )
        )
    return Certificate.from_conditions(
        LINK_THEOREM, [between, irreducible, asymmetric, no_swap], consistency
    )


def symmetrized_bracket(diagram: Diagram, max_crossings: int = 20) -> ZgElement:
    """
    Mod-2 sum, over the terms of the splitting map and over both choices of
    which component comes first and oriented, of the oriented two-component bracket.
    """
    members: Dict[str, Diagram] = {}
    for term in delta(diagram).terms:
        for first in (0, 1):
            ordered = term if first == 0 else swap_components(term)
            if not ordered.words[0]:
                continue
            link = build_diagram(ordered.words, oriented=(True, False), long=term.long)
            for member in bracket_curly2(link, max_crossings).members:
                code = str(member)
                if code in members:
                    del members[code]
                else:
                    members[code] = member
    return ZgElement(config=LINK, members=tuple(members[code] for code in sorted(members)))


def knot_noninvertibility_via_delta(diagram: Diagram, max_crossings: int = 20) -> Certificate:
    """
    Compare the symmetrized bracket of the splitting map for a knot and its reverse.

    Raises:
        CertificateError: If the diagram is not a closed one-component knot
    """
    if len(diagram.components) != 1 or diagram.long:
        raise CertificateError("The splitting-map criterion needs a closed knot", str(diagram))

    value = symmetrized_bracket(diagram, max_crossings)
    reverse_value = symmetrized_bracket(reverse_orientation(diagram, [0]), max_crossings)
    only_here = sorted(set(value.member_codes()) - set(reverse_value.member_codes()))
    only_there = sorted(set(reverse_value.member_codes()) - set(value.member_codes()))
    logger.debug(f"Symmetrized brackets: {len(value)} vs {len(reverse_value)} member(s)")

    witness = None
    if only_here or only_there:
        witness = f"only in knot: {only_here}; only in reverse: {only_there}"
    differs = Condition(
        name="bracket_differs_from_reverse", holds=value != reverse_value, witness=witness
    )
    return Certificate.from_conditions(KNOT_DELTA_THEOREM, [differs])


def check_chord_linked_with_all(diagram: Diagram, x: int) -> bool:
    """Whether chord ``x`` of a knot is linked with every other chord."""
    return all(linked(diagram, x, y) for y in diagram.labels if y != x)
