"""Core data models for free links CLI."""

from collections import Counter
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

Label = int
Position = Tuple[int, int]  # (component index, index in word)


class Component(BaseModel):
    """One unicursal component: its Gauss word and whether it carries an orientation."""

    model_config = ConfigDict(frozen=True)

    word: Tuple[PositiveInt, ...] = Field(default=(), description="Crossing labels in order")
    oriented: bool = Field(False, description="Component carries an orientation mark")

    @model_validator(mode="after")
    def check_orientation_mark(self) -> "Component":
        """An orientation mark needs at least one crossing to be written down."""
        if self.oriented and not self.word:
            raise ValueError("oriented mark on empty component")
        return self


class Diagram(BaseModel):
    """
    Multi-component double-occurrence word.

    Closed components are read cyclically. When ``long`` is set the first
    component is the long one and is read linearly between its two infinite edges.
    """

    model_config = ConfigDict(frozen=True)

    components: Tuple[Component, ...] = Field(..., min_length=1)
    long: bool = Field(False, description="First component is a long component")
    ordered: bool = Field(False, description="Components are ordered")

    @model_validator(mode="after")
    def check_double_occurrence(self) -> "Diagram":
        """Every crossing label occurs exactly twice across all words."""
        counts = Counter(label for comp in self.components for label in comp.word)
        bad = sorted(label for label, count in counts.items() if count != 2)
        if bad:
            details = ", ".join(f"label {label} occurs {counts[label]} times" for label in bad)
            raise ValueError(details)
        return self

    @classmethod
    def from_words(
        cls,
        words: List[Tuple[int, ...]] | Tuple[Tuple[int, ...], ...],
        oriented: Tuple[bool, ...] | None = None,
        long: bool = False,
        ordered: bool = False,
    ) -> "Diagram":
        """Build a diagram from raw words and per-component orientation marks."""
        marks = oriented if oriented is not None else (False,) * len(words)
        return cls(
            components=tuple(
                Component(word=tuple(word), oriented=mark) for word, mark in zip(words, marks)
            ),
            long=long,
            ordered=ordered,
        )

    @property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(comp.word for comp in self.components)

    @property
    def labels(self) -> List[int]:
        """Crossing labels in order of first occurrence."""
        seen: Dict[int, None] = {}
        for comp in self.components:
            for label in comp.word:
                seen.setdefault(label, None)
        return list(seen)

    @property
    def crossing_count(self) -> int:
        return sum(len(comp.word) for comp in self.components) // 2

    def occurrences(self) -> Dict[int, List[Position]]:
        """Map each label to its two positions, in scan order."""
        result: Dict[int, List[Position]] = {}
        for c, comp in enumerate(self.components):
            for i, label in enumerate(comp.word):
                result.setdefault(label, []).append((c, i))
        return result

    def is_closed_component(self, index: int) -> bool:
        return not (self.long and index == 0)

    def __str__(self) -> str:
        from .gauss_code import emit_diagram

        return emit_diagram(self)


class SymmetryConfig(BaseModel):
    """Which symmetries identify two diagrams in canonical forms and isomorphism queries."""

    model_config = ConfigDict(frozen=True)

    allow_component_permutation: bool = True
    allow_rotation: bool = True  # never applies to the long component
    allow_reflection_per_component: bool = True  # never applies to oriented components

    @classmethod
    def for_diagram(cls, diagram: Diagram) -> "SymmetryConfig":
        """Symmetry implied by the diagram's own flags."""
        return cls(allow_component_permutation=not diagram.ordered)


class MoveKind(str, Enum):
    """The five move kinds, decreasing and increasing."""

    R1_REMOVE = "R1_remove"
    R1_ADD = "R1_add"
    R2_REMOVE = "R2_remove"
    R2_ADD = "R2_add"
    R3 = "R3"


class MoveInstance(BaseModel):
    """
    A move located on a specific diagram.

    ``site`` holds word positions for R1_remove (the two occurrences), R2_remove
    (two adjacent pairs) and R3 (three adjacent pairs). For R1_add and R2_add it
    holds arc positions ``(component, k)``: insertion before index ``k``.
    """

    model_config = ConfigDict(frozen=True)

    kind: MoveKind
    site: Tuple[Position, ...]
    labels: Tuple[int, ...] = ()
    antiparallel: bool = False

    def to_json_dict(self) -> Dict:
        data: Dict = {"kind": self.kind.value, "site": [list(p) for p in self.site]}
        if self.labels:
            data["labels"] = list(self.labels)
        if self.kind == MoveKind.R2_ADD:
            data["pattern"] = "antiparallel" if self.antiparallel else "parallel"
        return data


class MoveStep(BaseModel):
    """One step of an equivalence path."""

    model_config = ConfigDict(frozen=True)

    move: MoveInstance
    result: Diagram

    def to_json_dict(self) -> Dict:
        data = self.move.to_json_dict()
        data["resulting_diagram"] = str(self.result)
        return data


class ParityKind(str, Enum):
    GAUSSIAN = "gaussian"
    COMPONENT = "component"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class Resolution(str, Enum):
    """
    The two smoothings of a vertex with opposite pairs (a, c) and (b, d).

    A repastes (a, b)(c, d); B repastes (a, d)(b, c). With a, c the in/out
    half-edges of one occurrence and b, d those of the other, B keeps the
    traversal direction and A reverses one of the pieces.
    """

    A = "A"
    B = "B"


class SmoothingChoice(BaseModel):
    """A resolution for each crossing being smoothed."""

    model_config = ConfigDict(frozen=True)

    choices: Tuple[Tuple[int, Resolution], ...] = ()

    @classmethod
    def of(cls, mapping: Dict[int, Resolution]) -> "SmoothingChoice":
        return cls(choices=tuple(sorted(mapping.items())))

    @field_validator("choices")
    @classmethod
    def check_unique(cls, v):
        labels = [label for label, _ in v]
        if len(labels) != len(set(labels)):
            raise ValueError("crossing smoothed twice")
        return v

    def as_dict(self) -> Dict[int, Resolution]:
        return dict(self.choices)


class QuotientConfig(BaseModel):
    """Flags of a space of diagrams modulo second Reidemeister moves."""

    model_config = ConfigDict(frozen=True)

    long: bool = False
    ordered: bool = False
    orient_first: bool = Field(False, description="First component keeps its orientation mark")
    allow_reflection: bool = Field(True, description="Reversing components is a symmetry")
    kill_split_loops: bool = Field(True, description="A split crossingless circle is zero")

    def symmetry(self) -> SymmetryConfig:
        return SymmetryConfig(
            allow_component_permutation=not self.ordered,
            allow_reflection_per_component=self.allow_reflection,
        )


class ZgElement(BaseModel):
    """Mod-2 set of canonical R2-irreducible diagrams."""

    model_config = ConfigDict(frozen=True)

    config: QuotientConfig
    members: Tuple[Diagram, ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.members

    def member_codes(self) -> List[str]:
        return [str(d) for d in self.members]

    def __contains__(self, diagram: object) -> bool:
        return diagram in self.members

    def __len__(self) -> int:
        return len(self.members)

    def to_json_dict(self) -> Dict:
        return {"config": self.config.model_dump(), "members": self.member_codes()}


class FormalSum(BaseModel):
    """Mod-2 sum of raw diagrams, identified only up to relabeling and their own symmetry."""

    model_config = ConfigDict(frozen=True)

    terms: Tuple[Diagram, ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, diagram: object) -> bool:
        return diagram in self.terms

    def to_json_dict(self) -> Dict:
        return {"terms": [str(d) for d in self.terms]}


class BetaOrbit(BaseModel):
    """Cyclic distance sequence up to rotation and global negation mod n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    sequence: Tuple[int, ...]
    representative: Tuple[int, ...]

    @field_validator("sequence")
    @classmethod
    def check_residues(cls, v, info):
        n = info.data.get("n")
        if n is not None and any(not 1 <= x <= n - 1 for x in v) and n > 1:
            raise ValueError("residues must lie in 1..n-1")
        return v

    def contains(self, sequence: Tuple[int, ...] | List[int]) -> bool:
        """True if ``sequence`` is a rotation of this sequence or of its negation."""
        from .invertibility import orbit_representative

        return len(sequence) == len(self.sequence) and (
            orbit_representative(tuple(sequence), self.n) == self.representative
        )

    def negation(self) -> Tuple[int, ...]:
        return tuple((-x) % self.n for x in self.sequence)

    def to_json_dict(self) -> Dict:
        return {
            "n": self.n,
            "sequence": list(self.sequence),
            "representative": list(self.representative),
        }


class Verdict(str, Enum):
    NON_INVERTIBLE = "NonInvertible"
    INCONCLUSIVE = "Inconclusive"


class Condition(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    holds: bool
    witness: Optional[str] = None


class Certificate(BaseModel):
    """Verdict of a non-invertibility theorem check."""

    model_config = ConfigDict(frozen=True)

    theorem: str
    conditions: Tuple[Condition, ...]
    verdict: Verdict
    # cross-checks against the brackets; they never change the verdict
    consistency: Tuple[Condition, ...] = ()

    @model_validator(mode="after")
    def check_verdict(self) -> "Certificate":
        expected = (
            Verdict.NON_INVERTIBLE
            if all(c.holds for c in self.conditions)
            else Verdict.INCONCLUSIVE
        )
        if self.verdict != expected:
            raise ValueError("verdict must be NonInvertible exactly when every condition holds")
        return self

    @classmethod
    def from_conditions(
        cls,
        theorem: str,
        conditions: List[Condition],
        consistency: Optional[List[Condition]] = None,
    ) -> "Certificate":
        verdict = (
            Verdict.NON_INVERTIBLE if all(c.holds for c in conditions) else Verdict.INCONCLUSIVE
        )
        return cls(
            theorem=theorem,
            conditions=tuple(conditions),
            verdict=verdict,
            consistency=tuple(consistency or ()),
        )

    def condition(self, name: str) -> Condition:
        return next(c for c in self.conditions if c.name == name)

    def to_json_dict(self) -> Dict:
        return {
            "theorem": self.theorem,
            "conditions": [c.model_dump() for c in self.conditions],
            "consistency": [c.model_dump() for c in self.consistency],
            "verdict": self.verdict.value,
        }


class Report(BaseModel):
    """CLI output record. Timing goes to stderr only, so stdout stays deterministic."""

    command: str
    input: Optional[str] = None
    result: Any = None
    elapsed_seconds: float = Field(0.0, exclude=True)

    def to_json_dict(self) -> Dict:
        return {"command": self.command, "input": self.input, "result": self.result}


class Config(BaseModel):
    """Application configuration from environment variables."""

    model_config = ConfigDict(
        str_strip_whitespace=True,
        validate_assignment=True,
    )

    log_level: str = Field("INFO", description="Console log level")
    log_file: Optional[Path] = Field(None, description="Optional DEBUG log file")
    max_smoothing_crossings: int = Field(20, ge=0, le=24)
    search_max_crossings: int = Field(8, ge=1, le=8)
    examples_search_crossings: int = Field(6, ge=1, le=8)
    bfs_max_crossings: int = Field(6, ge=0)
    bfs_max_depth: int = Field(5, ge=0)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Invalid log level: {v}")
        return level
