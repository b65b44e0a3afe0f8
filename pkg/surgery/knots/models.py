from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GaussCodeToken(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['O', 'U']
    crossing_label: int = Field(ge=1)
    sign: Literal[1, -1]

    def __str__(self) -> str:
        return f"{self.kind}{self.crossing_label}{'+' if self.sign > 0 else '-'}"


class Crossing(BaseModel):
    """
    A signed crossing. The undercrossing strand runs from under_in_arc to
    under_out_arc beneath over_arc.
    """
    model_config = ConfigDict(frozen=True)

    sign: Literal[1, -1]
    over_arc: int = Field(ge=0)
    under_in_arc: int = Field(ge=0)
    under_out_arc: int = Field(ge=0)


class KnotDiagram(BaseModel):
    """
    Oriented single-component knot diagram.

    `code` is the traversal as a signed Gauss code, rotated so that it opens with
    the undercrossing that starts arc 0; crossing i carries label i + 1 and the
    labels appear in order of first occurrence.
    """
    model_config = ConfigDict(frozen=True)

    crossings: Tuple[Crossing, ...] = ()
    arc_count: int = Field(default=1, ge=1)
    arc_order: Tuple[int, ...] = (0,)
    code: Tuple[GaussCodeToken, ...] = ()

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_unknot_diagram(self) -> bool:
        return not self.crossings


MoveKind = Literal['R1_add', 'R1_remove', 'R2_add', 'R2_remove', 'R3']


class Move(BaseModel):
    """A Reidemeister move addressed by arc ids (additions) or crossing ids (removals, R3)"""
    model_config = ConfigDict(frozen=True)

    kind: MoveKind
    arcs: Tuple[int, ...] = ()
    crossings: Tuple[int, ...] = ()
    sign: Optional[Literal[1, -1]] = None

    @model_validator(mode='after')
    def _sign_for_curls_only(self):
        if (self.kind == 'R1_add') != (self.sign is not None):
            raise ValueError("Only R1_add carries a curl sign")
        return self

    @classmethod
    def r1_add(cls, arc: int, sign: int) -> 'Move':
        return cls(kind='R1_add', arcs=(arc,), sign=sign)

    @classmethod
    def r1_remove(cls, crossing: int) -> 'Move':
        return cls(kind='R1_remove', crossings=(crossing,))

    @classmethod
    def r2_add(cls, arc_a: int, arc_b: int) -> 'Move':
        return cls(kind='R2_add', arcs=(arc_a, arc_b))

    @classmethod
    def r2_remove(cls, c1: int, c2: int) -> 'Move':
        return cls(kind='R2_remove', crossings=(c1, c2))

    @classmethod
    def r3(cls, c1: int, c2: int, c3: int) -> 'Move':
        return cls(kind='R3', crossings=(c1, c2, c3))

    def __str__(self) -> str:
        if self.kind == 'R1_add':
            return f"R1_add(arc={self.arcs[0]}, sign={self.sign:+d})"
        if self.kind == 'R2_add':
            return f"R2_add(arc_a={self.arcs[0]}, arc_b={self.arcs[1]})"
        return f"{self.kind}({', '.join(str(c) for c in self.crossings)})"
