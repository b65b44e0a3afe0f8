from typing import Optional

from pydantic import BaseModel, ConfigDict

from surgery.groups.models import Word
from surgery.knots.models import KnotDiagram


class SurgerySpec(BaseModel):
    """Framed surgery along a knot. framing=None means the blackboard framing (the writhe)."""
    model_config = ConfigDict(frozen=True)

    diagram: KnotDiagram
    framing: Optional[int] = None


class LongitudeWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    word: Word
    exponent_sum: int

    @classmethod
    def of(cls, word: Word) -> 'LongitudeWord':
        return cls(word=word, exponent_sum=word.exponent_sum())
