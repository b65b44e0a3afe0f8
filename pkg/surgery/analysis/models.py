import json
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class CosetTable(BaseModel):
    """
    Closed coset table of the trivial subgroup, live cosets renumbered 0..n-1.
    Column 2i is generator i, column 2i+1 its inverse; row 0 is the subgroup coset.
    """
    model_config = ConfigDict(frozen=True)

    generators: Tuple[str, ...] = ()
    rows: Tuple[Tuple[int, ...], ...] = ((),)

    @property
    def order(self) -> int:
        return len(self.rows)


class EnumerationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: Literal['finite', 'inconclusive']
    order: Optional[int] = Field(default=None, ge=1)
    cosets_used: int = Field(default=0, ge=0)
    table: Optional[CosetTable] = None

    @property
    def is_finite(self) -> bool:
        return self.outcome == 'finite'

    @classmethod
    def finite(cls, order: int, cosets_used: int, table: Optional[CosetTable] = None) -> 'EnumerationResult':
        return cls(outcome='finite', order=order, cosets_used=cosets_used, table=table)

    @classmethod
    def inconclusive(cls, cosets_used: int) -> 'EnumerationResult':
        return cls(outcome='inconclusive', cosets_used=cosets_used)

    def to_json(self) -> str:
        payload = {"outcome": self.outcome, "cosets_used": self.cosets_used}
        if self.order is not None:
            payload["order"] = self.order
        return json.dumps(payload, sort_keys=True)


class Witness(BaseModel):
    """The first invariant on which two presentations disagree"""
    model_config = ConfigDict(frozen=True)

    invariant: str
    left: str
    right: str


class Verdict(BaseModel):
    """
    Different(witness), Indistinguishable, or Inconclusive when some invariant of
    the battery could not be computed. Indistinguishable is not an isomorphism proof.
    """
    model_config = ConfigDict(frozen=True)

    different: bool
    witness: Optional[Witness] = None
    skipped: Tuple[str, ...] = ()

    @property
    def is_inconclusive(self) -> bool:
        return not self.different and bool(self.skipped)

    def to_json(self) -> str:
        if self.different:
            payload = {"verdict": "different"}
        elif self.skipped:
            payload = {"verdict": "inconclusive", "skipped": list(self.skipped)}
        else:
            payload = {"verdict": "indistinguishable"}
        if self.witness is not None:
            payload["witness"] = self.witness.model_dump()
        return json.dumps(payload, sort_keys=True)
