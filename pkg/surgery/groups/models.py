from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

Letter = Tuple[int, int]
IntegerMatrix = List[List[int]]


def reduce_letters(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Cancel adjacent g g^-1 pairs with a single stack pass"""
    stack: List[Letter] = []
    for generator, sign in letters:
        if stack and stack[-1] == (generator, -sign):
            stack.pop()
        else:
            stack.append((generator, sign))
    return tuple(stack)


class Word(BaseModel):
    """
    A word in the generators of a presentation, stored as run-length syllables
    (generator index, non-zero exponent). Two words are equal when their freely
    reduced letter sequences agree.
    """
    model_config = ConfigDict(frozen=True)

    syllables: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> 'Word':
        syllables: List[List[int]] = []
        for generator, sign in letters:
            if sign not in (1, -1) or generator < 0:
                raise ValueError(f"Invalid letter ({generator}, {sign})")
            if syllables and syllables[-1][0] == generator and (syllables[-1][1] > 0) == (sign > 0):
                syllables[-1][1] += sign
            else:
                syllables.append([generator, sign])
        return cls(syllables=tuple((g, e) for g, e in syllables))

    @classmethod
    def power_of(cls, generator: int, exponent: int = 1) -> 'Word':
        if exponent == 0:
            return cls()
        return cls(syllables=((generator, exponent),))

    @property
    def letters(self) -> Tuple[Letter, ...]:
        expanded = []
        for generator, exponent in self.syllables:
            sign = 1 if exponent > 0 else -1
            expanded.extend([(generator, sign)] * abs(exponent))
        return tuple(expanded)

    @property
    def reduced_letters(self) -> Tuple[Letter, ...]:
        return reduce_letters(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    def generators(self) -> List[int]:
        return sorted({generator for generator, _ in self.syllables})

    def exponent_sum(self, generator: Optional[int] = None) -> int:
        return sum(e for g, e in self.syllables if generator is None or g == generator)

    def occurrences(self, generator: int) -> int:
        return sum(abs(e) for g, e in self.syllables if g == generator)

    def inverse(self) -> 'Word':
        return Word(syllables=tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: 'Word') -> 'Word':
        return Word.from_letters(self.letters + other.letters)

    def __pow__(self, k: int) -> 'Word':
        base = self if k >= 0 else self.inverse()
        return Word.from_letters(base.letters * abs(k))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.reduced_letters == other.reduced_letters

    def __hash__(self) -> int:
        return hash(self.reduced_letters)


class Presentation(BaseModel):
    """Finitely presented group; relators are read as w = 1"""
    model_config = ConfigDict(frozen=True)

    generators: Tuple[str, ...] = ()
    relators: Tuple[Word, ...] = ()

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        return self.generators.index(name)


class AbelianInvariants(BaseModel):
    """Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ..."""
    model_config = ConfigDict(frozen=True)

    free_rank: int = Field(default=0, ge=0)
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"
