from fractions import Fraction
from typing import List, Tuple

from pydantic import Field, conint, validator
from typing_extensions import Annotated

from oblivagg.data_models.base import BaseModel
from oblivagg.data_models.field import FieldSpec

TAlphabet = Annotated[List[int], Field(min_items=1)]


class SumPosterior(BaseModel):
    """Exact posterior P(W | sum of W = s) for one achievable sum value s.

    Attributes:
        sum_value (int): the observed sum s.
        outcomes (List[Tuple[int, ...]]): input tuples consistent with s.
        counts (List[int]): number of equally likely draws realizing each outcome.
    """

    sum_value: conint(ge=0)  # type: ignore
    outcomes: List[Tuple[int, ...]]
    counts: List[conint(ge=1)]  # type: ignore

    @validator("counts")
    def validate_counts(cls, counts, values):
        if "outcomes" in values and len(counts) != len(values["outcomes"]):
            raise ValueError("every outcome needs exactly one count")
        return counts

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def probabilities(self) -> List[Fraction]:
        return [Fraction(c, self.total) for c in self.counts]

    @property
    def deterministic(self) -> bool:
        """True if the sum pins down the inputs completely."""
        return len(self.outcomes) == 1


class LeakageTable(BaseModel):
    """Posterior table of the inputs given their sum.

    Attributes:
        spec (FieldSpec): the field the sum is taken in.
        alphabets (List[List[int]]): per user, the values the input takes with equal
            probability; repeated values weight an outcome.
        posteriors (List[SumPosterior]): one posterior per achievable sum value.
    """

    spec: FieldSpec
    alphabets: Annotated[List[TAlphabet], Field(min_items=2)]
    posteriors: List[SumPosterior]

    @validator("alphabets")
    def validate_alphabets(cls, alphabets, values):
        if "spec" not in values:
            return alphabets
        q = values["spec"].q
        for alphabet in alphabets:
            for a in alphabet:
                if a < 0 or a >= q:
                    raise ValueError(f"input value {a} is not a residue modulo {q}")
        return alphabets

    @property
    def deterministic_sums(self) -> List[int]:
        return [p.sum_value for p in self.posteriors if p.deterministic]

    @property
    def fully_invertible(self) -> bool:
        return all(p.deterministic for p in self.posteriors)

    def posterior(self, sum_value: int) -> SumPosterior:
        for p in self.posteriors:
            if p.sum_value == sum_value:
                return p
        raise KeyError(f"sum value {sum_value} is not achievable")
