from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator


class MorseForm(BaseModel):
    """
    f(x) = -(x_1^2 + ... + x_i^2) + (x_{i+1}^2 + ... + x_D^2) on the unit disc of
    dimension D = ambient_dim, negated when time_reversed.
    """
    model_config = ConfigDict(frozen=True)

    ambient_dim: int = Field(ge=1)
    index: int = Field(ge=0)
    time_reversed: bool = False

    @model_validator(mode='after')
    def _index_in_range(self):
        if self.index > self.ambient_dim:
            raise ValueError(f"index {self.index} exceeds ambient dimension {self.ambient_dim}")
        return self

    @property
    def signs(self) -> np.ndarray:
        """Diagonal of the form: -1 on the first `index` coordinates, +1 after"""
        signs = np.ones(self.ambient_dim)
        signs[:self.index] = -1.0
        return -signs if self.time_reversed else signs

    def reversed(self) -> 'MorseForm':
        return MorseForm(ambient_dim=self.ambient_dim, index=self.index, time_reversed=not self.time_reversed)

    def __str__(self) -> str:
        suffix = ", reversed" if self.time_reversed else ""
        return f"MorseForm(dim={self.ambient_dim}, index={self.index}{suffix})"


class PointCloud(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(ge=0)
    points: np.ndarray

    @field_validator("points", mode="before")
    @classmethod
    def _as_array(cls, value, info: ValidationInfo):
        array = np.asarray(value, dtype=float)
        if array.size == 0:
            return np.zeros((0, info.data.get("dim", 0)))
        return array

    @model_validator(mode='after')
    def _shape(self):
        if self.points.ndim != 2 or self.points.shape[1] != self.dim:
            raise ValueError(f"points must have shape (N, {self.dim}), got {self.points.shape}")
        if not np.all(np.isfinite(self.points)):
            raise ValueError("points must be finite")
        return self

    def __len__(self) -> int:
        return self.points.shape[0]


class LevelSetSample(BaseModel):
    """Points of f^-1(t) inside the closed unit disc; faces index grid quads when parametric"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    form: MorseForm
    t: float = Field(gt=-1.0, lt=1.0)
    cloud: PointCloud
    residual_tol: float = Field(gt=0)
    faces: Optional[np.ndarray] = None

    @property
    def points(self) -> np.ndarray:
        return self.cloud.points
