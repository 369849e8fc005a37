"""Dataset container and coordinate-level transforms.

A :class:`Dataset` is an immutable (N, D) matrix of float64 samples plus the
geometry needed to cut it into subregions: an optional image ``grid_shape``
(H, W, C) laid out row-major with channels fastest, or an ``embed_dim`` for
flattened token sequences (D = seq_len * embed_dim).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import BoundsError, ModalityError, SpecError


class Modality(str, enum.Enum):
    IMAGE = "image"
    TEXT_EMBEDDING = "text_embedding"
    CATEGORICAL_SYNTHETIC = "categorical_synthetic"


@dataclass(frozen=True)
class Dataset:
    """Immutable sample matrix with optional grid / sequence geometry."""

    samples: np.ndarray
    modality: Modality
    grid_shape: tuple[int, int, int] | None = None
    embed_dim: int | None = None

    def __post_init__(self):
        arr = np.ascontiguousarray(self.samples, dtype=np.float64)
        if arr.ndim != 2:
            raise SpecError(f"samples must be 2-D (N, D), got shape {arr.shape}")
        n, d = arr.shape
        if n < 1 or d < 1:
            raise SpecError(f"need N >= 1 and D >= 1, got N={n}, D={d}")
        if not np.isfinite(arr).all():
            raise SpecError("samples contain NaN or Inf")
        if self.grid_shape is not None:
            h, w, c = self.grid_shape
            if h * w * c != d:
                raise SpecError(
                    f"grid_shape {self.grid_shape} implies D={h * w * c}, data has D={d}"
                )
            object.__setattr__(self, "grid_shape", (int(h), int(w), int(c)))
        if self.modality is Modality.TEXT_EMBEDDING:
            if self.embed_dim is None or d % self.embed_dim != 0:
                raise SpecError(
                    f"text_embedding requires embed_dim dividing D={d}, got {self.embed_dim}"
                )
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "modality", Modality(self.modality))

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    @property
    def d(self) -> int:
        return self.samples.shape[1]

    @property
    def seq_len(self) -> int | None:
        if self.embed_dim is None:
            return None
        return self.d // self.embed_dim

    def with_samples(self, samples: np.ndarray) -> "Dataset":
        """New Dataset sharing this one's geometry tags."""
        return replace(self, samples=samples)


@dataclass(frozen=True)
class DiscretizationSpec:
    """Uniform binning of the value range [lo, hi] into ``bins`` levels."""

    bins: int
    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        if self.bins < 2:
            raise SpecError(f"bins must be >= 2, got {self.bins}")
        if not self.lo < self.hi:
            raise SpecError(f"need lo < hi, got lo={self.lo}, hi={self.hi}")


def discretize(data: Dataset, spec: DiscretizationSpec) -> Dataset:
    """Map values to integer bin labels.

    Value v goes to floor((clamp(v, lo, hi) - lo) / (hi - lo) * bins), except
    v = hi which goes to the top bin. Monotone in v; values outside [lo, hi]
    are clamped, never rejected.
    """
    v = np.clip(data.samples, spec.lo, spec.hi)
    scaled = (v - spec.lo) / (spec.hi - spec.lo) * spec.bins
    labels = np.minimum(np.floor(scaled), spec.bins - 1)
    return Dataset(
        samples=labels,
        modality=Modality.CATEGORICAL_SYNTHETIC,
        grid_shape=data.grid_shape,
        embed_dim=data.embed_dim,
    )


def random_shift(data: Dataset, rng_seed: int) -> Dataset:
    """Cyclically displace every sample by an independent uniform (dy, dx).

    Wrap-around shifts keep the per-sample value multiset intact and make
    single-pixel statistics translation invariant in expectation. Requires
    grid geometry; deterministic for a given seed.
    """
    if data.grid_shape is None:
        raise ModalityError("random_shift requires a dataset with grid_shape")
    h, w, c = data.grid_shape
    rng = np.random.default_rng(rng_seed)
    grids = data.samples.reshape(data.n, h, w, c)
    out = np.empty_like(grids)
    dy = rng.integers(0, h, size=data.n)
    dx = rng.integers(0, w, size=data.n)
    for i in range(data.n):
        out[i] = np.roll(grids[i], shift=(dy[i], dx[i]), axis=(0, 1))
    return data.with_samples(out.reshape(data.n, data.d))


def subsample(data: Dataset, n: int, rng_seed: int) -> Dataset:
    """Draw n samples without replacement, deterministically."""
    if not 1 <= n <= data.n:
        raise BoundsError(f"cannot subsample {n} of {data.n} samples")
    idx = np.sort(np.random.default_rng(rng_seed).choice(data.n, size=n, replace=False))
    return data.with_samples(data.samples[idx])
