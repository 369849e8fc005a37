"""Input validation helpers shared across estimators and generators."""

from __future__ import annotations

import numpy as np

from .dataset import Dataset, Modality
from .errors import PartitionError, SpecError
from .partitions import Partition


def as_rng(seed) -> np.random.Generator:
    """Accept an int seed, SeedSequence, or Generator; return a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def check_dataset(x) -> Dataset:
    """Coerce estimator input to a Dataset.

    Plain arrays are wrapped as continuous data with no geometry so the
    estimators compose with array-producing pipelines.
    """
    if isinstance(x, Dataset):
        return x
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    return Dataset(arr, Modality.IMAGE)


def check_partition(partition, d: int, allow_empty_block: bool = False) -> Partition:
    if not isinstance(partition, Partition):
        raise PartitionError(f"expected a Partition, got {type(partition).__name__}")
    if partition.d != d:
        raise PartitionError(
            f"partition covers {partition.d} coordinates, data has {d}"
        )
    if not allow_empty_block and (partition.idx_a.size == 0 or partition.idx_b.size == 0):
        raise PartitionError("both partition blocks must be non-empty")
    return partition


def check_integer_levels(data: Dataset, bins: int) -> np.ndarray:
    """Verify data holds integer labels in [0, bins); return them as int64."""
    arr = data.samples
    rounded = np.rint(arr)
    if not np.array_equal(rounded, arr):
        raise SpecError("expected integer-valued (discretized) data")
    if arr.min() < 0 or arr.max() >= bins:
        raise SpecError(
            f"labels outside [0, {bins}): range [{arr.min()}, {arr.max()}]"
        )
    return rounded.astype(np.int64)
