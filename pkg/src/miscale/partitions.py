"""Bipartitions of coordinate space.

Three cut families, each parameterized by a single integer L:

* ``LR``  -- first L tokens (text) or first L pixel columns (images) vs rest;
* ``TB``  -- first L pixel rows vs rest;
* ``CS``  -- centered L-by-L pixel block (all channels) vs surroundings.

Coordinates are flat indices into the row-major (H, W, C) layout, or into
the (seq_len * embed_dim) layout for token sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset
from .errors import BoundsError, FamilyError, PartitionError

FAMILIES = ("LR", "TB", "CS")


@dataclass(frozen=True)
class Partition:
    family: str
    L: int
    lmax: int
    idx_a: np.ndarray
    idx_b: np.ndarray
    grid_shape: tuple[int, int, int] | None = None
    embed_dim: int | None = None

    def __post_init__(self):
        a = np.asarray(self.idx_a, dtype=np.intp)
        b = np.asarray(self.idx_b, dtype=np.intp)
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "idx_a", a)
        object.__setattr__(self, "idx_b", b)
        if self.family not in FAMILIES:
            raise FamilyError(f"unknown family {self.family!r}")
        d = a.size + b.size
        joint = np.concatenate([a, b])
        if np.unique(joint).size != d or joint.min(initial=0) < 0 or (
            d and joint.max(initial=-1) != d - 1
        ):
            raise PartitionError("idx_a and idx_b must disjointly cover 0..D-1")

    @property
    def d(self) -> int:
        return self.idx_a.size + self.idx_b.size


def _grid_indices(h: int, w: int, c: int, rows, cols) -> np.ndarray:
    hh, ww, cc = np.meshgrid(rows, cols, np.arange(c), indexing="ij")
    return ((hh * w + ww) * c + cc).ravel()


def make_partition(
    family: str,
    L: int,
    *,
    grid_shape: tuple[int, int, int] | None = None,
    seq_len: int | None = None,
    embed_dim: int = 1,
) -> Partition:
    """Build the (A, B) coordinate split for one cut of one family.

    Exactly one of ``grid_shape`` / ``seq_len`` describes the geometry. For
    CS the block is centered, ties broken toward the top-left corner.
    """
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}")
    if (grid_shape is None) == (seq_len is None):
        raise FamilyError("pass exactly one of grid_shape or seq_len")

    if seq_len is not None:
        if family != "LR":
            raise FamilyError(f"family {family} requires 2-D grid data")
        lmax = seq_len
        if not 0 <= L <= lmax:
            raise BoundsError(f"L={L} outside [0, {lmax}]")
        d = seq_len * embed_dim
        split = L * embed_dim
        idx = np.arange(d, dtype=np.intp)
        return Partition(family, L, lmax, idx[:split], idx[split:],
                         embed_dim=embed_dim)

    h, w, c = grid_shape
    all_idx = np.arange(h * w * c, dtype=np.intp)
    if family == "TB":
        lmax = h
        if not 0 <= L <= lmax:
            raise BoundsError(f"L={L} outside [0, {lmax}]")
        split = L * w * c
        idx_a, idx_b = all_idx[:split], all_idx[split:]
    elif family == "LR":
        lmax = w
        if not 0 <= L <= lmax:
            raise BoundsError(f"L={L} outside [0, {lmax}]")
        idx_a = _grid_indices(h, w, c, np.arange(h), np.arange(L))
        mask = np.zeros(h * w * c, dtype=bool)
        mask[idx_a] = True
        idx_b = all_idx[~mask]
    else:  # CS
        lmax = min(h, w)
        if not 0 <= L <= lmax:
            raise BoundsError(f"L={L} outside [0, {lmax}]")
        r0 = (h - L) // 2
        c0 = (w - L) // 2
        idx_a = _grid_indices(h, w, c, np.arange(r0, r0 + L), np.arange(c0, c0 + L))
        mask = np.zeros(h * w * c, dtype=bool)
        mask[idx_a] = True
        idx_b = all_idx[~mask]
    return Partition(family, L, lmax, np.sort(idx_a), np.sort(idx_b),
                     grid_shape=(h, w, c))


def partition_for(data: Dataset, family: str, L: int) -> Partition:
    """Partition matching a dataset's own geometry."""
    if data.grid_shape is not None:
        return make_partition(family, L, grid_shape=data.grid_shape)
    if data.embed_dim is not None:
        return make_partition(family, L, seq_len=data.seq_len, embed_dim=data.embed_dim)
    # flat data: treat coordinates as a 1-D chain of D tokens
    return make_partition(family, L, seq_len=data.d, embed_dim=1)


def split_blocks(data: Dataset, partition: Partition) -> tuple[np.ndarray, np.ndarray]:
    """Return (samples_A, samples_B) column blocks for a partition."""
    if partition.d != data.d:
        raise PartitionError(
            f"partition covers {partition.d} coordinates, dataset has {data.d}"
        )
    return data.samples[:, partition.idx_a], data.samples[:, partition.idx_b]
