"""File ingestion and native persistence.

Formats handled here:

* IDX           -- big-endian magic + dims, uint8 payload (images or labels);
* embeddings    -- UTF-8 text, one ``token v1 v2 ...`` record per line;
* raw tensor    -- 16-byte header (magic ``MISC``, u32 N, u32 D, u32 flags)
                   followed by N*D little-endian f64, geometry in a sidecar
                   JSON descriptor at ``<path>.json``;
* CSV           -- header row then one sample per line, for inspection.
"""

from __future__ import annotations

import csv
import json
import struct
from pathlib import Path

import numpy as np

from .dataset import Dataset, Modality
from .errors import (
    BoundsError,
    FormatError,
    InsufficientDataError,
    TruncatedFileError,
)

IDX_MAGIC_IMAGES = 0x00000803
IDX_MAGIC_LABELS = 0x00000801
RAW_MAGIC = b"MISC"


def ingest_idx(path, limit: int | None = None) -> Dataset:
    """Read an IDX uint8 file into a Dataset.

    Image files (magic 0x00000803) become (H, W, 1) grids with byte values
    scaled onto [0, 1]; label files (magic 0x00000801) become N x 1 integer
    columns. ``limit`` caps the number of samples kept.
    """
    raw = Path(path).read_bytes()
    if len(raw) < 4:
        raise FormatError(f"{path}: too short to hold an IDX magic")
    (magic,) = struct.unpack(">I", raw[:4])
    if magic == IDX_MAGIC_IMAGES:
        if len(raw) < 16:
            raise FormatError(f"{path}: IDX image header truncated")
        count, h, w = struct.unpack(">III", raw[4:16])
        payload = raw[16:]
        if len(payload) < count * h * w:
            raise TruncatedFileError(
                f"{path}: header promises {count} {h}x{w} images, "
                f"payload holds {len(payload)} bytes"
            )
        n = count if limit is None else min(count, limit)
        pixels = np.frombuffer(payload, dtype=np.uint8, count=n * h * w)
        samples = pixels.astype(np.float64).reshape(n, h * w) / 255.0
        return Dataset(samples, Modality.IMAGE, grid_shape=(h, w, 1))
    if magic == IDX_MAGIC_LABELS:
        if len(raw) < 8:
            raise FormatError(f"{path}: IDX label header truncated")
        (count,) = struct.unpack(">I", raw[4:8])
        payload = raw[8:]
        if len(payload) < count:
            raise TruncatedFileError(
                f"{path}: header promises {count} labels, payload holds {len(payload)}"
            )
        n = count if limit is None else min(count, limit)
        labels = np.frombuffer(payload, dtype=np.uint8, count=n)
        return Dataset(labels.astype(np.float64)[:, None], Modality.CATEGORICAL_SYNTHETIC)
    raise FormatError(f"{path}: unknown IDX magic 0x{magic:08x}")


def read_embeddings(path) -> tuple[dict[str, np.ndarray], int]:
    """Parse a word-vector file into {token: vector} plus the vector width."""
    table: dict[str, np.ndarray] = {}
    width = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts:
                continue
            token, values = parts[0], parts[1:]
            if width is None:
                width = len(values)
                if width == 0:
                    raise FormatError(f"{path}:{lineno}: record has no vector values")
            elif len(values) != width:
                raise FormatError(
                    f"{path}:{lineno}: vector width {len(values)} != {width}"
                )
            try:
                table[token] = np.array(values, dtype=np.float64)
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc
    if width is None:
        raise FormatError(f"{path}: no embedding records found")
    return table, width


def ingest_embedded_text(
    corpus_path, embeddings_path, seq_len: int, stride: int
) -> Dataset:
    """Cut a whitespace-tokenized corpus into embedded fixed-length windows.

    Each window of ``seq_len`` tokens is flattened to seq_len * embed_dim
    coordinates; tokens missing from the embedding table map to zero vectors
    so all windows have identical width.
    """
    if seq_len < 1 or stride < 1:
        raise BoundsError(f"seq_len and stride must be >= 1, got {seq_len}, {stride}")
    table, embed_dim = read_embeddings(embeddings_path)
    tokens = Path(corpus_path).read_text(encoding="utf-8").split()
    if len(tokens) < seq_len:
        raise InsufficientDataError(
            f"corpus has {len(tokens)} tokens, need at least seq_len={seq_len}"
        )
    zero = np.zeros(embed_dim)
    starts = range(0, len(tokens) - seq_len + 1, stride)
    samples = np.empty((len(starts), seq_len * embed_dim))
    for row, s in enumerate(starts):
        window = [table.get(tok, zero) for tok in tokens[s : s + seq_len]]
        samples[row] = np.concatenate(window)
    return Dataset(samples, Modality.TEXT_EMBEDDING, embed_dim=embed_dim)


def save_dataset(data: Dataset, path, extra: dict | None = None) -> None:
    """Write the raw tensor file plus its JSON sidecar descriptor."""
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(RAW_MAGIC)
        fh.write(struct.pack("<III", data.n, data.d, 0))
        fh.write(data.samples.astype("<f8").tobytes())
    descriptor = {
        "n": data.n,
        "d": data.d,
        "modality": data.modality.value,
        "grid_shape": list(data.grid_shape) if data.grid_shape else None,
        "embed_dim": data.embed_dim,
    }
    if extra:
        descriptor.update(extra)
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(descriptor, indent=2, sort_keys=True) + "\n")


def load_dataset(path) -> Dataset:
    """Read a raw tensor file and its sidecar back into a Dataset."""
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < 16 or raw[:4] != RAW_MAGIC:
        raise FormatError(f"{path}: not a raw tensor file")
    n, d, _flags = struct.unpack("<III", raw[4:16])
    need = n * d * 8
    if len(raw) - 16 < need:
        raise TruncatedFileError(f"{path}: payload holds {len(raw) - 16} of {need} bytes")
    samples = np.frombuffer(raw, dtype="<f8", count=n * d, offset=16).reshape(n, d)
    sidecar = path.with_name(path.name + ".json")
    if not sidecar.exists():
        raise FormatError(f"{path}: missing sidecar descriptor {sidecar.name}")
    meta = json.loads(sidecar.read_text())
    grid = meta.get("grid_shape")
    return Dataset(
        samples,
        Modality(meta["modality"]),
        grid_shape=tuple(grid) if grid else None,
        embed_dim=meta.get("embed_dim"),
    )


def load_descriptor(path) -> dict:
    """Sidecar JSON contents for a raw tensor file."""
    path = Path(path)
    sidecar = path.with_name(path.name + ".json")
    if not sidecar.exists():
        raise FormatError(f"{path}: missing sidecar descriptor {sidecar.name}")
    return json.loads(sidecar.read_text())


def export_csv(data: Dataset, path) -> None:
    """Dump samples as CSV with an x0..x{D-1} header, for eyeballing."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{i}" for i in range(data.d)])
        for row in data.samples:
            writer.writerow([repr(float(v)) for v in row])
