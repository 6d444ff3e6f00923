"""Portable binary tensor container.

Layout (all integers little-endian unsigned 64-bit):

    magic(8) | dtype(1) | ndim(8) | dims(8 each) | payload

Magic is the ASCII tag ``PKTENSOR``. The dtype byte is 1 for float32 and
2 for float64. The payload holds little-endian row-major values and its
byte length must equal element-size * product(dims). Round trips are
bit-exact, including signed zeros and subnormals.
"""

from __future__ import annotations

import os
import struct

import numpy as np

MAGIC = b"PKTENSOR"

_DTYPE_CODES = {np.dtype("<f4"): 1, np.dtype("<f8"): 2}
_CODE_DTYPES = {1: np.dtype("<f4"), 2: np.dtype("<f8")}


class TensorFileError(Exception):
    """Base class for tensor container format errors."""


class BadMagicError(TensorFileError):
    """File does not start with the PKTENSOR tag."""


class BadDtypeError(TensorFileError):
    """Dtype byte is not a known element type."""


class TruncatedError(TensorFileError):
    """Header or payload is shorter than advertised."""


def write_tensor(path, values, dtype="f8"):
    """Write an array to `path` in the PKTENSOR container format.

    Parameters
    ----------
    path : str or Path
    values : array_like
        Finite values; written row-major (C order). Scalars are rejected,
        dims must be nonempty.
    dtype : {"f4", "f8"}
        Element type stored in the file.
    """
    arr = np.asarray(values)
    if arr.ndim == 0:
        raise ValueError("tensor must have at least one dimension")
    target = np.dtype("<f4") if dtype == "f4" else np.dtype("<f8")
    if dtype not in ("f4", "f8"):
        raise ValueError(f"unsupported dtype {dtype!r}")
    arr = np.ascontiguousarray(arr, dtype=target)
    if not np.all(np.isfinite(arr)):
        raise ValueError("tensor values must be finite")
    header = bytearray()
    header += MAGIC
    header += struct.pack("<B", _DTYPE_CODES[target])
    header += struct.pack("<Q", arr.ndim)
    for d in arr.shape:
        header += struct.pack("<Q", d)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "wb") as f:
        f.write(bytes(header))
        f.write(arr.tobytes(order="C"))
    os.replace(tmp, path)


def read_tensor(path):
    """Read a PKTENSOR file, validating the header before the payload.

    Returns
    -------
    (dims, values) : tuple of (tuple of int, np.ndarray)
        `values` has the dtype stored in the file and shape `dims`.

    Raises
    ------
    BadMagicError, BadDtypeError, TruncatedError
    """
    with open(path, "rb") as f:
        blob = f.read()
    if len(blob) < len(MAGIC):
        raise TruncatedError(f"{path}: file shorter than magic tag")
    if blob[: len(MAGIC)] != MAGIC:
        raise BadMagicError(f"{path}: bad magic {blob[:len(MAGIC)]!r}")
    off = len(MAGIC)
    if len(blob) < off + 1 + 8:
        raise TruncatedError(f"{path}: truncated header")
    code = blob[off]
    off += 1
    if code not in _CODE_DTYPES:
        raise BadDtypeError(f"{path}: unknown dtype code {code}")
    dt = _CODE_DTYPES[code]
    (ndim,) = struct.unpack_from("<Q", blob, off)
    off += 8
    if len(blob) < off + 8 * ndim:
        raise TruncatedError(f"{path}: truncated dims")
    dims = struct.unpack_from(f"<{ndim}Q", blob, off)
    off += 8 * ndim
    count = 1
    for d in dims:
        count *= d
    nbytes = count * dt.itemsize
    if len(blob) - off < nbytes:
        raise TruncatedError(
            f"{path}: payload has {len(blob) - off} bytes, expected {nbytes}"
        )
    values = np.frombuffer(blob[off : off + nbytes], dtype=dt).reshape(dims)
    return dims, values.copy()
