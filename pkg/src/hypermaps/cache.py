"""Binary on-disk store for F_k values.

Layout (all lengths little-endian)::

    header   b"HMFCACHE" + u16 version
    record   u32 payload_length + payload
    payload  u16 k, u16 m, u16 n, u16 lam,
             u32 len + numerator   (signed, little-endian two's complement)
             u32 len + denominator (unsigned, little-endian)

A missing file, a wrong magic or a different version yields an empty grid.
A truncated or malformed trailing record is dropped along with anything
after it.
"""
from __future__ import annotations

import logging
import os
import struct
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Dict, Tuple

from hypermaps.fseries import FGrid

__all__ = ["CACHE_MAGIC", "CACHE_VERSION", "load_cache", "save_cache", "read_records"]

log = logging.getLogger(__name__)

CACHE_MAGIC = b"HMFCACHE"
CACHE_VERSION = 1
_HEADER = struct.Struct("<8sH")
_LEN = struct.Struct("<I")
_KEY = struct.Struct("<4H")


def _int_bytes(x: int, signed: bool) -> bytes:
    if x == 0:
        return b""
    nbytes = (x.bit_length() + 8) // 8 if signed else (x.bit_length() + 7) // 8
    return x.to_bytes(nbytes, "little", signed=signed)


def _encode(key: Tuple[int, int, int, int], value: Fraction) -> bytes:
    num = _int_bytes(value.numerator, signed=True)
    den = _int_bytes(value.denominator, signed=False)
    payload = _KEY.pack(*key) + _LEN.pack(len(num)) + num + _LEN.pack(len(den)) + den
    return _LEN.pack(len(payload)) + payload


def read_records(data: bytes) -> Dict[Tuple[int, int, int, int], Fraction]:
    """Decode a cache image; returns ``{}`` on a header or version mismatch."""
    if len(data) < _HEADER.size:
        return {}
    magic, version = _HEADER.unpack_from(data, 0)
    if magic != CACHE_MAGIC or version != CACHE_VERSION:
        return {}
    out = {}
    pos = _HEADER.size
    end = len(data)
    while pos + _LEN.size <= end:
        (size,) = _LEN.unpack_from(data, pos)
        body = data[pos + _LEN.size : pos + _LEN.size + size]
        if len(body) != size:
            break
        try:
            key = _KEY.unpack_from(body, 0)
            off = _KEY.size
            (nlen,) = _LEN.unpack_from(body, off)
            off += _LEN.size
            num = int.from_bytes(body[off : off + nlen], "little", signed=True)
            off += nlen
            (dlen,) = _LEN.unpack_from(body, off)
            off += _LEN.size
            if off + dlen != size:
                break
            den = int.from_bytes(body[off : off + dlen], "little", signed=False)
        except struct.error:
            break
        if den <= 0:
            break
        out[key] = Fraction(num, den)
        pos += _LEN.size + size
    return out


def load_cache(path) -> FGrid:
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        return FGrid()
    records = read_records(data)
    log.debug("loaded %d cached F values from %s", len(records), path)
    return FGrid(records)


def save_cache(path, grid: FGrid) -> None:
    """Write all values of `grid` atomically, sorted by key."""
    path = Path(path)
    parts = [_HEADER.pack(CACHE_MAGIC, CACHE_VERSION)]
    for key in sorted(grid.values):
        parts.append(_encode(key, grid.values[key]))
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", dir=directory)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(b"".join(parts))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
