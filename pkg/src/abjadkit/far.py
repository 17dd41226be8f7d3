"""Binary archives of named transducers.

Layout (all integers little-endian)::

    b"PAFR"  uint32 version  uint32 entry_count
    index:   entry_count x (uint16 key_len, key, uint64 offset, uint64 length, uint32 crc32)
    payloads, each:
        uint32 num_states, int32 start, uint32 num_finals,
        num_finals x (uint32 state, float64 weight),
        per state: uint32 num_arcs, num_arcs x (uint32 ilabel, uint32 olabel, float64 weight, uint32 next)

Offsets are absolute file positions.  Keys are written in sorted order so
identical input always produces identical bytes.
"""

from __future__ import annotations

import os
import re
import struct
import zlib
from typing import Mapping

from . import fst as F

MAGIC = b"PAFR"
VERSION = 1

_HEADER = struct.Struct("<4sII")
_INDEX_FIXED = struct.Struct("<QQI")
_KEY_LEN = struct.Struct("<H")
_FST_HEADER = struct.Struct("<IiI")
_FINAL = struct.Struct("<Id")
_COUNT = struct.Struct("<I")
_ARC = struct.Struct("<IIdI")

_KEY_RE = re.compile(r"[A-Z0-9_\-]+")


class FarError(Exception):
    pass


class BadMagic(FarError):
    pass


class UnsupportedVersion(FarError):
    pass


class KeyNotFound(FarError, KeyError):
    pass


class CorruptEntry(FarError):
    pass


def check_key(key: str) -> str:
    if not isinstance(key, str) or not _KEY_RE.fullmatch(key):
        raise ValueError(f"archive keys must be non-empty uppercase ASCII, got {key!r}")
    return key


def serialize_fst(fst: F.Fst) -> bytes:
    parts = [_FST_HEADER.pack(fst.num_states, fst.start, len(fst.finals()))]
    for state, weight in sorted(fst.finals().items()):
        parts.append(_FINAL.pack(state, weight))
    for s in fst.states():
        arcs = fst.arcs(s)
        parts.append(_COUNT.pack(len(arcs)))
        parts.extend(_ARC.pack(i, o, w, nxt) for i, o, w, nxt in arcs)
    return b"".join(parts)


def deserialize_fst(data: bytes) -> F.Fst:
    try:
        n, start, nfinal = _FST_HEADER.unpack_from(data, 0)
        pos = _FST_HEADER.size
        finals = {}
        for _ in range(nfinal):
            s, w = _FINAL.unpack_from(data, pos)
            finals[s] = w
            pos += _FINAL.size
        arcs = []
        for _ in range(n):
            (k,) = _COUNT.unpack_from(data, pos)
            pos += _COUNT.size
            end = pos + k * _ARC.size
            if end > len(data):
                raise CorruptEntry("arc table runs past the end of the entry")
            arcs.append(tuple((i, o, w, nxt) for i, o, w, nxt in _ARC.iter_unpack(data[pos:end])))
            pos = end
    except struct.error as exc:
        raise CorruptEntry(f"truncated entry: {exc}") from exc
    if pos != len(data):
        raise CorruptEntry("trailing bytes after entry")
    if n == 0:
        if start != F.NO_STATE or finals:
            raise CorruptEntry("empty machine with a start or final state")
    elif not 0 <= start < n or any(not 0 <= s < n for s in finals):
        raise CorruptEntry("state id out of range")
    fst = F.Fst(arcs, start, finals)
    try:
        fst.validate(max_label=0xFFFFFFFF)
    except F.FstError as exc:
        raise CorruptEntry(str(exc)) from exc
    return fst


def far_write(path, entries: Mapping[str, F.Fst]) -> None:
    keys = sorted(check_key(k) for k in entries)
    payloads = [serialize_fst(entries[k]) for k in keys]
    encoded = [k.encode("ascii") for k in keys]
    offset = _HEADER.size + sum(_KEY_LEN.size + len(k) + _INDEX_FIXED.size for k in encoded)
    out = [_HEADER.pack(MAGIC, VERSION, len(keys))]
    for k, payload in zip(encoded, payloads):
        out.append(_KEY_LEN.pack(len(k)) + k + _INDEX_FIXED.pack(offset, len(payload), zlib.crc32(payload)))
        offset += len(payload)
    out.extend(payloads)
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(b"".join(out))
    os.replace(tmp, path)


def _read_exact(fh, n: int) -> bytes:
    data = fh.read(n)
    if len(data) != n:
        raise CorruptEntry("archive is truncated")
    return data


def _read_index(fh) -> dict[str, tuple[int, int, int]]:
    head = fh.read(_HEADER.size)
    if len(head) < 4 or head[:4] != MAGIC:
        raise BadMagic("not an archive (bad magic)")
    if len(head) != _HEADER.size:
        raise CorruptEntry("archive header is truncated")
    _, version, count = _HEADER.unpack(head)
    if version != VERSION:
        raise UnsupportedVersion(f"archive version {version} is not supported")
    index = {}
    for _ in range(count):
        (klen,) = _KEY_LEN.unpack(_read_exact(fh, _KEY_LEN.size))
        try:
            key = _read_exact(fh, klen).decode("ascii")
        except UnicodeDecodeError as exc:
            raise CorruptEntry("non-ASCII key in index") from exc
        index[key] = _INDEX_FIXED.unpack(_read_exact(fh, _INDEX_FIXED.size))
    return index


def _load_entry(fh, key: str, where: tuple[int, int, int]) -> F.Fst:
    offset, length, crc = where
    fh.seek(offset)
    data = _read_exact(fh, length)
    if zlib.crc32(data) != crc:
        raise CorruptEntry(f"checksum mismatch for {key}")
    return deserialize_fst(data)


def far_keys(path) -> list[str]:
    with open(path, "rb") as fh:
        return list(_read_index(fh))


def far_read(path) -> dict[str, F.Fst]:
    with open(path, "rb") as fh:
        index = _read_index(fh)
        return {k: _load_entry(fh, k, v) for k, v in index.items()}


def far_lookup(path, key: str) -> F.Fst:
    with open(path, "rb") as fh:
        index = _read_index(fh)
        where = index.get(key)
        if where is None:
            raise KeyNotFound(key)
        return _load_entry(fh, key, where)
