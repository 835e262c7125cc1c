"""64-bit FNV-1a hashing used by every content-hashing code path.

The constant basis/prime pair is the standard one; a caller-supplied seed is
XOR-mixed into the offset basis so that independent feature spaces can use
decorrelated bucketings while staying platform-independent.
"""

from __future__ import annotations

_FNV64_OFFSET = 0xCBF29CE484222325
_FNV64_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data: bytes, seed: int = 0) -> int:
    """Hash *data* with 64-bit FNV-1a, mixing *seed* into the offset basis."""
    h = _FNV64_OFFSET ^ (seed & _MASK64)
    for byte in data:
        h ^= byte
        h = (h * _FNV64_PRIME) & _MASK64
    return h


def bucket(data: bytes, n_buckets: int, seed: int = 0) -> int:
    """Map *data* to a bucket in ``[0, n_buckets)``."""
    return fnv1a_64(data, seed) % n_buckets
