# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Functions for converting between bitsets, masks, index lists and command line values."""

from collections.abc import Iterable, Iterator

import numpy

from contalg.support.exit import InvalidParameterError


def as_bitset(mask: numpy.ndarray) -> int:
    """Convert a boolean mask into a Python int with bit i set when mask[i] is True."""
    packed = numpy.packbits(numpy.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def as_mask(bits: int, size: int) -> numpy.ndarray:
    """Convert a bitset into a boolean mask of the given size."""
    raw = numpy.frombuffer(bits.to_bytes((size + 7) // 8, "little"), dtype=numpy.uint8)
    return numpy.unpackbits(raw, bitorder="little", count=size).astype(bool)


def from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def as_int_list(text: str) -> list[int]:
    """Convert a comma separated string such as "1,2" into a list of natural numbers.

    Raises:
        InvalidParameterError: Value is not a comma separated list of naturals.
    """
    try:
        values = [int(field) for field in text.split(",") if field.strip() != ""]
    except ValueError:
        raise InvalidParameterError(f"Expected a comma separated list of naturals, got '{text}'")

    if len(values) == 0 or any(value < 0 for value in values):
        raise InvalidParameterError(f"Expected a comma separated list of naturals, got '{text}'")
    return values
