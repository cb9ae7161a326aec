"""Deterministic total order over the structured color values.

Constructive colorings use nested tuples, ints, strings, frozensets, and
type matrices as color values.  Sorting them by ``canonical_key`` is stable
across processes (no reliance on hash iteration order), which is what makes
whole pipelines reproducible byte for byte.
"""

from __future__ import annotations


def canonical_key(x) -> tuple:
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(canonical_key(e) for e in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(canonical_key(e) for e in x)))
    key = getattr(x, "canonical_key", None)
    if key is not None:
        return (4, key())
    raise TypeError(f"no canonical order for {type(x)!r}")
