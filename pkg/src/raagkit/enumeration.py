"""Deterministic chunked enumeration of vertex subsets.

The ``2**n`` subsets are split by their top ``prefix_bits`` bits.  Chunks
are evaluated in a process pool when ``workers > 1`` and always reduced in
chunk order, so results never depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from raagkit.errors import GuardExceeded

DEFAULT_GUARD = 24

T = TypeVar("T")


def check_guard(n: int, guard: int = DEFAULT_GUARD, allow_large: bool = False) -> None:
    if n > guard and not allow_large:
        raise GuardExceeded(
            f"graph has {n} vertices, above the enumeration guard of {guard}; "
            "raise the guard or pass the override flag"
        )


def chunk_plan(n: int, workers: int) -> list[tuple[int, int]]:
    """``(prefix_bits, prefix)`` pairs covering all subsets of ``n`` bits."""
    prefix_bits = 0
    while workers > 1 and (1 << prefix_bits) < 4 * workers and prefix_bits < n:
        prefix_bits += 1
    return [(prefix_bits, p) for p in range(1 << prefix_bits)]


def chunk_masks(n: int, prefix_bits: int, prefix: int) -> range:
    """Subset masks whose high ``prefix_bits`` bits equal ``prefix``."""
    low = n - prefix_bits
    start = prefix << low
    return range(start, start + (1 << low))


def run_chunks(
    func: Callable[..., T], adj: Sequence[int], n: int, workers: int = 1
) -> list[T]:
    """Evaluate ``func(adj, n, prefix_bits, prefix)`` over the chunk plan."""
    plan = chunk_plan(n, workers)
    if workers <= 1 or len(plan) == 1:
        return [func(adj, n, b, p) for b, p in plan]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, tuple(adj), n, b, p) for b, p in plan]
        return [f.result() for f in futures]
