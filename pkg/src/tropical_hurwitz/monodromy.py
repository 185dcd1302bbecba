"""Brute-force Hurwitz numbers from monodromy tuples.

Counts ordered tuples ``(g_1, ..., g_n)`` of permutations with prescribed
cycle types and ``g_1 g_2 ... g_n = 1``. The last entry is forced to be the
inverse of the prefix product, so only the first ``n - 1`` classes are
enumerated. This path never touches the class algebra and serves as the
ground truth for every other computation.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .partitions import RamificationProfile, class_size
from .permutations import class_buckets, compose, cycle_lengths

DEFAULT_MAX_WORK = 10**8


class ResourceGuardExceeded(RuntimeError):
    """The enumeration would visit more tuples than allowed."""


def enumeration_work(profile: RamificationProfile) -> int:
    """Number of prefix tuples the enumeration visits."""
    return math.prod(class_size(s) for s in profile.parts[:-1])


def _count_from(prefix: tuple[int, ...], classes, target: tuple[int, ...]) -> int:
    # depth-first over the remaining classes, carrying the running product
    if not classes:
        return int(cycle_lengths(prefix) == target)
    head, rest = classes[0], classes[1:]
    total = 0
    for g in head:
        total += _count_from(compose(prefix, g), rest, target)
    return total


def _count_chunk(args) -> int:
    chunk, classes, target = args
    return sum(_count_from(g, classes, target) for g in chunk)


def count_monodromy_tuples(
    profile: RamificationProfile, max_work: int = DEFAULT_MAX_WORK, jobs: int = 1
) -> int:
    """Number of tuples with ``g_i`` of type ``sigma_i`` and product the identity."""
    work = enumeration_work(profile)
    if work > max_work:
        raise ResourceGuardExceeded(
            f"profile {profile} needs {work} tuples, guard is {max_work}"
        )
    buckets = class_buckets(profile.d)
    classes = [buckets[s] for s in profile.parts[:-1]]
    # g_n = (g_1...g_{n-1})^-1 has the same cycle type as the prefix product
    target = profile.parts[-1].parts
    first, rest = classes[0], tuple(classes[1:])
    if jobs <= 1 or len(first) < 2:
        return _count_chunk((first, rest, target))
    step = -(-len(first) // jobs)
    chunks = [(first[i : i + step], rest, target) for i in range(0, len(first), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_chunk, chunks))


def oracle_hurwitz(
    profile: RamificationProfile, max_work: int = DEFAULT_MAX_WORK, jobs: int = 1
) -> Fraction:
    count = count_monodromy_tuples(profile, max_work=max_work, jobs=jobs)
    return Fraction(count, math.factorial(profile.d))
