"""Bounded self-verification suite behind ``tropical-hurwitz selfcheck``."""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .class_algebra import CentralElement, frobenius_pairing, hurwitz_number, multiply, trace
from .complex import HurwitzComplex, chamber_degrees, degree_recursive
from .embedding import MetricPoint, embed, recover_lengths
from .monodromy import oracle_hurwitz
from .partitions import RamificationProfile, all_partitions, class_size
from .permutations import cycle_type
from .trees import double_factorial, enumerate_trivalent_types


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def all_profiles(d: int, n: int) -> Iterator[RamificationProfile]:
    for parts in itertools.product(all_partitions(d), repeat=n):
        yield RamificationProfile(d, parts)


def random_central(rng: random.Random, d: int, low: int = -3, high: int = 3) -> CentralElement:
    return CentralElement(d, {p: rng.randint(low, high) for p in all_partitions(d)})


def check_class_sizes(max_d: int) -> CheckResult:
    for d in range(1, max_d + 1):
        counts = Counter(cycle_type(g) for g in itertools.permutations(range(d)))
        for sigma in all_partitions(d):
            if counts[sigma] != class_size(sigma):
                return CheckResult("class sizes", False, f"{sigma!r}: {counts[sigma]} != {class_size(sigma)}")
        if sum(class_size(s) for s in all_partitions(d)) != math.factorial(d):
            return CheckResult("class sizes", False, f"sizes do not sum to {d}!")
    return CheckResult("class sizes", True, f"d <= {max_d}")


def check_agreement(max_d: int, max_n: int) -> CheckResult:
    checked = 0
    for d in range(1, max_d + 1):
        for n in range(3, max_n + 1):
            for profile in all_profiles(d, n):
                per_chamber = set(chamber_degrees(profile).values())
                values = {
                    hurwitz_number(profile),
                    oracle_hurwitz(profile),
                    degree_recursive(profile),
                } | per_chamber
                if len(values) != 1:
                    return CheckResult("four-way agreement", False, f"{profile}: {sorted(values)}")
                checked += 1
    return CheckResult("four-way agreement", True, f"{checked} profiles, every chamber")


def check_orthogonality(max_d: int, rng: random.Random, samples: int = 100) -> CheckResult:
    for d in range(1, max_d + 1):
        basis = [CentralElement.basis(p) for p in all_partitions(d)]
        for _ in range(samples):
            a, b = random_central(rng, d), random_central(rng, d)
            rhs = sum(
                (trace(multiply(a, k)) * trace(multiply(k, b)) / class_size(p) for p, k in zip(all_partitions(d), basis)),
                Fraction(0),
            )
            if trace(multiply(a, b)) != rhs:
                return CheckResult("orthogonal basis", False, f"d={d}: {a} {b}")
    return CheckResult("orthogonal basis", True, f"{samples} pairs per d <= {max_d}")


def check_frobenius(max_d: int, rng: random.Random, samples: int = 100) -> CheckResult:
    for d in range(1, max_d + 1):
        parts = all_partitions(d)
        for _ in range(samples):
            a, b, c = (CentralElement.basis(rng.choice(parts)) for _ in range(3))
            if frobenius_pairing(multiply(a, b), c) != frobenius_pairing(a, multiply(b, c)):
                return CheckResult("frobenius pairing", False, f"d={d}: {a} {b} {c}")
    return CheckResult("frobenius pairing", True, f"{samples} triples per d <= {max_d}")


def check_tree_counts(max_n: int) -> CheckResult:
    for n in range(3, max_n + 1):
        trees = enumerate_trivalent_types(n)
        keys = {t.canonical_key for t in trees}
        if len(trees) != double_factorial(2 * n - 5) or len(keys) != len(trees):
            return CheckResult("tree enumeration", False, f"n={n}: {len(trees)} types, {len(keys)} keys")
    return CheckResult("tree enumeration", True, f"n <= {max_n}")


def check_embedding(max_n: int, rng: random.Random, samples: int = 20) -> CheckResult:
    for n in range(4, max_n + 1):
        trees = enumerate_trivalent_types(n)
        for _ in range(samples):
            tree = rng.choice(trees)
            values = [Fraction(rng.randint(1, 50), rng.randint(1, 9)) for _ in tree.canonical_key]
            point = MetricPoint.from_values(tree, values)
            if recover_lengths(point) != dict(point.lengths):
                return CheckResult("embedding round trip", False, f"{tree} {values}")
            if embed(point.scale(3)) != tuple(3 * c for c in embed(point)):
                return CheckResult("embedding round trip", False, f"linearity at {tree}")
    return CheckResult("embedding round trip", True, f"{samples} points per n in 4..{max_n}")


def check_connectedness(max_d: int, max_n: int) -> CheckResult:
    for d in range(1, max_d + 1):
        for n in range(3, max_n + 1):
            for profile in all_profiles(d, n):
                cx = HurwitzComplex.build(profile)
                stars = {f.key for f in cx.faces() if f.dimension == 0}
                if len(stars) > 1:
                    return CheckResult("connectedness", False, f"{profile}: {len(stars)} classes")
    return CheckResult("connectedness", True, "all fully contracted faces glued")


def run_selfcheck(max_d: int = 3, max_n: int = 5, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_class_sizes(max_d),
        lambda: check_agreement(max_d, max_n),
        lambda: check_orthogonality(max_d, rng),
        lambda: check_frobenius(max_d, rng),
        lambda: check_tree_counts(max_n),
        lambda: check_embedding(max_n, rng),
        lambda: check_connectedness(max_d, max_n),
    ]
    return [check() for check in checks]
