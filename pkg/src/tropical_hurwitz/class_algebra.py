"""Exact arithmetic in the center of the rational group algebra of ``S_d``.

Elements are rational combinations of the class sums ``K_sigma`` (the sum
of all permutations of cycle type ``sigma``). Products of class sums are
computed once per degree by full convolution over the two classes and
memoized in a :class:`StructureConstantTable`.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache, reduce
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .partitions import Partition, RamificationProfile, all_partitions, class_size
from .permutations import class_buckets


class DegreeMismatch(ValueError):
    """Operands live in class algebras of different ``S_d``."""


class CentralElement:
    """A rational combination of class sums ``K_sigma`` of ``S_d``."""

    __slots__ = ("d", "_coeffs")

    def __init__(self, d: int, coeffs: Mapping[Partition, Fraction | int] | None = None):
        clean = {}
        for sigma, c in (coeffs or {}).items():
            if sigma.d != d:
                raise DegreeMismatch(f"{sigma!r} is not a partition of {d}")
            c = Fraction(c)
            if c:
                clean[sigma] = c
        self.d = d
        self._coeffs = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def basis(cls, sigma: Partition) -> "CentralElement":
        return cls(sigma.d, {sigma: 1})

    @classmethod
    def one(cls, d: int) -> "CentralElement":
        return cls.basis(Partition.identity(d))

    @property
    def coeffs(self) -> Mapping[Partition, Fraction]:
        return self._coeffs

    def coefficient(self, sigma: Partition) -> Fraction:
        return self._coeffs.get(sigma, Fraction(0))

    def _check(self, other: "CentralElement"):
        if self.d != other.d:
            raise DegreeMismatch(f"cannot combine elements of degree {self.d} and {other.d}")

    def __add__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        self._check(other)
        out = dict(self._coeffs)
        for sigma, c in other._coeffs.items():
            out[sigma] = out.get(sigma, 0) + c
        return CentralElement(self.d, out)

    def __neg__(self):
        return CentralElement(self.d, {s: -c for s, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        return self + (-other)

    def scale(self, a) -> "CentralElement":
        a = Fraction(a)
        return CentralElement(self.d, {s: a * c for s, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        return self.d == other.d and dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        return hash((self.d, tuple(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"CentralElement(d={self.d}, 0)"
        terms = " + ".join(f"{c}*K[{s}]" for s, c in self._coeffs.items())
        return f"CentralElement(d={self.d}, {terms})"


class StructureConstantTable:
    """Lazily filled table of basis products ``K_alpha * K_beta`` for one ``d``.

    Concurrent readers are fine; a missing entry may be computed twice, and
    both computations store the same value.
    """

    def __init__(self, d: int):
        self.d = d
        self.partitions = all_partitions(d)
        self._index = {p: i for i, p in enumerate(self.partitions)}
        self._table: dict[tuple[Partition, Partition], CentralElement] = {}
        self._lock = threading.Lock()
        self._perm_arrays = None
        self._lookup = None

    def _prepare(self):
        if self._lookup is not None:
            return
        d = self.d
        buckets = class_buckets(d)
        powers = d ** np.arange(d, dtype=np.int64)
        lookup = np.full(d**d, -1, dtype=np.int16)
        arrays = {}
        for sigma, perms in buckets.items():
            arr = np.array(perms, dtype=np.int64).reshape(len(perms), d)
            arrays[sigma] = arr
            lookup[arr @ powers] = self._index[sigma]
        self._powers = powers
        self._perm_arrays = arrays
        self._lookup = lookup

    def _convolve(self, alpha: Partition, beta: Partition) -> CentralElement:
        self._prepare()
        a = self._perm_arrays[alpha]
        b = self._perm_arrays[beta]
        # products[i, j, k] = a_i(b_j(k))
        products = a[:, b]
        classes = self._lookup[products @ self._powers]
        tally = np.bincount(classes.ravel(), minlength=len(self.partitions))
        coeffs = {}
        for gamma, count in zip(self.partitions, tally.tolist()):
            if count:
                # every element of K_gamma occurs equally often
                coeffs[gamma] = Fraction(count, class_size(gamma))
        return CentralElement(self.d, coeffs)

    def product(self, alpha: Partition, beta: Partition) -> CentralElement:
        key = (alpha, beta) if not (beta < alpha) else (beta, alpha)
        cached = self._table.get(key)
        if cached is not None:
            return cached
        value = self._convolve(*key)
        with self._lock:
            return self._table.setdefault(key, value)

    def __len__(self):
        return len(self._table)


_tables: dict[int, StructureConstantTable] = {}
_tables_lock = threading.Lock()


def structure_constants(d: int) -> StructureConstantTable:
    table = _tables.get(d)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(d, StructureConstantTable(d))
    return table


def multiply(a: CentralElement, b: CentralElement) -> CentralElement:
    """Product in the class algebra, by bilinear extension of basis products."""
    a._check(b)
    table = structure_constants(a.d)
    out: dict[Partition, Fraction] = {}
    for alpha, ca in a.coeffs.items():
        for beta, cb in b.coeffs.items():
            for gamma, c in table.product(alpha, beta).coeffs.items():
                out[gamma] = out.get(gamma, 0) + ca * cb * c
    return CentralElement(a.d, out)


def trace(x: CentralElement) -> Fraction:
    """Coefficient of the identity permutation."""
    return x.coefficient(Partition.identity(x.d))


def trace_product(profile: RamificationProfile) -> int:
    """``tr(K_sigma_1 ... K_sigma_n)``: the number of tuples multiplying to 1."""
    product = reduce(multiply, (CentralElement.basis(s) for s in profile))
    value = trace(product)
    assert value.denominator == 1 and value >= 0
    return int(value)


def hurwitz_number(profile: RamificationProfile) -> Fraction:
    return Fraction(trace_product(profile), math.factorial(profile.d))


@lru_cache(maxsize=None)
def _triple_index(key: tuple[Partition, Partition, Partition]) -> int:
    m1, m2, m3 = key
    table = structure_constants(m1.d)
    # tr(K_a K_b K_c) = [K_a K_b : K_c] * |K_c|, since classes of S_d are self-inverse
    return int(table.product(m1, m2).coefficient(m3) * class_size(m3))


def triple_index(mu1: Partition, mu2: Partition, mu3: Partition) -> int:
    """``I(v) = tr(K_mu1 K_mu2 K_mu3)``; a vertex is acceptable iff this is nonzero."""
    if not (mu1.d == mu2.d == mu3.d):
        raise DegreeMismatch(f"partitions of different degrees: {mu1!r}, {mu2!r}, {mu3!r}")
    return _triple_index(tuple(sorted((mu1, mu2, mu3))))


def frobenius_pairing(a: CentralElement, b: CentralElement) -> Fraction:
    return trace(multiply(a, b))
