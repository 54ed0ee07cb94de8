"""Partitions, skew shapes and the Toeplitz index sets attached to them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; ``()`` is the empty partition.

    Trailing zeros passed to the constructor are dropped.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other: Partition) -> bool:
        if len(other) > len(self):
            return False
        return all(m <= l for m, l in zip(other.parts, self.parts))

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(tuple(self.outer)))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(tuple(self.inner)))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def length(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def __str__(self):
        if not self.inner.parts:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def _check_index_list(indices: Sequence[int], name: str) -> tuple[int, ...]:
    out = tuple(int(i) for i in indices)
    if any(i < 1 for i in out):
        raise ValueError(f"{name} must contain positive integers: {out}")
    if any(out[k] >= out[k + 1] for k in range(len(out) - 1)):
        raise ValueError(f"{name} must be strictly increasing: {out}")
    return out


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part > i) for i in range(p.parts[0])))


def shape_to_index_sets(s: SkewShape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row and column index sets of the Toeplitz minor equal to ``s_{lam/mu}``.

    With ``l = len(lam)`` and ``mu`` padded by zeros to length ``l``:
    ``I = (mu_l + 1, ..., mu_1 + l)`` and ``J = (lam_l + 1, ..., lam_1 + l)``.
    """
    if not isinstance(s, SkewShape):
        raise ValueError(f"expected a SkewShape, got {type(s).__name__}")
    ell = s.length
    lam = s.outer.padded(ell)
    mu = s.inner.padded(ell)
    I = tuple(mu[ell - k] + k for k in range(1, ell + 1))
    J = tuple(lam[ell - k] + k for k in range(1, ell + 1))
    return I, J


def index_sets_to_shape(I: Sequence[int], J: Sequence[int]) -> Optional[SkewShape]:
    """Inverse of :func:`shape_to_index_sets`.

    Returns ``None`` when some ``i_k > j_k``: no skew shape exists there and
    the corresponding Toeplitz minor vanishes.
    """
    I = _check_index_list(I, "I")
    J = _check_index_list(J, "J")
    if len(I) != len(J):
        raise ValueError(f"index lists differ in length: {len(I)} != {len(J)}")
    if any(i > j for i, j in zip(I, J)):
        return None
    r = len(I)
    lam = tuple(J[r - m] - (r + 1 - m) for m in range(1, r + 1))
    mu = tuple(I[r - m] - (r + 1 - m) for m in range(1, r + 1))
    return SkewShape(Partition(lam), Partition(mu))


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def enumerate_partitions(max_weight: int) -> Iterator[Partition]:
    """Every partition of weight ``0..max_weight``: by weight, then reverse lexicographic."""
    for n in range(max_weight + 1):
        yield from partitions_of(n)


def sub_partitions(p: Partition) -> Iterator[Partition]:
    """All ``mu`` contained in ``p``, in reverse lexicographic order of the padded parts."""

    def rec(i, cap):
        if i == len(p):
            yield ()
            return
        for v in range(min(p.parts[i], cap), -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for parts in rec(0, p.parts[0] if p.parts else 0):
        yield Partition(parts)


def enumerate_skew_shapes(max_weight: int) -> Iterator[SkewShape]:
    """Every skew shape ``lam/mu`` with ``|lam| <= max_weight``, including ``lam/lam``."""
    for lam in enumerate_partitions(max_weight):
        for mu in sub_partitions(lam):
            yield SkewShape(lam, mu)


def partition_counts_euler(nmax: int) -> list[int]:
    """``p(0..nmax)`` via Euler's pentagonal number recurrence."""
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


_PART_RE = re.compile(r"\[(\d+(?:,\d+)*)?\]")


def parse_partition(text: str) -> Partition:
    """Parse ``"[4,2,1]"`` or ``"[]"``."""
    m = _PART_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a partition literal: {text!r}")
    body = m.group(1)
    return Partition(tuple(int(x) for x in body.split(","))) if body else Partition()


def parse_shape(text: str) -> SkewShape:
    """Parse ``"[4,2,1]"`` or ``"[4,2,1]/[2,1]"``."""
    outer, sep, inner = text.strip().partition("/")
    if sep and not inner:
        raise ValueError(f"missing inner partition in {text!r}")
    return SkewShape(parse_partition(outer), parse_partition(inner) if sep else Partition())


def parse_index_list(text: str) -> tuple[int, ...]:
    """Parse ``"1,2,5"`` (brackets optional) into a strictly increasing index list."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not re.fullmatch(r"\d+(?:,\d+)*", body):
        raise ValueError(f"not an index list: {text!r}")
    return _check_index_list([int(x) for x in body.split(",")], "index list")
