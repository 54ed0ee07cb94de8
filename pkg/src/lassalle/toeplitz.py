"""Toeplitz matrices ``T[i, j] = a_{j-i}`` of a sequence, their minors, and
bounded total-positivity scans."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence, Union

from .exactmath import RationalLike, determinant, format_rational
from .specialization import SpecializationContext, phi_h

INFINITY = math.inf
Count = Union[int, float]  # nonnegative int, or INFINITY


def check_count(value: Count, name: str) -> Count:
    if value == INFINITY:
        return INFINITY
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer or INFINITY, got {value!r}")
    return value


@dataclass(frozen=True)
class DeclaredParams:
    """Known Edrei parameters of a sequence: ``theta``, and the numbers ``K``
    of positive ``delta_i`` and ``L`` of positive ``rho_i``."""

    theta: Fraction
    K: Count
    L: Count

    def __post_init__(self):
        theta = Fraction(self.theta)
        if theta < 0:
            raise ValueError("theta must be nonnegative")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "K", check_count(self.K, "K"))
        object.__setattr__(self, "L", check_count(self.L, "L"))


@dataclass(frozen=True)
class ToeplitzSequence:
    """A sequence ``n -> a_n``; ``term`` returns 0 for every ``n < 0``."""

    func: Callable[[int], Fraction] = field(repr=False)
    label: str = ""
    declared_params: Optional[DeclaredParams] = None

    def term(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        return Fraction(self.func(n))

    def terms(self, count: int) -> list[Fraction]:
        return [self.term(n) for n in range(count)]


def finite_sequence(coeffs: Sequence[RationalLike], label: str = "",
                    declared_params: Optional[DeclaredParams] = None) -> ToeplitzSequence:
    """Sequence equal to ``coeffs`` followed by zeros."""
    cs = tuple(Fraction(c) for c in coeffs)
    return ToeplitzSequence(lambda n: cs[n] if n < len(cs) else Fraction(0), label, declared_params)


def check_index_pair(I: Sequence[int], J: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J):
        raise ValueError(f"index lists differ in length: {len(I)} != {len(J)}")
    if not I:
        raise ValueError("index lists must be nonempty")
    return I, J


def minor(seq: ToeplitzSequence, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Exact minor ``T(I, J)`` of ``(a_{j-i})`` with rows ``I`` and columns ``J``."""
    I, J = check_index_pair(I, J)
    return determinant([[seq.term(j - i) for j in J] for i in I])


def phi_sequence(ctx: SpecializationContext) -> ToeplitzSequence:
    """The sequence ``a_n = phi(h_n)``, declared with ``theta = 0, K = 0, L = oo``."""
    return ToeplitzSequence(
        lambda n: phi_h(ctx, n),
        label=f"phi(t={format_rational(ctx.t)})",
        declared_params=DeclaredParams(Fraction(0), 0, INFINITY),
    )


def staircase(I: Sequence[int], J: Sequence[int]) -> bool:
    """True iff ``i_k <= j_k`` for every k."""
    return all(i <= j for i, j in zip(I, J))


def sign_label(value: Fraction) -> str:
    if value < 0:
        return "negative"
    if value == 0:
        return "zero"
    return "positive"


@dataclass(frozen=True)
class MinorRecord:
    I: tuple[int, ...]
    J: tuple[int, ...]
    value: Fraction

    @property
    def sign(self) -> str:
        return sign_label(self.value)

    def as_dict(self) -> dict:
        return {"I": list(self.I), "J": list(self.J),
                "minor": format_rational(self.value), "sign": self.sign}


@dataclass
class ScanReport:
    label: str
    max_order: int
    window: int
    records: list[MinorRecord]

    @property
    def negatives(self) -> list[MinorRecord]:
        return [r for r in self.records if r.value < 0]

    def counts(self) -> dict[str, int]:
        out = {"negative": 0, "zero": 0, "positive": 0}
        for r in self.records:
            out[r.sign] += 1
        return out

    @property
    def totally_positive(self) -> bool:
        return not self.negatives

    def as_records(self) -> list[dict]:
        return [r.as_dict() for r in self.records]


def index_pairs(max_order: int, window: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``(I, J)`` with ``1 <= r <= max_order`` and indices in ``1..window``,
    ordered by r, then I, then J lexicographically."""
    for r in range(1, max_order + 1):
        subsets = list(itertools.combinations(range(1, window + 1), r))
        for I in subsets:
            for J in subsets:
                yield I, J


def tp_scan(seq: ToeplitzSequence, max_order: int, window: int) -> ScanReport:
    """Every minor of order ``<= max_order`` inside the ``window x window`` corner."""
    if max_order < 1 or window < 1:
        raise ValueError("max_order and window must be positive")
    if max_order > window:
        raise ValueError("max_order must not exceed window")
    # terms a_{-window+1} .. a_{window-1}, looked up by offset
    table = {d: seq.term(d) for d in range(-window + 1, window)}
    records = []
    for I, J in index_pairs(max_order, window):
        value = determinant([[table[j - i] for j in J] for i in I])
        records.append(MinorRecord(I, J, value))
    return ScanReport(seq.label, max_order, window, records)


@dataclass(frozen=True)
class EdreiForm:
    """``exp(theta x) * prod(1 + rho_i x) / prod(1 - delta_i x)`` with finite products."""

    theta: Fraction = Fraction(0)
    rho: tuple[Fraction, ...] = ()
    delta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        theta = Fraction(self.theta)
        rho = tuple(Fraction(r) for r in self.rho)
        delta = tuple(Fraction(d) for d in self.delta)
        if theta < 0 or any(r <= 0 for r in rho) or any(d < 0 for d in delta):
            raise ValueError("need theta >= 0, rho_i > 0, delta_i >= 0")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "delta", delta)

    def declared_params(self) -> DeclaredParams:
        return DeclaredParams(self.theta, sum(1 for d in self.delta if d > 0), len(self.rho))


def edrei_coefficients(form: EdreiForm, count: int) -> list[Fraction]:
    """First ``count`` Taylor coefficients of the Edrei form, exactly."""
    if count < 1:
        raise ValueError("count must be positive")
    coeffs = [Fraction(1)]
    for n in range(1, count):
        coeffs.append(coeffs[-1] * form.theta / n)
    for r in form.rho:
        coeffs = [coeffs[0]] + [coeffs[n] + r * coeffs[n - 1] for n in range(1, count)]
    for d in form.delta:
        # multiply by sum d^k x^k: b_n = a_n + d b_{n-1}
        out = [coeffs[0]]
        for n in range(1, count):
            out.append(coeffs[n] + d * out[-1])
        coeffs = out
    return coeffs


def edrei_sequence(form: EdreiForm, label: str = "") -> ToeplitzSequence:
    return ToeplitzSequence(lambda n: edrei_coefficients(form, n + 1)[n],
                            label or repr(form), form.declared_params())
