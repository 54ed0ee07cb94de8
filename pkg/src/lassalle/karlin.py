"""Karlin's criterion for strict positivity of minors of a totally positive
Toeplitz matrix, and a corpus of sequences with known parameters to check it
against exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import binomial, factorial
from .specialization import make_context
from .toeplitz import (INFINITY, Count, DeclaredParams, ToeplitzSequence, check_count,
                       check_index_pair, phi_sequence)


@dataclass(frozen=True)
class KarlinParams:
    """``K`` and ``L`` are ignored when ``theta_positive`` is set."""

    theta_positive: bool
    K: Count = 0
    L: Count = 0

    def __post_init__(self):
        object.__setattr__(self, "K", check_count(self.K, "K"))
        object.__setattr__(self, "L", check_count(self.L, "L"))

    @classmethod
    def from_declared(cls, params: DeclaredParams) -> KarlinParams:
        return cls(params.theta > 0, params.K, params.L)


def predict_positive(params: KarlinParams, I: Sequence[int], J: Sequence[int]) -> bool:
    """Decide whether ``T(I, J) > 0`` from the index sets alone.

    theta > 0:          i_k <= j_k
    theta = 0, K > 0:   j_{k-K} - L < i_k <= j_k
    theta = 0, K = 0:   j_k - L <= i_k <= j_k

    The left-hand bounds are vacuous when ``L`` is infinite, and in the
    ``K > 0`` case also for ``k <= K`` where ``j_{k-K}`` does not exist.
    """
    I, J = check_index_pair(I, J)
    if any(i > j for i, j in zip(I, J)):
        return False
    if params.theta_positive or params.L == INFINITY:
        return True
    K, L = params.K, params.L
    r = len(I)
    if K == 0:
        return all(J[k] - L <= I[k] for k in range(r))
    if K == INFINITY:
        return True
    # 1-based k > K  <=>  0-based k >= K; j_{k-K} is J[k - K]
    return all(J[k - K] - L < I[k] for k in range(K, r))


@dataclass(frozen=True)
class OracleSequence:
    sequence: ToeplitzSequence
    params: KarlinParams

    @property
    def label(self) -> str:
        return self.sequence.label

    @property
    def finite_params(self) -> bool:
        return self.params.K != INFINITY and self.params.L != INFINITY


def _declared(seq_func, label, theta, K, L) -> OracleSequence:
    declared = DeclaredParams(Fraction(theta), K, L)
    seq = ToeplitzSequence(seq_func, label, declared)
    return OracleSequence(seq, KarlinParams.from_declared(declared))


def _mixed_term(n: int) -> Fraction:
    # (1 + x) / (1 - x/2)
    if n == 0:
        return Fraction(1)
    return Fraction(1, 2**n) + Fraction(1, 2 ** (n - 1))


def oracle_sequences() -> list[OracleSequence]:
    """Closed-form sequences with known ``(theta, K, L)``.

    Terms are written directly, not via :func:`edrei_coefficients`, so the
    corpus also checks that function.
    """
    out = [_declared(lambda n: Fraction(1, factorial(n)), "exp(x)", 1, 0, 0)]
    for m in (1, 2, 3):
        out.append(_declared(lambda n, m=m: Fraction(binomial(m, n)), f"(1+x)^{m}", 0, 0, m))
    for d in (Fraction(1, 2), Fraction(1)):
        out.append(_declared(lambda n, d=d: d**n, f"1/(1-{d}x)", 0, 1, 0))
    out.append(_declared(_mixed_term, "(1+x)/(1-x/2)", 0, 1, 1))
    for t in (Fraction(1, 2), Fraction(1), Fraction(2)):
        seq = phi_sequence(make_context(t))
        out.append(OracleSequence(seq, KarlinParams.from_declared(seq.declared_params)))
    return out
