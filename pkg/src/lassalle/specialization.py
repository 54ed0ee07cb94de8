"""The specialization ``h_n -> 1 / ((t)_n n!)`` and its values on Schur functions.

``phi_e`` and ``phi_p`` are computed from the ``h`` values by the Newton
recurrences, never from determinants, so the dual Jacobi-Trudi comparison in
:func:`phi_schur_dual` is an independent route to ``phi(s_lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import RationalLike, determinant, factorial, rising_factorial
from .partitions import Partition, SkewShape, conjugate

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class SpecializationContext:
    """Holds ``t > 0`` and a table of ``phi(h_n)`` for ``n <= bound``.

    The table is filled once at construction and never mutated, so a context
    can be shared between threads.  Values past ``bound`` are computed on
    demand without caching.
    """

    t: Fraction
    bound: int = DEFAULT_BOUND
    h_values: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t = Fraction(self.t)
        if t <= 0:
            raise ValueError(f"t must be positive, got {t}")
        object.__setattr__(self, "t", t)
        vals = [Fraction(1)]
        rf = Fraction(1)
        nf = 1
        for n in range(1, self.bound + 1):
            rf *= t + n - 1
            nf *= n
            vals.append(1 / (rf * nf))
        object.__setattr__(self, "h_values", tuple(vals))


def make_context(t: RationalLike, bound: int = DEFAULT_BOUND) -> SpecializationContext:
    return SpecializationContext(Fraction(t), bound)


def phi_h(ctx: SpecializationContext, n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    if n < len(ctx.h_values):
        return ctx.h_values[n]
    return 1 / (rising_factorial(ctx.t, n) * factorial(n))


def jacobi_trudi_matrix(ctx: SpecializationContext, s: SkewShape) -> list[list[Fraction]]:
    ell = s.length
    lam = s.outer.padded(ell)
    mu = s.inner.padded(ell)
    return [[phi_h(ctx, lam[i] - mu[j] - i + j) for j in range(ell)] for i in range(ell)]


def phi_skew_schur(ctx: SpecializationContext, s: SkewShape) -> Fraction:
    """``phi(s_{lam/mu}) = det(phi(h_{lam_i - mu_j - i + j}))``; 1 on the empty shape."""
    return determinant(jacobi_trudi_matrix(ctx, s))


def phi_schur(ctx: SpecializationContext, lam: Partition) -> Fraction:
    return phi_skew_schur(ctx, SkewShape(lam))


def _e_values(ctx: SpecializationContext, n: int) -> list[Fraction]:
    # e_m = sum_{k=1}^{m} (-1)^{k-1} h_k e_{m-k}
    e = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            term = phi_h(ctx, k) * e[m - k]
            acc += term if k % 2 else -term
        e.append(acc)
    return e


def phi_e(ctx: SpecializationContext, n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    return _e_values(ctx, n)[n]


def phi_p(ctx: SpecializationContext, n: int) -> Fraction:
    """``phi(p_n)`` from ``n h_n = sum_{k=1}^{n} h_{n-k} p_k``."""
    if n < 1:
        raise ValueError("power sums are indexed from n = 1")
    p = [Fraction(0)]
    for m in range(1, n + 1):
        acc = m * phi_h(ctx, m)
        for k in range(1, m):
            acc -= phi_h(ctx, m - k) * p[k]
        p.append(acc)
    return p[n]


def phi_schur_dual(ctx: SpecializationContext, lam: Partition) -> Fraction:
    """``phi(s_lam)`` as ``det(phi(e_{lam'_i - i + j}))`` over the conjugate ``lam'``."""
    conj = conjugate(lam).parts
    ell = len(conj)
    e = _e_values(ctx, (conj[0] + ell) if conj else 0)

    def ev(k):
        return e[k] if k >= 0 else Fraction(0)

    return determinant([[ev(conj[i] - i + j) for j in range(ell)] for i in range(ell)])
