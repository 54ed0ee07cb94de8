"""Jensen and Laguerre polynomials, Sturm root counting, and the two exact
identities tying the sequence ``1/(t)_k`` to Laguerre and Bessel functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import (DensePolynomial, RationalLike, binomial, factorial, poly_gcd,
                        rising_factorial)


def _positive_t(t: RationalLike) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    return t


def _nonzero(p: DensePolynomial) -> None:
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")


def squarefree_part(p: DensePolynomial) -> DensePolynomial:
    _nonzero(p)
    if p.degree < 1:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


@dataclass(frozen=True)
class SturmChain:
    """``p0 = squarefree part, p1 = p0', p_{k+1} = -(p_{k-1} mod p_k)``."""

    chain: tuple[DensePolynomial, ...]
    squarefree_input: DensePolynomial

    @classmethod
    def build(cls, p: DensePolynomial) -> SturmChain:
        sf = squarefree_part(p)
        chain = [sf]
        if sf.degree >= 1:
            chain.append(sf.derivative())
            while chain[-1].degree > 0:
                rem = chain[-2] % chain[-1]
                if rem.is_zero():
                    break
                chain.append(-rem)
        return cls(tuple(chain), sf)

    def variations_at(self, x: Optional[Fraction], at_plus_infinity: bool = True) -> int:
        """Sign changes at ``x``; ``x=None`` evaluates at +oo or -oo. Zeros are dropped."""
        signs = []
        for q in self.chain:
            if x is None:
                s = 1 if q.leading > 0 else -1
                if not at_plus_infinity and q.degree % 2:
                    s = -s
            else:
                v = q(x)
                s = (v > 0) - (v < 0)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lower: Optional[RationalLike] = None,
              upper: Optional[RationalLike] = None) -> int:
        """Distinct roots in ``(lower, upper]``; ``None`` stands for -oo / +oo."""
        lo = None if lower is None else Fraction(lower)
        hi = None if upper is None else Fraction(upper)
        if lo is not None and hi is not None and lo >= hi:
            return 0
        return self.variations_at(lo, at_plus_infinity=False) - self.variations_at(hi)


def count_real_roots(p: DensePolynomial, lower: Optional[RationalLike] = None,
                     upper: Optional[RationalLike] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lower, upper]``."""
    _nonzero(p)
    return SturmChain.build(p).count(lower, upper)


def _multiplicity_layers(p: DensePolynomial) -> list[DensePolynomial]:
    # p, gcd(p, p'), gcd of that with its derivative, ...: the k-th layer has
    # as distinct roots exactly the roots of p of multiplicity > k
    layers = []
    q = p
    while q.degree >= 1:
        layers.append(q)
        q = poly_gcd(q, q.derivative())
    return layers


def count_roots_with_multiplicity(p: DensePolynomial, lower: Optional[RationalLike] = None,
                                  upper: Optional[RationalLike] = None) -> int:
    _nonzero(p)
    return sum(count_real_roots(q, lower, upper) for q in _multiplicity_layers(p))


def all_roots_real(p: DensePolynomial) -> bool:
    _nonzero(p)
    return count_roots_with_multiplicity(p) == p.degree


def all_roots_real_nonpositive(p: DensePolynomial) -> bool:
    """True iff every complex root of ``p``, counted with multiplicity, lies in ``(-oo, 0]``."""
    _nonzero(p)
    return count_roots_with_multiplicity(p, None, 0) == p.degree


def laguerre_gamma(t: RationalLike, n: int) -> list[Fraction]:
    """``gamma_k = 1/(t)_k`` for ``k = 0..n``."""
    t = _positive_t(t)
    return [1 / rising_factorial(t, k) for k in range(n + 1)]


def jensen_poly(t: RationalLike, n: int) -> DensePolynomial:
    """``J_n(x) = sum_k C(n, k) x^k / (t)_k``."""
    gammas = laguerre_gamma(t, n)
    return DensePolynomial(binomial(n, k) * gammas[k] for k in range(n + 1))


def apply_multiplier(gammas: Sequence[RationalLike], p: DensePolynomial) -> DensePolynomial:
    """``sum gamma_k a_k x^k`` for ``p = sum a_k x^k``."""
    if len(gammas) <= p.degree:
        raise ValueError("need a multiplier for every coefficient")
    return DensePolynomial(Fraction(g) * c for g, c in zip(gammas, p.coeffs))


def laguerre_poly(alpha: RationalLike, n: int) -> DensePolynomial:
    """Generalized Laguerre polynomial by the three-term recurrence
    ``(k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = Fraction(alpha)
    prev = DensePolynomial([1])
    if n == 0:
        return prev
    cur = DensePolynomial([1 + alpha, -1])
    for k in range(1, n):
        nxt = (DensePolynomial([2 * k + 1 + alpha, -1]) * cur - (k + alpha) * prev)
        prev, cur = cur, nxt * Fraction(1, k + 1)
    return cur


def check_jensen_laguerre_identity(t: RationalLike, n: int) -> bool:
    """Exact check of ``J_n(x) = n!/(t)_n * L_n^{(t-1)}(-x)``."""
    t = _positive_t(t)
    rhs = laguerre_poly(t - 1, n).reflect() * (Fraction(factorial(n)) / rising_factorial(t, n))
    return jensen_poly(t, n) == rhs


def check_bessel_series_identity(t: RationalLike, count: int) -> bool:
    """Check ``1/((t)_m m!) == Gamma(t) / (m! Gamma(m+t))`` for ``m < count``.

    Both sides are the m-th Taylor coefficient of
    ``Gamma(t) x^((1-t)/2) I_{t-1}(2 sqrt(x))``.  The ratio
    ``Gamma(m+t)/Gamma(t)`` is built by stepping ``Gamma(s+1) = s Gamma(s)``
    from ``s = t``; the left side goes through :func:`rising_factorial`.
    """
    t = _positive_t(t)
    gamma_ratio = Fraction(1)
    m_fact = 1
    for m in range(count):
        if m:
            gamma_ratio *= t + m - 1
            m_fact *= m
        lhs = 1 / (rising_factorial(t, m) * factorial(m))
        rhs = 1 / (m_fact * gamma_ratio)
        if lhs != rhs:
            return False
    return True
