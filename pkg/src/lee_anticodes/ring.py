"""Exact arithmetic and the weight functions on the chain ring Z/p^s Z.

Everything here works on plain Python integers reduced modulo p^s, so all
results are exact for any prime p and any nilpotency index s >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ChainRingParams:
    """The ring R = Z/p^s Z, whose ideals form the chain R > <p> > ... > <p^s> = 0."""

    p: int
    s: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")

    @property
    def modulus(self) -> int:
        return self.p**self.s

    def require_odd(self) -> None:
        """The Lee bound machinery is only available for odd p."""
        if self.p == 2:
            raise ValueError("operation requires an odd prime p")

    @property
    def max_lee(self) -> int:
        """Largest Lee weight of a single residue, (p^s - 1) / 2; odd p only."""
        self.require_odd()
        return (self.modulus - 1) // 2

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def valuation(self, x: int) -> int:
        """Largest i <= s with p^i dividing x, where valuation(0) = s."""
        x %= self.modulus
        if x == 0:
            return self.s
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def unit_inverse(self, x: int) -> int:
        x %= self.modulus
        if x % self.p == 0:
            raise ValueError(f"{x} is not a unit modulo {self.modulus}")
        return pow(x, -1, self.modulus)

    def lee_weight(self, x: int) -> int:
        x %= self.modulus
        return min(x, self.modulus - x)

    def hom_weight_scaled(self, x: int) -> int:
        """Homogeneous weight scaled by (p - 1) so that it stays an integer.

        0 on zero, p on the nonzero socle <p^(s-1)>, and p - 1 everywhere else.
        """
        x %= self.modulus
        if x == 0:
            return 0
        if x % self.p ** (self.s - 1) == 0:
            return self.p
        return self.p - 1

    def ideal_max_lee(self, i: int) -> int:
        """M_i, the largest Lee weight attained on the ideal <p^i>; odd p only.

        Computed by direct maximization over the p^(s-i) ideal elements and
        asserted against the closed form (p^s - p^i) / 2.
        """
        self.require_odd()
        if not 0 <= i < self.s:
            raise ValueError(f"ideal index must lie in 0..{self.s - 1}, got {i}")
        step = self.p**i
        best = max(self.lee_weight(step * t) for t in range(self.p ** (self.s - i)))
        if best != (self.modulus - step) // 2:
            raise AssertionError(f"ideal Lee maximum mismatch at i={i}: {best}")
        return best

    @property
    def ideal_max_lee_profile(self) -> tuple[int, ...]:
        """The sequence M_0..M_(s-1); strictly decreasing for odd p."""
        return tuple(self.ideal_max_lee(i) for i in range(self.s))


def hamming_weight(vec) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for x in vec if x != 0)


def lee_weight_vec(params: ChainRingParams, vec) -> int:
    return sum(params.lee_weight(x) for x in vec)


def hom_weight_scaled_vec(params: ChainRingParams, vec) -> int:
    return sum(params.hom_weight_scaled(x) for x in vec)


METRICS = ("lee", "hamming", "hom")


def vector_weight(params: ChainRingParams, vec, metric: str) -> int:
    """Weight of a vector in the chosen metric; homogeneous is the scaled one."""
    if metric == "lee":
        return lee_weight_vec(params, vec)
    if metric == "hamming":
        return hamming_weight(vec)
    if metric == "hom":
        return hom_weight_scaled_vec(params, vec)
    raise ValueError(f"unknown metric {metric!r}")
