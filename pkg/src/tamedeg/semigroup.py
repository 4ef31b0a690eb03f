"""Two-generator numerical semigroup queries: membership, Frobenius, gaps."""
from __future__ import annotations

from math import gcd
from typing import Optional


class SemigroupPair:
    """The additive semigroup d1*N + d2*N, normalized so d1 <= d2."""

    __slots__ = ("d1", "d2")

    def __init__(self, d1: int, d2: int):
        if d1 < 1 or d2 < 1:
            raise ValueError("generators must be positive")
        self.d1, self.d2 = sorted((d1, d2))

    def member(self, k: int) -> Optional[tuple[int, int]]:
        """A decomposition k = k1*d1 + k2*d2 with maximal k2, or None.

        Pairs with gcd g > 1 are handled by reduction to the coprime pair;
        membership then requires g | k.
        """
        if k < 0:
            return None
        d1, d2 = self.d1, self.d2
        g = gcd(d1, d2)
        if k % g:
            return None
        d1, d2, k = d1 // g, d2 // g, k // g
        # maximal k2 with k2*d2 <= k and k2 = k * d2^{-1} (mod d1)
        k2_res = (k * pow(d2, -1, d1)) % d1
        top = k // d2
        if top < k2_res:
            return None
        k2 = k2_res + ((top - k2_res) // d1) * d1
        return ((k - k2 * d2) // d1, k2)

    def __contains__(self, k: int) -> bool:
        return self.member(k) is not None

    def frobenius(self) -> int:
        """(d1-1)(d2-1) - 1, the largest non-member; -1 when d1 = 1."""
        if gcd(self.d1, self.d2) != 1:
            raise ValueError("Frobenius number requires coprime generators")
        if self.d1 == 1:
            return -1
        return (self.d1 - 1) * (self.d2 - 1) - 1

    def gaps(self, min_k: int = 0) -> list[int]:
        """All non-members k with min_k <= k <= frobenius()."""
        frob = self.frobenius()
        return [k for k in range(max(min_k, 0), frob + 1) if k not in self]

    def __repr__(self):
        return f"SemigroupPair({self.d1}, {self.d2})"


def member(d1: int, d2: int, k: int) -> Optional[tuple[int, int]]:
    return SemigroupPair(d1, d2).member(k)


def frobenius(d1: int, d2: int) -> int:
    return SemigroupPair(d1, d2).frobenius()


def gaps(d1: int, d2: int, min_k: int = 0) -> list[int]:
    return SemigroupPair(d1, d2).gaps(min_k)
