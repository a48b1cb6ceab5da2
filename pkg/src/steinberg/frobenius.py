"""Point counts over F_p and traces of Frobenius.

Two independent counting methods: plain (x, y) enumeration, used at p <= 3
and as the cross-check oracle, and for odd p a completed-square Legendre sum
p + 1 + sum_x chi(4x^3 + b2·x^2 + 2·b4·x + b6) with the residue table built
in a single pass over the squares mod p.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import factorize, is_prime, primes_up_to
from .local_reduction import ReductionType, tate_local
from .weierstrass import WeierstrassModel

__all__ = [
    "count_points",
    "count_points_enumeration",
    "count_reduced_points",
    "a_p",
    "ApTable",
    "ap_table",
]

# above this the residue table would not fit comfortably; fall back to scalar code
_VECTOR_MAX_P = 1 << 25


def _enumerate_reduced(ai: tuple[int, int, int, int, int], p: int) -> int:
    a1, a2, a3, a4, a6 = (a % p for a in ai)
    count = 1  # the point at infinity
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == rhs:
                count += 1
    return count


def _legendre_sum_reduced(ai: tuple[int, int, int, int, int], p: int) -> int:
    a1, a2, a3, a4, a6 = ai
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    if p <= _VECTOR_MAX_P:
        xs = np.arange(p, dtype=np.int64)
        chi = np.full(p, -1, dtype=np.int8)
        chi[(xs * xs) % p] = 1
        chi[0] = 0
        g = (4 * xs + b2 % p) % p
        g = (g * xs + (2 * b4) % p) % p
        g = (g * xs + b6 % p) % p
        return p + 1 + int(chi[g].sum(dtype=np.int64))
    chi = bytearray(p)  # 0 -> chi=0, 1 -> chi=+1, 2 -> chi=-1
    for z in range(1, p):
        chi[z] = 2
    z = 1
    for _ in range((p - 1) // 2):
        chi[z * z % p] = 1
        z += 1
    total = 0
    c2, c1, c0 = b2 % p, 2 * b4 % p, b6 % p
    for x in range(p):
        g = ((4 * x + c2) * x % p + c1) * x % p
        g = (g + c0) % p
        total += 1 if chi[g] == 1 else (-1 if chi[g] == 2 else 0)
    return p + 1 + total


def count_reduced_points(ai: tuple[int, int, int, int, int], p: int) -> int:
    """#E(F_p) for the reduction of the given coefficients (must be nonsingular).

    This is the raw kernel: it trusts the caller about good reduction at p
    and about the model being p-minimal.
    """
    if p <= 3:
        return _enumerate_reduced(ai, p)
    return _legendre_sum_reduced(ai, p)


def count_points_enumeration(model: WeierstrassModel, p: int) -> int:
    """Independent O(p^2) oracle: try every (x, y) in F_p x F_p, plus infinity."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if model.disc % p == 0:
        raise ValueError(f"the model is singular mod {p}")
    return _enumerate_reduced(model.a_invariants, p)


def count_points(model: WeierstrassModel, p: int) -> int:
    """#E(F_p) at a prime of good reduction (computed on a p-minimal model)."""
    data = tate_local(model, p)
    if data.rtype is not ReductionType.GOOD:
        raise ValueError(f"bad reduction at {p} ({data.rtype.value})")
    return p + 1 - data.a_p


def a_p(model: WeierstrassModel, p: int) -> int:
    """Trace of Frobenius at p: p + 1 - #E(F_p) at good primes, the sign
    +-1 at multiplicative primes, 0 at additive ones."""
    return tate_local(model, p).a_p


@dataclass(frozen=True)
class ApTable:
    """a_p for every prime p <= bound, as a plain dict keyed by p."""

    model: WeierstrassModel
    bound: int
    entries: dict

    def to_dict(self) -> dict:
        return {
            "curve": list(self.model.a_invariants),
            "bound": self.bound,
            "entries": [[p, self.entries[p]] for p in sorted(self.entries)],
        }


def ap_table(model: WeierstrassModel, bound: int) -> ApTable:
    """Tabulate a_p over all primes up to bound.

    Primes dividing the discriminant go through the local classification
    (which also covers non-minimal-but-good primes); away from the
    discriminant the model is already p-minimal with good reduction, so the
    counting kernel applies directly.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    special = {p for p, _ in factorize(model.disc)}
    ai = model.a_invariants
    entries = {}
    for p in primes_up_to(bound):
        if p in special:
            entries[p] = tate_local(model, p).a_p
        else:
            entries[p] = p + 1 - count_reduced_points(ai, p)
    return ApTable(model, bound, entries)
