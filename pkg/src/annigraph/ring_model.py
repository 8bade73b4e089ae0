"""Finite commutative principal rings as tuples of chain-ring nilpotency orders.

A ring R = R_1 x ... x R_n with each R_i a local chain ring is described, up
to isomorphism of its annihilating-ideal graph, by the orders (n_1, ..., n_n)
of the radicals J_i.  Its ideals are exactly the products
J_1^{m_1} x ... x J_n^{m_n} with 0 <= m_i <= n_i, so an ideal is an exponent
tuple.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DomainError, ParseError

MAX_MODULUS = 2**63


@dataclass(frozen=True)
class RingSpec:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        if not orders:
            raise DomainError("a ring spec needs at least one factor")
        for n in orders:
            if isinstance(n, bool) or not isinstance(n, int):
                raise DomainError(f"order {n!r} is not an integer")
            if n < 1:
                raise DomainError(f"order must be >= 1, got {n}")
        object.__setattr__(self, "orders", orders)

    @property
    def n(self) -> int:
        return len(self.orders)

    def field_count(self) -> int:
        """Number of factors that are fields (radical of order 1)."""
        return sum(1 for n in self.orders if n == 1)

    def ideal_count(self) -> int:
        return math.prod(n + 1 for n in self.orders)

    def vertex_count(self) -> int:
        return self.ideal_count() - 2

    def canonicalize(self) -> RingSpec:
        """Same ring with factors sorted by descending order."""
        return RingSpec(tuple(sorted(self.orders, reverse=True)))

    def __str__(self) -> str:
        return ",".join(map(str, self.orders))


@dataclass(frozen=True, order=True)
class IdealVector:
    """The ideal J_1^{m_1} x ... x J_n^{m_n}; compares lexicographically."""

    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(m) for m in self.exps))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exps)) + ")"

    def __len__(self) -> int:
        return len(self.exps)


def _parse_int_list(text: str, what: str) -> list[int]:
    tokens = [t.strip() for t in text.split(",")]
    if tokens == [""]:
        raise ParseError(f"empty {what}")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok, 10))
        except ValueError:
            raise ParseError(f"invalid token {tok!r} in {what} {text!r}") from None
    return values


def parse_spec(text: str) -> RingSpec:
    """Parse ``"2,1,3"`` into ``RingSpec((2, 1, 3))``."""
    orders = _parse_int_list(text, "ring spec")
    for tok, n in zip(text.split(","), orders):
        if n < 1:
            raise ParseError(f"order must be >= 1, got {tok.strip()!r}")
    return RingSpec(tuple(orders))


def parse_ideal(spec: RingSpec, text: str) -> IdealVector:
    ideal = IdealVector(tuple(_parse_int_list(text, "exponent tuple")))
    check_ideal(spec, ideal)
    return ideal


def factor_modulus(N: int) -> list[tuple[int, int]]:
    """Prime factorisation of N by trial division, primes ascending."""
    if N < 2:
        raise DomainError(f"modulus must be >= 2, got {N}")
    if N > MAX_MODULUS:
        raise DomainError(f"modulus {N} exceeds 2^63")
    factors = []
    p = 2
    while p * p <= N:
        if N % p == 0:
            a = 0
            while N % p == 0:
                N //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if N > 1:
        factors.append((N, 1))
    return factors


def spec_from_modulus(N: int) -> RingSpec:
    """Spec of Z/N: one factor of order a for each prime power p^a || N."""
    return RingSpec(tuple(a for _, a in factor_modulus(N)))


def check_ideal(spec: RingSpec, ideal: IdealVector) -> None:
    if len(ideal.exps) != spec.n:
        raise DomainError(
            f"ideal {ideal} has {len(ideal.exps)} components, ring has {spec.n} factors"
        )
    for m, n in zip(ideal.exps, spec.orders):
        if not 0 <= m <= n:
            raise DomainError(f"exponent {m} out of range 0..{n} in ideal {ideal}")


def annihilator(spec: RingSpec, ideal: IdealVector) -> IdealVector:
    # Ann(J^m) = J^(n-m) in a chain ring with J^n = 0
    check_ideal(spec, ideal)
    return IdealVector(tuple(n - m for m, n in zip(ideal.exps, spec.orders)))


def product(spec: RingSpec, a: IdealVector, b: IdealVector) -> IdealVector:
    check_ideal(spec, a)
    check_ideal(spec, b)
    return IdealVector(
        tuple(min(x + y, n) for x, y, n in zip(a.exps, b.exps, spec.orders))
    )


def is_zero(spec: RingSpec, ideal: IdealVector) -> bool:
    return ideal.exps == spec.orders


def is_vertex(spec: RingSpec, ideal: IdealVector) -> bool:
    """Nonzero ideal with a nonzero annihilator."""
    check_ideal(spec, ideal)
    nonzero = any(m < n for m, n in zip(ideal.exps, spec.orders))
    proper = any(m > 0 for m in ideal.exps)
    return nonzero and proper


def enumerate_ideals(spec: RingSpec) -> list[IdealVector]:
    return [IdealVector(e) for e in itertools.product(*(range(n + 1) for n in spec.orders))]


def enumerate_vertices(spec: RingSpec) -> list[IdealVector]:
    """All vertices of AG(R) in lexicographic order."""
    # product() yields lexicographic order; drop R (all zeros) and 0 (all orders)
    ideals = enumerate_ideals(spec)
    return ideals[1:-1]
