"""Explicit ideal families and the resolving sets built from them.

For a factor s and exponent k:

* ``ideal_I(s, k)`` is J_s^k in factor s and zero elsewhere;
* ``ideal_L(s, k)`` is J_s^{n_s - k} in factor s and the whole factor elsewhere.

Factor indices ``s`` are 1-based throughout this module.
"""
from __future__ import annotations

from .errors import DomainError
from .ring_model import IdealVector, RingSpec


def _check_index(spec: RingSpec, s: int, k: int) -> None:
    if not 1 <= s <= spec.n:
        raise DomainError(f"factor index {s} out of range 1..{spec.n}")
    n_s = spec.orders[s - 1]
    if not 0 <= k <= n_s - 1:
        raise DomainError(f"exponent parameter {k} out of range 0..{n_s - 1} for factor {s}")


def ideal_I(spec: RingSpec, s: int, k: int) -> IdealVector:
    _check_index(spec, s, k)
    exps = list(spec.orders)
    exps[s - 1] = k
    return IdealVector(tuple(exps))


def ideal_L(spec: RingSpec, s: int, k: int) -> IdealVector:
    _check_index(spec, s, k)
    exps = [0] * spec.n
    exps[s - 1] = spec.orders[s - 1] - k
    return IdealVector(tuple(exps))


def _two_factor_set(spec: RingSpec) -> list[IdealVector]:
    n1, n2 = spec.orders
    if n1 == 1 and n2 == 1:
        return [ideal_I(spec, 1, 0)]
    if n1 == 1 or n2 == 1:
        # build with the non-field factor first, then map back
        if n1 == 1:
            swapped = RingSpec((n2, n1))
            return sorted(
                IdealVector(tuple(reversed(v.exps))) for v in _two_factor_set(swapped)
            )
        return [ideal_I(spec, 1, k) for k in range(n1 - 1)]
    return [ideal_I(spec, s, k) for s in (1, 2) for k in range(spec.orders[s - 1] - 1)]


def explicit_resolving_set(spec: RingSpec) -> list[IdealVector]:
    """Resolving set of the size of the upper bound on the metric dimension.

    One factor: the powers J, ..., J^{floor((n_1 - 1)/2)}.  Two factors: the
    I-family with k <= n_s - 2 (only the non-field factor when exactly one
    factor is a field; just I_{1,0} when both are).  Three or more: the whole
    I-family.
    """
    if spec.n == 1:
        return [IdealVector((j,)) for j in range(1, (spec.orders[0] - 1) // 2 + 1)]
    if spec.n == 2:
        return _two_factor_set(spec)
    return [ideal_I(spec, s, k) for s in range(1, spec.n + 1) for k in range(spec.orders[s - 1])]
