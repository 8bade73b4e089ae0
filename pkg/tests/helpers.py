import itertools
import math


def small_specs(max_ideals: int):
    """Descending order tuples whose ideal count prod(n_i + 1) is at most ``max_ideals``."""
    out = []

    def extend(prefix, top, count):
        if prefix:
            out.append(tuple(prefix))
        for n in range(top, 0, -1):
            if count * (n + 1) <= max_ideals:
                extend(prefix + [n], n, count * (n + 1))

    extend([], max_ideals, 1)
    return sorted(out, key=lambda t: (len(t), t))


def zn_ideal_graph(N: int):
    """AG(Z/N) built from element arithmetic: ideals are dZ/N for divisors d of N.

    Returns (divisors used as vertices, set of adjacent divisor pairs).
    """
    divisors = [d for d in range(1, N + 1) if N % d == 0]
    elements = {d: {(d * x) % N for x in range(N)} for d in divisors}

    def annihilator_nonzero(d):
        return any(all((a * y) % N == 0 for a in elements[d]) for y in range(1, N))

    vertices = [d for d in divisors if d != N and annihilator_nonzero(d)]
    edges = set()
    for d, e in itertools.combinations(vertices, 2):
        if all((a * b) % N == 0 for a in elements[d] for b in elements[e]):
            edges.add(frozenset((d, e)))
    return vertices, edges


def divisor_to_exps(N: int, d: int, primes: list[int]) -> tuple[int, ...]:
    out = []
    for p in primes:
        m = 0
        while d % p == 0:
            d //= p
            m += 1
        out.append(m)
    return tuple(out)


def prime_factors(N: int) -> list[int]:
    return [p for p in range(2, N + 1) if N % p == 0 and all(p % q for q in range(2, math.isqrt(p) + 1))]
