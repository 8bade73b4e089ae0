"""Exact metric dimension, resolving-set certificates and twin classes.

The solver works on any square distance matrix.  Every unordered vertex pair
{u, v} is turned into the bitmask of vertices w with d(u, w) != d(v, w); a
set W resolves the graph exactly when it meets every such mask.  The minimum
size is found by a branch and bound over these masks, tried at increasing
cardinalities, and the lexicographically smallest basis of that size is then
fixed one position at a time.

``brute_force_metric_dimension`` is an unpruned cross-check: it tries every
subset in lexicographic order and compares representation vectors directly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .ag_graph import AGGraph
from .errors import InputError

Representation = tuple[int, ...]


def _matrix(graph) -> np.ndarray:
    if isinstance(graph, AGGraph):
        return graph.distances
    D = np.asarray(graph)
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise InputError("distance matrix must be square")
    return D


def _indices(graph, vertices) -> list[int]:
    if isinstance(graph, AGGraph):
        return [graph.index_of(v) for v in vertices]
    V = len(_matrix(graph))
    out = []
    for v in vertices:
        if not 0 <= int(v) < V:
            raise InputError(f"vertex index {v} out of range")
        out.append(int(v))
    return out


def _labels(graph, indices):
    if isinstance(graph, AGGraph):
        return [graph.vertices[i] for i in indices]
    return list(indices)


def representation(graph, v, W) -> Representation:
    D = _matrix(graph)
    (i,) = _indices(graph, [v])
    return tuple(int(D[i, w]) for w in _indices(graph, W))


@dataclass
class ResolvingSetCertificate:
    witness: list
    table: dict = field(default_factory=dict)
    resolves: bool = False

    def to_json(self) -> dict:
        return {
            "witness": [str(w) for w in self.witness],
            "table": {str(v): list(r) for v, r in self.table.items()},
            "resolves": self.resolves,
        }


def is_resolving(graph, W) -> ResolvingSetCertificate:
    D = _matrix(graph)
    idx = _indices(graph, W)
    if len(set(idx)) != len(idx):
        raise InputError("witness set contains a duplicate vertex")
    rows = D[:, idx] if idx else np.zeros((len(D), 0), dtype=D.dtype)
    labels = _labels(graph, range(len(D)))
    table = {v: tuple(int(x) for x in row) for v, row in zip(labels, rows)}
    resolves = len(set(table.values())) == len(table)
    return ResolvingSetCertificate(witness=list(W), table=table, resolves=resolves)


# --- pair masks -------------------------------------------------------------

def _row_to_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def distinguisher_masks(D: np.ndarray) -> list[int]:
    """One bitmask per pair u < v: the vertices whose distances tell u and v apart."""
    masks = []
    for u in range(len(D) - 1):
        diff = D[u + 1:] != D[u]
        masks.extend(_row_to_mask(row) for row in diff)
    return masks


def _reduce(masks: list[int]) -> list[int]:
    # a mask containing another is implied by it
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    if len(unique) > 20_000:
        return unique
    kept: list[int] = []
    for m in unique:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


# --- twins --------------------------------------------------------------------

@dataclass
class TwinPartition:
    classes: list[list]

    def forced_count(self) -> int:
        """How many vertices any resolving set must contain because of twins."""
        return sum(len(c) - 1 for c in self.classes)


def _twin_classes(D: np.ndarray) -> list[list[int]]:
    V = len(D)
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(V - 1):
        diff = D[u + 1:] != D[u]
        diff[:, u] = False
        others = np.arange(u + 1, V)
        diff[others - u - 1, others] = False
        for v in others[~diff.any(axis=1)]:
            parent[find(int(v))] = find(u)
    groups: dict[int, list[int]] = {}
    for x in range(V):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values(), key=lambda c: c[0])


def twin_partition(graph) -> TwinPartition:
    D = _matrix(graph)
    return TwinPartition([_labels(graph, c) for c in _twin_classes(D)])


# --- branch and bound -------------------------------------------------------

def _packing_bound(sets: list[int], allowed: int, budget: int) -> int:
    """Size of a greedy family of pairwise disjoint sets (stops past budget)."""
    used = 0
    count = 0
    for s in sets:
        a = s & allowed
        if not a & used:
            used |= a
            count += 1
            if count > budget:
                break
    return count


def _can_hit(sets: list[int], allowed: int, budget: int) -> bool:
    """Can at most ``budget`` vertices from ``allowed`` meet every set?"""
    if not sets:
        return True
    if budget <= 0:
        return False
    best, best_size = 0, None
    for s in sets:
        size = (s & allowed).bit_count()
        if best_size is None or size < best_size:
            best, best_size = s, size
            if size <= 1:
                break
    if best_size == 0:
        return False
    if _packing_bound(sets, allowed, budget) > budget:
        return False
    candidates = best & allowed
    remaining_allowed = allowed
    while candidates:
        w = candidates & -candidates
        candidates ^= w
        rest = [s for s in sets if not s & w]
        if _can_hit(rest, remaining_allowed, budget - 1):
            return True
        # later branches never use w, earlier ones already covered it
        remaining_allowed &= ~w
    return False


def _lex_first_basis(sets: list[int], V: int, size: int) -> list[int]:
    full = (1 << V) - 1
    basis: list[int] = []
    unhit = sets
    last = -1
    for pos in range(size):
        for c in range(last + 1, V):
            w = 1 << c
            rest = [s for s in unhit if not s & w]
            allowed = full & ~((w << 1) - 1)
            if _can_hit(rest, allowed, size - pos - 1):
                basis.append(c)
                unhit = rest
                last = c
                break
        else:
            raise AssertionError("no basis found at a feasible size")
    return basis


def solve_matrix(
    D: np.ndarray, lower_hint: int = 0, upper_hint: int | None = None
) -> tuple[int, list[int]]:
    """Metric dimension of distance matrix ``D`` and its lexicographically first basis."""
    V = len(D)
    if upper_hint is None:
        upper_hint = V
    if not 0 <= lower_hint <= upper_hint <= V:
        raise InputError(
            f"hints must satisfy 0 <= lower ({lower_hint}) <= upper ({upper_hint}) <= |V| ({V})"
        )
    if V <= 1:
        return 0, []
    sets = _reduce(distinguisher_masks(D))
    full = (1 << V) - 1
    twins = sum(len(c) - 1 for c in _twin_classes(D))
    k = max(lower_hint, twins)
    while not _can_hit(sets, full, k):
        k += 1
        if k > upper_hint:
            raise InputError(f"no resolving set of size <= {upper_hint}")
    return k, _lex_first_basis(sets, V, k)


def exact_metric_dimension(graph, lower_hint: int = 0, upper_hint: int | None = None):
    """Return ``(dimension, basis)``; the basis is the lexicographically least one.

    ``lower_hint`` must be a true lower bound; it only skips cardinalities.
    """
    dim, basis = solve_matrix(_matrix(graph), lower_hint, upper_hint)
    return dim, _labels(graph, basis)


# --- unpruned oracle ----------------------------------------------------------

_CHUNK = 1 << 16


def _combination_chunks(V: int, k: int):
    it = itertools.combinations(range(V), k)
    total = comb(V, k)
    for start in range(0, total, _CHUNK):
        n = min(_CHUNK, total - start)
        flat = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(it, n)),
            dtype=np.int64,
            count=n * k,
        )
        yield flat.reshape(n, k)


def _first_resolving(D: np.ndarray, k: int) -> list[int] | None:
    V = len(D)
    if k == 0:
        return [] if V <= 1 else None
    base = int(D.max()) + 1
    if base ** k >= 2**62:
        for combo in itertools.combinations(range(V), k):
            if len({tuple(row) for row in D[:, combo].tolist()}) == V:
                return list(combo)
        return None
    dtype = np.int32 if base ** k < 2**31 else np.int64
    weights = (base ** np.arange(k)).astype(dtype)
    rows = D.T.astype(dtype)
    for combos in _combination_chunks(V, k):
        # codes[c, v] encodes r(v | combo c) in base ``base``
        codes = rows[combos].transpose(0, 2, 1) @ weights
        codes.sort(axis=1)
        ok = (codes[:, 1:] != codes[:, :-1]).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return combos[hits[0]].tolist()
    return None


def brute_force_metric_dimension(graph):
    """Unpruned exhaustive search; only practical for small graphs."""
    D = _matrix(graph)
    for k in range(len(D) + 1):
        found = _first_resolving(D, k)
        if found is not None:
            return k, _labels(graph, found)
    raise AssertionError("the full vertex set always resolves")
