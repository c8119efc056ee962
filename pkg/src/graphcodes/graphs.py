"""m-weighted graphs and their local-complementation orbit machinery.

A graph is a symmetric n x n matrix over F_m with zero diagonal; an edge is
any nonzero entry.  The two orbit moves are weight shifting (scale all edges
at one vertex) and generalized local complementation; their closure, up to
isomorphism, is the LC orbit.  Isomorphism is decided through a canonical
form: the lexicographically least upper-triangle serialization over all
relabelings, computed by partition refinement plus pruned backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels as K
from .fields import field_for


class BudgetError(RuntimeError):
    """An enumeration exceeded its configured ceiling."""


MAX_N = 16


class WeightedGraph:
    """Immutable simple undirected graph with edge weights in F_m \\ {0}."""

    __slots__ = ("m", "adj")

    def __init__(self, m: int, adj) -> None:
        a = np.ascontiguousarray(adj, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.shape[0] > MAX_N:
            raise ValueError(f"at most {MAX_N} vertices supported")
        if m < 2:
            raise ValueError("weight alphabet must have m >= 2")
        if a.max(initial=0) >= m:
            raise ValueError("edge weights must lie in 0..m-1")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if a.trace() != 0:
            raise ValueError("diagonal must be zero")
        a.setflags(write=False)
        self.m = m
        self.adj = a

    # -- basic protocol ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightedGraph)
            and self.m == other.m
            and self.adj.shape == other.adj.shape
            and bool(np.array_equal(self.adj, other.adj))
        )

    def __hash__(self) -> int:
        return hash((self.m, self.adj.tobytes()))

    def __repr__(self) -> str:
        rows = ";".join("".join(format(w, "x") for w in row) for row in self.adj)
        return f"WeightedGraph(m={self.m}, [{rows}])"

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, m: int, n: int) -> "WeightedGraph":
        return cls(m, np.zeros((n, n), dtype=np.uint8))

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Sequence[tuple[int, int, int]]) -> "WeightedGraph":
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v, w in edges:
            a[u, v] = a[v, u] = w
        return cls(m, a)

    @classmethod
    def circulant(cls, m: int, first_row: Sequence[int] | str) -> "WeightedGraph":
        """Circulant graph from the weights (r_1 .. r_{n-1}) after the diagonal.

        The i-th matrix row is the first row cyclically shifted i places, so
        the row must be palindromic (r_j = r_{n-j}) for the matrix to be
        symmetric.
        """
        row = [int(c, 16) if isinstance(first_row, str) else int(c) for c in first_row]
        if any(not 0 <= w < m for w in row):
            raise ValueError("circulant weights must lie in 0..m-1")
        n = len(row) + 1
        if row != row[::-1]:
            raise ValueError("circulant first row must be palindromic")
        a = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                if i != j:
                    a[i, j] = row[(j - i) % n - 1]
        return cls(m, a)

    # -- orbit moves ---------------------------------------------------------

    def weight_shift(self, v: int, a: int) -> "WeightedGraph":
        """Multiply the weight of every edge at v by a (a nonzero)."""
        self._check_move(v, a)
        f = field_for(self.m)
        out = self.adj.copy()
        out[v, :] = f.mul[a, out[v, :]]
        out[:, v] = out[v, :]
        return WeightedGraph(self.m, out)

    def generalized_lc(self, v: int, a: int) -> "WeightedGraph":
        """Local complementation at v with parameter a:
        off-diagonal entries gain a * w(v,i) * w(v,j)."""
        self._check_move(v, a)
        f = field_for(self.m)
        row = self.adj[v]
        out = self.adj.copy()
        scaled = f.mul[a, f.mul[row[:, None], row[None, :]]]
        out = f.add[out, scaled]
        np.fill_diagonal(out, 0)
        out[v, :] = self.adj[v]
        out[:, v] = self.adj[:, v]
        return WeightedGraph(self.m, out)

    def _check_move(self, v: int, a: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        if not 1 <= a < self.m:
            raise ValueError("move parameter must be a nonzero field element")

    def permuted(self, perm: Sequence[int]) -> "WeightedGraph":
        p = np.asarray(perm)
        return WeightedGraph(self.m, self.adj[np.ix_(p, p)])

    def extend(self, pattern: Sequence[int]) -> "WeightedGraph":
        """Add one vertex joined by the given weight pattern (some weight nonzero)."""
        pat = np.asarray(pattern, dtype=np.uint8)
        if pat.shape != (self.n,) or pat.max(initial=0) >= self.m:
            raise ValueError("pattern must give one weight per existing vertex")
        if not pat.any():
            raise ValueError("the new vertex must have at least one neighbour")
        n = self.n + 1
        a = np.zeros((n, n), dtype=np.uint8)
        a[: self.n, : self.n] = self.adj
        a[self.n, : self.n] = pat
        a[: self.n, self.n] = pat
        return WeightedGraph(self.m, a)

    # -- structure -----------------------------------------------------------

    def degrees(self) -> list[int]:
        return [int(d) for d in (self.adj != 0).sum(axis=1)]

    def min_degree(self) -> int:
        return min(self.degrees())

    def is_connected(self) -> bool:
        n = self.n
        if n == 0:
            return True
        seen = np.zeros(n, dtype=bool)
        stack = [0]
        seen[0] = True
        nz = self.adj != 0
        while stack:
            v = stack.pop()
            for u in np.nonzero(nz[v])[0]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(int(u))
        return bool(seen.all())

    def is_regular(self) -> bool:
        d = self.degrees()
        return len(set(d)) <= 1

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adj[i, j]:
                    out.append((i, j, int(self.adj[i, j])))
        return out

    def upper_triangle(self) -> bytes:
        n = self.n
        return bytes(int(self.adj[i, j]) for i in range(n) for j in range(i + 1, n))


def extensions(g: WeightedGraph) -> Iterator[WeightedGraph]:
    """All m^n - 1 one-vertex extensions, in increasing pattern order."""
    m, n = g.m, g.n
    pat = np.zeros(n, dtype=np.uint8)
    for code in range(1, m**n):
        c = code
        for i in range(n):
            pat[i] = c % m
            c //= m
        yield g.extend(pat)


def connectivity_and_degrees(g: WeightedGraph) -> tuple[bool, list[int], int]:
    degs = g.degrees()
    return g.is_connected(), degs, min(degs)


# -- canonical forms ---------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Total-order key for the isomorphism class, plus the automorphism count."""

    key: bytes
    aut_count: int

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.key < other.key


def canonical_key(g: WeightedGraph) -> bytes:
    """Relabeling-invariant key: header (m, n) + least upper-triangle serialization."""
    hi, lo = K.canon_pair(g.adj, g.m)
    return _key_bytes(g.m, g.n, hi, lo)


def _key_bytes(m: int, n: int, hi: int, lo: int) -> bytes:
    digits = K.unpack_digits(hi, lo, n, m)
    return bytes([m, n]) + bytes(digits)


def graph_from_key(key: bytes) -> WeightedGraph:
    m, n = key[0], key[1]
    digits = key[2:]
    a = np.zeros((n, n), dtype=np.uint8)
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = a[j, i] = digits[t]
            t += 1
    return WeightedGraph(m, a)


def automorphism_group_order(g: WeightedGraph) -> int:
    """|Aut| of the weighted graph (labels permuting, weights preserved)."""
    gens = K.canon_generators(g.adj, g.m)
    if not gens:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup

    return int(PermutationGroup([Permutation(list(p)) for p in gens]).order())


def canonical_form(g: WeightedGraph) -> CanonicalForm:
    return CanonicalForm(canonical_key(g), automorphism_group_order(g))


# -- LC orbits ----------------------------------------------------------------


@dataclass
class LCOrbit:
    """Closure of one graph under weight shifts and generalized LC, up to iso.

    Keys are canonical-form bytes, one per isomorphism class in the orbit;
    the representative is the class with the least key.
    """

    m: int
    n: int
    keys_hi: np.ndarray
    keys_lo: np.ndarray
    min_degree: int

    @property
    def size(self) -> int:
        return len(self.keys_hi)

    def key_set(self) -> frozenset[bytes]:
        return frozenset(
            _key_bytes(self.m, self.n, int(h), int(l))
            for h, l in zip(self.keys_hi, self.keys_lo)
        )

    def __contains__(self, g: WeightedGraph | bytes) -> bool:
        if isinstance(g, WeightedGraph):
            hi, lo = K.canon_pair(g.adj, g.m)
        else:
            gg = graph_from_key(g)
            hi, lo = K.canon_pair(gg.adj, gg.m)
        return bool(np.any((self.keys_hi == hi) & (self.keys_lo == lo)))

    def representative(self) -> WeightedGraph:
        i = int(np.lexsort((self.keys_lo, self.keys_hi))[0])
        return graph_from_key(
            _key_bytes(self.m, self.n, int(self.keys_hi[i]), int(self.keys_lo[i]))
        )

    def graphs(self) -> Iterator[WeightedGraph]:
        order = np.lexsort((self.keys_lo, self.keys_hi))
        for i in order:
            yield graph_from_key(
                _key_bytes(self.m, self.n, int(self.keys_hi[i]), int(self.keys_lo[i]))
            )

    def canonical_forms(self) -> list[CanonicalForm]:
        return [canonical_form(g) for g in self.graphs()]


def lc_orbit(
    g: WeightedGraph,
    limit: int = 10**6,
    *,
    interleaved: bool = False,
) -> LCOrbit:
    """BFS closure of g under generalized LC and weight shifts, deduplicated
    by canonical form.

    Shifting commutes with generalized LC, so by default the closure runs
    under LC first and applies shifts to the result; ``interleaved`` forces
    the single-pass variant (used for cross-checking).  Raises BudgetError
    when the class count exceeds ``limit`` (0 disables the ceiling).
    """
    summary = orbit_summary(g, budget=limit, interleaved=interleaved, keep_keys=True)
    return LCOrbit(g.m, g.n, summary.keys_hi, summary.keys_lo, summary.min_degree)


@dataclass
class OrbitSummary:
    size: int
    min_key_hi: int
    min_key_lo: int
    min_degree: int
    covered: np.ndarray | None
    found_target: bool
    keys_hi: np.ndarray | None = None
    keys_lo: np.ndarray | None = None

    def min_key(self, m: int, n: int) -> bytes:
        return _key_bytes(m, n, self.min_key_hi, self.min_key_lo)


def orbit_summary(
    g: WeightedGraph,
    *,
    budget: int = 0,
    interleaved: bool = False,
    keep_keys: bool = False,
    ekeys: tuple[np.ndarray, np.ndarray] | None = None,
    target: tuple[int, int] | None = None,
) -> OrbitSummary:
    """Run the orbit closure and report size, least key, minimum vertex degree,
    which of the ``ekeys`` canonical pairs were met, and whether ``target``
    was reached (with early exit)."""
    m, n = g.m, g.n
    f = field_for(m)
    hi0, lo0 = K.canon_pair(g.adj, m)
    seeds_hi = np.array([hi0], dtype=np.int64)
    seeds_lo = np.array([lo0], dtype=np.int64)
    if ekeys is None:
        e_hi = np.empty(0, dtype=np.int64)
        e_lo = np.empty(0, dtype=np.int64)
    else:
        e_hi, e_lo = ekeys
    covered = np.zeros(len(e_hi), dtype=bool)
    tgt_hi, tgt_lo = target if target is not None else (-1, -1)
    addm = f.add[:m, :m].copy()
    mulm = f.mul[:m, :m].copy()
    none = np.empty(0, dtype=np.int64)
    # omega^(m+1) generates the multiplicative group of the base field, and
    # both move families compose along their parameter, so one generator per
    # move type suffices for the closure
    base_gen = int(f.exp[m + 1]) if m > 2 else 1

    if interleaved:
        khi, klo, mindeg, status = K.closure(
            seeds_hi, seeds_lo, n, m,
            np.arange(1, m, dtype=np.int64), np.arange(2, m, dtype=np.int64),
            addm, mulm, e_hi, e_lo, covered, budget, tgt_hi, tgt_lo,
        )
    else:
        khi, klo, mindeg, status = K.closure(
            seeds_hi, seeds_lo, n, m,
            np.array([1], dtype=np.int64), none,
            addm, mulm, e_hi, e_lo, covered, budget, tgt_hi, tgt_lo,
        )
        if status == 0 and m > 2:
            khi, klo, mindeg, status = K.closure(
                khi, klo, n, m,
                none, np.array([base_gen], dtype=np.int64),
                addm, mulm, e_hi, e_lo, covered, budget, tgt_hi, tgt_lo,
            )
    if status == 1:
        raise BudgetError(
            f"orbit exceeded the ceiling of {budget} isomorphism classes"
        )
    found = status == 2
    i = int(np.lexsort((klo, khi))[0])
    return OrbitSummary(
        size=len(khi),
        min_key_hi=int(khi[i]),
        min_key_lo=int(klo[i]),
        min_degree=int(mindeg),
        covered=covered if ekeys is not None else None,
        found_target=found,
        keys_hi=khi if keep_keys else None,
        keys_lo=klo if keep_keys else None,
    )
