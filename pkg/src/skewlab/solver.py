"""Exact maximum-clique engine and the extremal quantities built on it.

Every extremal question here (largest pairwise-skewincident family, largest
family of pairwise-neighbor subsets, largest pairwise-attractive set of
mappings) is a maximum clique over an explicit symmetric relation, so one
exact branch-and-bound engine backs them all. Self-relation never matters:
families are constrained on distinct pairs only.
"""

from __future__ import annotations

import itertools
import json
import sys
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .bitstring import BitString, influence_bits
from .counting import count_C, fibonacci_count
from .graphs import Graph, Partition, as_partition

MAX_ELEMENTS = 4096
EXACT_M_DEFAULT_CAP = 8
EXACT_M_HARD_CAP = 12
MAX_MG_VERTICES = 12


@dataclass(frozen=True)
class CliqueInstance:
    """A symmetric relation over element indices, as bitset adjacency rows."""

    count: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.count <= MAX_ELEMENTS:
            raise ValueError(f"element count must be in [1, {MAX_ELEMENTS}], got {self.count}")
        if len(self.rows) != self.count:
            raise ValueError("rows length must equal element count")

    @classmethod
    def from_relation(cls, count: int, relation: Callable[[int, int], bool]) -> CliqueInstance:
        """Build from a symmetric predicate; relation(i, i) is never consulted."""
        if not 1 <= count <= MAX_ELEMENTS:
            raise ValueError(f"element count must be in [1, {MAX_ELEMENTS}], got {count}")
        rows = [0] * count
        for i in range(count):
            for j in range(i + 1, count):
                if relation(i, j):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(count, tuple(rows))

    def related(self, i: int, j: int) -> bool:
        return self.rows[i] >> j & 1 == 1


@dataclass
class ExtremalResult:
    """Size and witness of an exact extremal computation."""

    size: int
    witness: list
    method: str  # "branch-and-bound" | "enumeration"
    elapsed_ms: float = 0.0


def _greedy_color_order(p: int, rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Order the candidate set by greedy color class; the class number of a
    vertex bounds the largest clique inside the candidates up to it."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = p
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            rest ^= low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _greedy_clique_size(rows: Sequence[int], count: int) -> int:
    cur = (1 << count) - 1
    size = 0
    while cur:
        v = (cur & -cur).bit_length() - 1
        size += 1
        cur &= rows[v]
    return size


def _degree_order(rows: Sequence[int], count: int) -> tuple[list[int], list[int], list[int]]:
    """Relabel elements by descending degree (ties by index); the tighter
    colorings this yields drive all the pruning below."""
    order = sorted(range(count), key=lambda v: (-rows[v].bit_count(), v))
    pos = [0] * count
    for i, v in enumerate(order):
        pos[v] = i
    rrows = [0] * count
    for i, v in enumerate(order):
        m = rows[v]
        nb = 0
        while m:
            low = m & -m
            nb |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rrows[i] = nb
    return order, pos, rrows


def _max_clique_search(rrows: Sequence[int], count: int) -> tuple[int, list[int]]:
    """Exact maximum clique (size and one witness) over reordered rows."""
    best = _greedy_clique_size(rrows, count)
    best_members: list[int] = []
    stack: list[int] = []

    def expand(p: int) -> None:
        nonlocal best, best_members
        corder, cbounds = _greedy_color_order(p, rrows)
        for i in range(len(corder) - 1, -1, -1):
            if len(stack) + cbounds[i] <= best:
                return
            v = corder[i]
            sub = p & rrows[v]
            stack.append(v)
            if sub:
                expand(sub)
            elif len(stack) > best:
                best = len(stack)
                best_members = stack.copy()
            stack.pop()
            p &= ~(1 << v)

    expand((1 << count) - 1)
    if not best_members:  # greedy bound was already optimal; rebuild it
        cur = (1 << count) - 1
        while cur:
            v = (cur & -cur).bit_length() - 1
            best_members.append(v)
            cur &= rrows[v]
    return best, best_members


def _clique_witness(rrows: Sequence[int], p: int, need: int) -> list[int] | None:
    """A clique of exactly ``need`` members inside the candidate set, or None."""
    if need <= 0:
        return []
    corder, cbounds = _greedy_color_order(p, rrows)
    if not cbounds or cbounds[-1] < need:
        return None
    for i in range(len(corder) - 1, -1, -1):
        if cbounds[i] < need:
            return None
        v = corder[i]
        rest = _clique_witness(rrows, p & rrows[v], need - 1)
        if rest is not None:
            rest.append(v)
            return rest
        p &= ~(1 << v)
    return None


def max_clique(instance: CliqueInstance) -> ExtremalResult:
    """Exact maximum set of pairwise-related elements.

    The witness is the lexicographically first optimum: after the size is
    fixed by the search, elements are committed in ascending index order
    whenever a completion to that size still exists. A current optimum is
    carried along so only genuine exclusions pay for a search.
    """
    t0 = time.perf_counter()
    rows, count = instance.rows, instance.count
    old_limit = sys.getrecursionlimit()
    needed = count + 200
    if needed > old_limit:
        sys.setrecursionlimit(needed)
    try:
        order, pos, rrows = _degree_order(rows, count)
        size, members = _max_clique_search(rrows, count)
        known = {order[v] for v in members}  # certifies the remaining target
        witness: list[int] = []
        p = (1 << count) - 1  # candidates, in reordered labels
        for i in range(count):
            if len(witness) == size:
                break
            ri = pos[i]
            if not p >> ri & 1:
                continue
            if i in known:
                witness.append(i)
                p &= rrows[ri]
                continue
            completion = _clique_witness(rrows, p & rrows[ri], size - len(witness) - 1)
            if completion is not None:
                witness.append(i)
                p &= rrows[ri]
                known = set(witness) | {order[v] for v in completion}
            else:
                p &= ~(1 << ri)
    finally:
        sys.setrecursionlimit(old_limit)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return ExtremalResult(size, witness, "branch-and-bound", elapsed)


def enumerate_max_clique(instance: CliqueInstance) -> ExtremalResult:
    """Independent oracle: scan all 2^count subsets with an incremental
    is-clique table. Usable up to 20 elements; witness is the optimum with
    the smallest subset bitmask."""
    if instance.count > 20:
        raise ValueError(f"enumeration is capped at 20 elements, got {instance.count}")
    t0 = time.perf_counter()
    rows, count = instance.rows, instance.count
    is_clique = bytearray(1 << count)
    is_clique[0] = 1
    best_size = 0
    best_mask = 0
    for s in range(1, 1 << count):
        low = s & -s
        rest = s ^ low
        if is_clique[rest] and rows[low.bit_length() - 1] & rest == rest:
            is_clique[s] = 1
            pc = s.bit_count()
            if pc > best_size:
                best_size = pc
                best_mask = s
    witness = [i for i in range(count) if best_mask >> i & 1]
    elapsed = (time.perf_counter() - t0) * 1000.0
    return ExtremalResult(best_size, witness, "enumeration", elapsed)


def exact_M(n: int, override_cap: bool = False) -> ExtremalResult:
    """Largest family of length-n strings, any two distinct ones skewincident.

    Capped at n = 8 (256 elements) unless ``override_cap`` is set; the hard
    limit of n = 12 keeps the relation within the clique engine's element cap.
    """
    cap = EXACT_M_HARD_CAP if override_cap else EXACT_M_DEFAULT_CAP
    if not 1 <= n <= cap:
        hint = "" if override_cap else " (pass override_cap=True for n up to 12)"
        raise ValueError(f"n must be in [1, {cap}], got {n}{hint}")
    count = 1 << n
    rows = [0] * count
    for x in range(count):
        fx = influence_bits(x, n)
        for y in range(x + 1, count):
            if y & fx:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    result = max_clique(CliqueInstance(count, tuple(rows)))
    result.witness = [BitString(n, bits) for bits in result.witness]
    return result


def exact_MG(g: Graph) -> ExtremalResult:
    """Largest family of distinct vertex subsets of g, any two of which
    contain a pair of adjacent vertices.

    Elements are all subsets, indexed by bitmask with vertex 0 least
    significant; the witness lists subsets as sorted vertex tuples.
    """
    if g.vertex_count > MAX_MG_VERTICES:
        raise ValueError(
            f"vertex count must be <= {MAX_MG_VERTICES}, got {g.vertex_count}"
        )
    nsub = 1 << g.vertex_count
    # nb[mask] = union of neighborhoods over the subset's vertices
    nb = [0] * nsub
    for mask in range(1, nsub):
        low = mask & -mask
        nb[mask] = nb[mask ^ low] | g.neighbors(low.bit_length() - 1)
    rows = [0] * nsub
    for a in range(nsub):
        nba = nb[a]
        for b in range(a + 1, nsub):
            if b & nba:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    result = max_clique(CliqueInstance(nsub, tuple(rows)))
    result.witness = [
        tuple(v for v in range(g.vertex_count) if mask >> v & 1)
        for mask in result.witness
    ]
    return result


def multipartite_M(p: Partition | Sequence[int]) -> int:
    """Closed form for the neighbor-family maximum of a complete multipartite
    graph with the given part sizes: 2^(sum) - sum of 2^size + 2r - 1."""
    part = as_partition(p)
    return (1 << part.total) - sum(1 << s for s in part.parts) + 2 * len(part) - 1


def exact_attractive(f_graph: Graph, g_graph: Graph, n: int) -> ExtremalResult:
    """Largest set of mappings [n] -> V(g_graph), any two of which send some
    f_graph-adjacent pair of positions (loops allowed) to g_graph-adjacent
    values.

    Positions 1..n use the first n vertices of f_graph. Elements are all
    |V(g)|^n mappings, ordered with position 1 as the most significant digit;
    the witness lists mappings as value tuples.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if f_graph.vertex_count < n:
        raise ValueError(
            f"position graph has {f_graph.vertex_count} vertices, need at least {n}"
        )
    gv = g_graph.vertex_count
    count = gv ** n
    if count > MAX_ELEMENTS:
        raise ValueError(f"|V(g)|^n = {count} exceeds the cap of {MAX_ELEMENTS}")
    maps = list(itertools.product(range(gv), repeat=n))
    fpairs = [
        (i, j) for i in range(n) for j in range(n) if f_graph.adjacent(i, j)
    ]

    def related(ia: int, ib: int) -> bool:
        a, b = maps[ia], maps[ib]
        return any(g_graph.adjacent(a[i], b[j]) for i, j in fpairs)

    result = max_clique(CliqueInstance.from_relation(count, related))
    result.witness = [maps[i] for i in result.witness]
    return result


@dataclass(frozen=True)
class SandwichReport:
    """The two-sided bracket on the exact skewincidence maximum at one n."""

    n: int
    construction_size: int
    exact_size: int
    upper_bound: int

    @property
    def ok(self) -> bool:
        return self.construction_size <= self.exact_size <= self.upper_bound


def sandwich_check(n: int) -> SandwichReport:
    """Bracket exact_M(n) between the construction size and the
    antichain-complement bound 2^n - (f_n - m_n)."""
    if not 1 <= n <= EXACT_M_DEFAULT_CAP:
        raise ValueError(f"n must be in [1, {EXACT_M_DEFAULT_CAP}], got {n}")
    from .sperner import max_antichain  # import here: sperner builds on solver

    lower = count_C(n)
    exact = exact_M(n).size
    upper = (1 << n) - (fibonacci_count(n) - max_antichain(n).size)
    return SandwichReport(n, lower, exact, upper)


def witness_descriptor(item: object) -> object:
    """JSON-friendly form of one witness entry."""
    if isinstance(item, BitString):
        return str(item)
    if isinstance(item, tuple):
        return list(item)
    return item


def result_to_json(result: ExtremalResult, include_elapsed: bool = True) -> str:
    """Serialize a result with sorted keys; witness entries become literals
    (strings) or index lists."""
    payload: dict[str, object] = {
        "size": result.size,
        "witness": [witness_descriptor(w) for w in result.witness],
        "method": result.method,
    }
    if include_elapsed:
        payload["elapsed_ms"] = result.elapsed_ms
    return json.dumps(payload, sort_keys=True)
