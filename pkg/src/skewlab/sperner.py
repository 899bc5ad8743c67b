"""Exact maximum antichains inside the no-adjacent-ones strings.

The primary route goes through chain covers: over the full dominance order
(every strictly-dominated pair, not just covering pairs) a minimum chain
cover has size (number of elements) - (maximum bipartite matching on the
two-copy split graph), and that cover size equals the maximum antichain.
A witness antichain falls out of the matching via the standard
alternating-reachability vertex cover. An independent oracle solves the
same question as a maximum clique of the incomparability relation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bitstring import BitString
from .constructions import enumerate_fibonacci
from .counting import fibonacci_count
from .solver import CliqueInstance, max_clique

MAX_POSET_LENGTH = 20
ORACLE_MAX_LENGTH = 10


def _check_poset_length(n: int) -> None:
    if not 1 <= n <= MAX_POSET_LENGTH:
        raise ValueError(f"n must be in [1, {MAX_POSET_LENGTH}], got {n}")


@dataclass(frozen=True)
class FibonacciPoset:
    """The no-adjacent-ones strings of one length under coordinatewise
    dominance; elements are kept in lexicographic order."""

    n: int
    elements: tuple[BitString, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        """Dominance between elements by index."""
        return self.elements[i].bits & ~self.elements[j].bits == 0

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)


def build_fibonacci_poset(n: int) -> FibonacciPoset:
    _check_poset_length(n)
    return FibonacciPoset(n, tuple(enumerate_fibonacci(n).sorted_members()))


def _strict_dominance_matching(
    bits: list[int],
) -> tuple[list[int], list[int], list[list[int]]]:
    """Maximum matching over all strictly-dominated pairs.

    Left copy u connects to right copy v iff bits[v] is a proper submask of
    bits[u]. Greedy seeding in index order, then Hopcroft-Karp phases;
    returns (match_of_left, match_of_right, adjacency).
    """
    index = {b: i for i, b in enumerate(bits)}
    count = len(bits)
    adj: list[list[int]] = [[] for _ in range(count)]
    for u, b in enumerate(bits):
        if b == 0:
            continue
        targets = adj[u]
        sub = (b - 1) & b
        while True:
            targets.append(index[sub])
            if sub == 0:
                break
            sub = (sub - 1) & b

    match_left = [-1] * count
    match_right = [-1] * count
    for u in range(count):
        for v in adj[u]:
            if match_right[v] == -1:
                match_left[u] = v
                match_right[v] = u
                break

    infinity = count + 1
    dist = [0] * count
    while True:
        queue: deque[int] = deque()
        for u in range(count):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = infinity
        shortest = infinity
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= shortest:
                continue
            for v in adj[u]:
                w = match_right[v]
                if w == -1:
                    if shortest == infinity:
                        shortest = du + 1
                elif dist[w] == infinity:
                    dist[w] = du + 1
                    queue.append(w)
        if shortest == infinity:
            return match_left, match_right, adj

        def augment(u: int) -> bool:
            for v in adj[u]:
                w = match_right[v]
                if w == -1:
                    if dist[u] + 1 == shortest:
                        match_left[u] = v
                        match_right[v] = u
                        return True
                elif dist[w] == dist[u] + 1:
                    if augment(w):
                        match_left[u] = v
                        match_right[v] = u
                        return True
            dist[u] = infinity
            return False

        for u in range(count):
            if match_left[u] == -1:
                augment(u)


@dataclass(frozen=True)
class AntichainResult:
    """Maximum antichain size and a verified witness."""

    n: int
    size: int
    witness: tuple[BitString, ...]


def _verify_antichain(bits: list[int]) -> None:
    """Raise if any member strictly dominates another (submask membership)."""
    members = set(bits)
    for b in bits:
        sub = (b - 1) & b
        while True:
            if sub in members and sub != b:
                raise AssertionError(
                    f"witness is not an antichain: {sub:b} < {b:b}"
                )
            if sub == 0:
                break
            sub = (sub - 1) & b


def max_antichain(n: int) -> AntichainResult:
    """Exact maximum antichain of the dominance order on the length-n
    no-adjacent-ones strings.

    Size comes from the minimum chain cover; the witness consists of the
    elements whose left copy is alternating-reachable from an unmatched left
    vertex while the right copy is not, and is re-verified pairwise
    incomparable before it is returned.
    """
    _check_poset_length(n)
    elements = enumerate_fibonacci(n).sorted_members()
    bits = [e.bits for e in elements]
    match_left, match_right, adj = _strict_dominance_matching(bits)
    matched = sum(1 for v in match_right if v != -1)
    size = len(bits) - matched

    # alternating reachability from unmatched left copies:
    # left -> right over non-matching edges, right -> left over matching edges
    left_reached = [False] * len(bits)
    right_reached = [False] * len(bits)
    queue = deque(u for u in range(len(bits)) if match_left[u] == -1)
    for u in queue:
        left_reached[u] = True
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if match_left[u] == v or right_reached[v]:
                continue
            right_reached[v] = True
            w = match_right[v]
            if w != -1 and not left_reached[w]:
                left_reached[w] = True
                queue.append(w)
    witness = [
        elements[i]
        for i in range(len(bits))
        if left_reached[i] and not right_reached[i]
    ]
    if len(witness) != size:
        raise AssertionError(
            f"cover extraction produced {len(witness)} elements, expected {size}"
        )
    _verify_antichain([w.bits for w in witness])
    return AntichainResult(n, size, tuple(witness))


def minimum_chain_cover(n: int) -> list[list[BitString]]:
    """Partition of the length-n poset into the fewest chains, each listed in
    ascending dominance order; their number equals the maximum antichain."""
    _check_poset_length(n)
    elements = enumerate_fibonacci(n).sorted_members()
    bits = [e.bits for e in elements]
    match_left, match_right, _ = _strict_dominance_matching(bits)
    chains = []
    for start in range(len(bits)):
        if match_right[start] != -1:
            continue  # not a chain top: something dominates it within its chain
        chain = []
        u = start
        while u != -1:
            chain.append(elements[u])
            u = match_left[u]
        chain.reverse()
        chains.append(chain)
    chains.sort(key=lambda c: c[0].bits)
    return chains


def max_antichain_oracle(n: int) -> int:
    """Independent route: maximum clique of the incomparability relation."""
    if not 1 <= n <= ORACLE_MAX_LENGTH:
        raise ValueError(f"n must be in [1, {ORACLE_MAX_LENGTH}], got {n}")
    bits = [e.bits for e in enumerate_fibonacci(n).sorted_members()]

    def incomparable(i: int, j: int) -> bool:
        a, b = bits[i], bits[j]
        return a & ~b != 0 and b & ~a != 0

    return max_clique(CliqueInstance.from_relation(len(bits), incomparable)).size


@dataclass(frozen=True)
class ProjectionReport:
    """Bound checks tying the antichain maximum to the shorter length."""

    n: int
    antichain_size: int
    fib_prev: int
    fib_n: int
    antichain_fits_prev: bool       # m_n <= f_{n-1}
    ratio_bound_holds: bool         # 3 f_{n-1} <= 2 f_n, exact integers
    projections_distinct: bool
    projections_valid: bool

    @property
    def ok(self) -> bool:
        return (
            self.antichain_fits_prev
            and self.ratio_bound_holds
            and self.projections_distinct
            and self.projections_valid
        )


def projection_bound_check(n: int) -> ProjectionReport:
    """Check m_n <= f_{n-1} <= (2/3) f_n and the mechanism behind the first
    bound: dropping the last coordinate of a maximum antichain leaves
    distinct strings that still avoid adjacent 1s."""
    if not 2 <= n <= MAX_POSET_LENGTH:
        raise ValueError(f"n must be in [2, {MAX_POSET_LENGTH}], got {n}")
    result = max_antichain(n)
    f_prev = fibonacci_count(n - 1)
    f_n = fibonacci_count(n)
    projections = [w.bits >> 1 for w in result.witness]
    return ProjectionReport(
        n=n,
        antichain_size=result.size,
        fib_prev=f_prev,
        fib_n=f_n,
        antichain_fits_prev=result.size <= f_prev,
        ratio_bound_holds=3 * f_prev <= 2 * f_n,
        projections_distinct=len(set(projections)) == len(projections),
        projections_valid=all(p & (p >> 1) == 0 for p in projections),
    )
