"""Materialized string families: the high-gamma construction, the
no-adjacent-ones family, greedy maximal extensions, and (de)serialization."""

from __future__ import annotations

import json

from .bitstring import (
    BitString,
    Family,
    LengthMismatchError,
    gamma,
    gamma_bits,
    influence_bits,
    skewincident,
)

MAX_ENUMERATION_LENGTH = 24


class NotPairwiseSkewincidentError(ValueError):
    """Input family violates pairwise skewincidence; carries the first bad pair."""

    def __init__(self, pair: tuple[BitString, BitString]):
        self.pair = pair
        super().__init__(f"family is not pairwise skewincident: ({pair[0]}, {pair[1]})")


def _check_enumeration_length(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_LENGTH:
        raise ValueError(f"n must be in [1, {MAX_ENUMERATION_LENGTH}], got {n}")


def enumerate_C(n: int) -> Family:
    """All length-n strings whose gamma exceeds n.

    Any two distinct members are skewincident: each contributes more than n
    to the combined weight of supports and influences, which forces the
    support of one to meet the influence of the other.
    """
    _check_enumeration_length(n)
    members = frozenset(
        BitString(n, x) for x in range(1 << n) if gamma_bits(x, n) > n
    )
    return Family(n, members)


def enumerate_fibonacci(n: int) -> Family:
    """All length-n strings with no two adjacent 1s."""
    _check_enumeration_length(n)
    members = frozenset(BitString(n, x) for x in range(1 << n) if x & (x >> 1) == 0)
    return Family(n, members)


def verify_pairwise_skewincident(
    family: Family,
) -> tuple[BitString, BitString] | None:
    """None if every pair of distinct members is skewincident, else the
    lexicographically first violating pair.

    Self-pairs are not required to be skewincident; empty and singleton
    families pass vacuously.
    """
    members = family.sorted_members()
    n = family.length
    bits = [m.bits for m in members]
    infl = [influence_bits(b, n) for b in bits]
    for i in range(len(bits)):
        fi = infl[i]
        for j in range(i + 1, len(bits)):
            if bits[j] & fi == 0:
                return members[i], members[j]
    return None


def verify_disjointness_argument(x: BitString, y: BitString) -> bool:
    """Check on one pair: if gamma(x) + gamma(y) > 2n then x, y are skewincident.

    Vacuously true when the gamma sum does not exceed 2n.
    """
    if x.length != y.length:
        raise LengthMismatchError(
            f"incompatible operands: lengths {x.length} and {y.length}"
        )
    if gamma(x) + gamma(y) <= 2 * x.length:
        return True
    return skewincident(x, y)


def greedy_maximal_extension(family: Family) -> Family:
    """Grow a pairwise-skewincident family to a maximal one.

    Repeatedly adds the lexicographically smallest missing string that is
    skewincident with every current member; one ascending pass suffices
    because adding members never makes a previously rejected string viable.
    """
    violation = verify_pairwise_skewincident(family)
    if violation is not None:
        raise NotPairwiseSkewincidentError(violation)
    n = family.length
    _check_enumeration_length(n)
    members = set(m.bits for m in family.members)
    infl = [influence_bits(b, n) for b in sorted(members)]
    for cand in range(1 << n):
        if cand in members:
            continue
        if all(cand & f for f in infl):
            members.add(cand)
            infl.append(influence_bits(cand, n))
    return Family(n, frozenset(BitString(n, b) for b in members))


def family_to_lines(family: Family) -> str:
    """Newline-delimited literals in lexicographic order, trailing newline."""
    return "".join(str(m) + "\n" for m in family.sorted_members())


def family_from_lines(text: str, length: int | None = None) -> Family:
    """Inverse of family_to_lines; ``length`` is required for an empty text."""
    literals = [line for line in text.splitlines() if line.strip()]
    if not literals and length is None:
        raise ValueError("cannot infer length of an empty family")
    return Family.from_literals(literals, length)


def family_to_json(family: Family) -> str:
    """JSON array of literals in lexicographic order."""
    return json.dumps([str(m) for m in family.sorted_members()])


def family_from_json(text: str, length: int | None = None) -> Family:
    """Inverse of family_to_json; ``length`` is required for an empty array."""
    literals = json.loads(text)
    if not isinstance(literals, list) or not all(isinstance(s, str) for s in literals):
        raise ValueError("expected a JSON array of binary literals")
    if not literals and length is None:
        raise ValueError("cannot infer length of an empty family")
    return Family.from_literals(literals, length)
