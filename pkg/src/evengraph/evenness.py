"""Distance vectors of vertex subsets, exact evenness scores, and maximally
even sets on cycles.

The two scores of a vertex set are the energy (sum of reciprocals of all
pairwise distances, kept as an exact fraction) and the plain sum of pairwise
distances.  Maximally even m-sets on an n-cycle are generated by the
floor-function formula {floor((n*i + r)/m) : i = 0..m-1}.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from .graphs import DistanceMatrix

__all__ = [
    "check_vertex_set",
    "complement",
    "distance_vector",
    "energy",
    "sum_distances",
    "j_set",
    "is_maximally_even",
    "maximally_even_family",
    "format_rational",
    "rational_decimal",
    "rational_json",
]


def check_vertex_set(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a sorted tuple, rejecting out-of-range and repeated vertices."""
    out = tuple(sorted(int(x) for x in members))
    for x in out:
        if not 0 <= x < n:
            raise ValueError(f"vertex {x} out of range 0..{n - 1}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a}")
    return out


def complement(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """The vertices of 0..n-1 not in the set."""
    inside = set(check_vertex_set(n, members))
    return tuple(x for x in range(n) if x not in inside)


def distance_vector(dm: DistanceMatrix, members: Iterable[int]) -> tuple[int, ...]:
    """Sorted multiset of pairwise distances within the set (length C(m,2))."""
    a = check_vertex_set(dm.n, members)
    out = []
    for i in range(len(a) - 1):
        row = dm[a[i]]
        for j in range(i + 1, len(a)):
            out.append(row[a[j]])
    out.sort()
    return tuple(out)


def energy(dv: Iterable[int]) -> Fraction:
    """Exact sum of reciprocals of the entries; the empty sum is 0."""
    total = Fraction(0)
    for d in dv:
        if d < 1:
            raise ValueError(f"distances must be >= 1, got {d}")
        total += Fraction(1, d)
    return total


def sum_distances(dv: Iterable[int]) -> int:
    """Sum of the entries; the empty sum is 0."""
    return sum(dv)


def j_set(n: int, m: int, r: int) -> tuple[int, ...]:
    """The maximally even m-set {floor((n*i + r)/m)} on the n-cycle.

    r acts as a rotation parameter; for 0 <= r <= n-1 all members already lie
    in 0..n-1 and are distinct, which is asserted rather than wrapped.
    """
    if n < 1:
        raise ValueError(f"cycle size must be positive, got {n}")
    if not 1 <= m <= n:
        raise ValueError(f"set size must satisfy 1 <= m <= {n}, got {m}")
    if not 0 <= r <= n - 1:
        raise ValueError(f"rotation parameter must satisfy 0 <= r <= {n - 1}, got {r}")
    out = tuple((n * i + r) // m for i in range(m))
    assert all(0 <= x < n for x in out)
    assert all(a < b for a, b in zip(out, out[1:]))
    return out


def is_maximally_even(n: int, members: Iterable[int]) -> list[int]:
    """Every rotation parameter r whose generated set equals the input.

    The set is maximally even exactly when the list is nonempty.  Undefined
    (an error) for the empty set.
    """
    a = check_vertex_set(n, members)
    if not a:
        raise ValueError("maximal evenness is undefined for the empty set")
    m = len(a)
    return [r for r in range(n) if j_set(n, m, r) == a]


def maximally_even_family(n: int, m: int) -> set[tuple[int, ...]]:
    """All distinct maximally even m-sets on the n-cycle."""
    return {j_set(n, m, r) for r in range(n)}


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def rational_decimal(q: Fraction, places: int = 10) -> str:
    """Fixed-point decimal rendering, round-half-even, for display only."""
    with localcontext() as ctx:
        ctx.prec = places + 30
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def rational_json(q: Fraction, places: int = 10) -> dict:
    """The documented JSON form of an exact fraction."""
    return {"num": q.numerator, "den": q.denominator,
            "decimal": rational_decimal(q, places)}
