from math import gcd
from typing import Hashable, Iterable, Sequence


def dense_ranks(values: Sequence[Hashable]) -> list[int]:
    """Replaces every value by the rank of its value among the sorted distinct values"""
    ranking = {value: rank for rank, value in enumerate(sorted(set(values)))}
    return [ranking[value] for value in values]


def is_contiguous(colors: Iterable[int]) -> bool:
    seen = set(colors)
    return not seen or seen == set(range(max(seen) + 1))


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a * b // gcd(a, b)


def cycles_of(permutation: Sequence[int]) -> list[tuple[int, ...]]:
    """Splits a permutation into its cycles, fixed points included, smallest element first"""
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = permutation[v]
        cycles.append(tuple(cycle))
    return cycles


def parse_int(token: str, line: int, column: int) -> int:
    """Strict decimal integer used by all text codecs"""
    from models.exception import MalformedInputException

    if not (token.isascii() and token.isdigit()):
        raise MalformedInputException(f"expected a non-negative integer, got '{token}'", line, column)
    return int(token)
