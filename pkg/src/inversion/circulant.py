from math import gcd
from typing import Iterator, Sequence

from inversion.exception import CountMismatchException, DegreeTooLargeException, ParityInfeasibleException
from models.exception import MalformedInputException
from models.graph import Graph
from utils.utils import lcm


class DistanceSet:
    """Distances of a circulant graph on n vertices; distance n/2 contributes one edge per vertex"""

    def __init__(self, n: int, distances: Sequence[int]):
        self.n = n
        self.distances: tuple[int, ...] = tuple(sorted(set(distances)))
        for d in self.distances:
            if not 1 <= d <= n // 2:
                raise MalformedInputException(f'distance {d} outside [1, {n // 2}]')

    @classmethod
    def greedy(cls, n: int, k: int) -> 'DistanceSet':
        """Smallest distances first, the antipodal distance n/2 last when k is odd"""
        if k < 0:
            raise MalformedInputException(f'degree must be non-negative, got {k}')
        if k > 0 and k >= n:
            raise DegreeTooLargeException(f'degree {k} needs more than {n} vertices')
        if k * n % 2:
            raise ParityInfeasibleException(f'no {k}-regular graph on {n} vertices: {k}*{n} is odd')
        distances = list(range(1, k // 2 + 1))
        if k % 2:
            distances.append(n // 2)
        return cls(n, distances)

    @property
    def degree(self) -> int:
        return sum(1 if 2 * d == self.n else 2 for d in self.distances)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Index pairs (i, j) of the circulant edges"""
        n = self.n
        for d in self.distances:
            limit = n // 2 if 2 * d == n else n
            for i in range(limit):
                yield i, (i + d) % n

    def __repr__(self):
        return f'DistanceSet(n={self.n}, S={set(self.distances)})'


def circulant(n: int, k: int) -> Graph:
    """k-regular graph on n vertices invariant under v -> v+1 mod n, connected when k >= 2"""
    return Graph(n, DistanceSet.greedy(n, k).pairs())


def check_biregular(m: int, n: int, k: int, l: int):
    if k < 0 or l < 0:
        raise MalformedInputException(f'degrees must be non-negative, got ({k}, {l})')
    if k > n or l > m:
        raise DegreeTooLargeException(f'degrees ({k}, {l}) exceed the class sizes ({n}, {m})')
    if k * m != l * n:
        raise CountMismatchException(f'{m}*{k} edges leave P but {n}*{l} enter Q')


def residue_pairs(m: int, n: int, residues: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Pairs (i, i') of P x Q added by the passes j in ``residues``.

    Pass j joins v_i to v'_{(i+j+s) mod n} for s = 0, m, 2m, ... below lcm(m, n), which is
    every pair whose index difference is j modulo gcd(m, n).
    """
    period = lcm(m, n)
    for j in residues:
        for i in range(m):
            for s in range(0, period, m):
                yield i, (i + j + s) % n


def passes_for(m: int, n: int, k: int) -> int:
    """Passes needed for P-degree k; every pass adds n / gcd(m, n) neighbours per P-vertex"""
    return k * gcd(m, n) // n if n else 0


def doubly_circulant(m: int, n: int, k: int, l: int) -> Graph:
    """(k, l)-biregular graph between P = 0..m-1 and Q = m..m+n-1.

    Rotating P and Q by one step at the same time is an automorphism.
    """
    check_biregular(m, n, k, l)
    return Graph(m + n, ((i, m + j) for i, j in residue_pairs(m, n, range(passes_for(m, n, k)))))
