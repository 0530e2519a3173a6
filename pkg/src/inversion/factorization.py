import networkx as nx

from inversion.exception import OddOrderException
from models.exception import MalformedInputException

Matching = tuple[tuple[int, int], ...]


class Factorization:
    """n - 1 perfect matchings of K_n"""

    def __init__(self, n: int, matchings: list[Matching]):
        self.n = n
        self.matchings = tuple(tuple(sorted((min(u, v), max(u, v)) for u, v in matching)) for matching in matchings)

    def violations(self) -> list[str]:
        problems = []
        if len(self.matchings) != self.n - 1:
            problems.append(f'{len(self.matchings)} matchings for K_{self.n}')
        seen = set()
        for index, matching in enumerate(self.matchings):
            covered = [v for edge in matching for v in edge]
            if sorted(covered) != list(range(self.n)):
                problems.append(f'matching {index} is not perfect')
            for edge in matching:
                if edge in seen:
                    problems.append(f'edge {edge} is used twice')
                seen.add(edge)
        if len(seen) != self.n * (self.n - 1) // 2:
            problems.append(f'{len(seen)} of {self.n * (self.n - 1) // 2} edges covered')
        return problems

    def union(self, first: int, second: int) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.matchings[first])
        graph.add_edges_from(self.matchings[second])
        return graph

    def is_hamiltonian_pair(self, first: int, second: int) -> bool:
        """Whether two matchings together form one cycle through all vertices"""
        union = self.union(first, second)
        return nx.is_connected(union) and all(degree == 2 for _, degree in union.degree)

    def __len__(self):
        return len(self.matchings)

    def __repr__(self):
        return f'Factorization(n={self.n}, matchings={len(self.matchings)})'


def walecki(n: int) -> Factorization:
    """Walecki's 1-factorization of K_n, n even.

    Vertices 0..n-2 sit on a regular (n-1)-gon and n-1 in its centre. Matching r joins the
    centre to r and pairs up the remaining polygon vertices along the chords perpendicular
    to the spoke through r.
    """
    if n % 2:
        raise OddOrderException(f'K_{n} has no perfect matching')
    if n < 2:
        raise MalformedInputException(f'need at least two vertices, got {n}')
    ring = n - 1
    centre = n - 1
    matchings = []
    for r in range(ring):
        matching = [(r, centre)]
        matching.extend(((r - k) % ring, (r + k) % ring) for k in range(1, (n - 2) // 2 + 1))
        matchings.append(tuple(matching))
    return Factorization(n, matchings)
