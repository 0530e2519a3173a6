import logging
from typing import Sequence

import networkx as nx

from models.verdict import Condition, Relation

log = logging.getLogger('c2kit')


class Skeleton:
    """Graph on the C2-classes joining the pairs that are not monochromatically connected.

    Components are rooted at a smallest class (lowest index on ties). With such roots, no
    path may climb a ≪ edge and later descend a ≫ edge exactly when sizes never shrink away
    from the root, and no ≪ path reaches an exception exactly when every exception is a
    smallest class of its component.
    """

    def __init__(self, sizes: Sequence[int], relations: dict[tuple[int, int], Relation],
                 exceptions: Sequence[int] = (), exception_pairs: Sequence[tuple[int, int]] = ()):
        self.sizes = tuple(sizes)
        self.relations = {(min(a, b), max(a, b)): (rel if a < b else rel.reversed())
                          for (a, b), rel in relations.items() if rel is not Relation.EMPTY}
        self.exceptions = sorted(exceptions)
        self.exception_pairs = sorted((min(a, b), max(a, b)) for a, b in exception_pairs)
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(len(self.sizes)))
        self.graph.add_edges_from(sorted(self.relations))

    def relation(self, a: int, b: int) -> Relation:
        if a < b:
            return self.relations.get((a, b), Relation.EMPTY)
        return self.relations.get((b, a), Relation.EMPTY).reversed()

    def components(self) -> list[list[int]]:
        return sorted((sorted(component) for component in nx.connected_components(self.graph)), key=min)

    def root(self, component: Sequence[int]) -> int:
        return min(component, key=lambda c: (self.sizes[c], c))

    def violation(self) -> tuple[Condition, str] | None:
        """First failed condition among forest shape, ≪...≫ paths, ≪ paths into exceptions, exception count"""
        if self.graph.number_of_nodes() and not nx.is_forest(self.graph):
            cycle = [u for u, _ in nx.find_cycle(self.graph)]
            return Condition.SKELETON_FOREST, f'cycle through classes {cycle}'

        found: dict[Condition, str] = {}
        exceptions = set(self.exceptions)
        for component in self.components():
            root = self.root(component)
            smallest = self.sizes[root]
            for parent, child in nx.bfs_edges(self.graph, root):
                if self.relation(parent, child) is Relation.FROM:
                    found.setdefault(Condition.NO_INTO_FROM_PATH,
                                     f'class {child} ≪ class {parent} away from smallest class {root}')
            members = set(component)
            component_exceptions = [c for c in component if c in exceptions]
            component_pairs = [pair for pair in self.exception_pairs if pair[0] in members]
            for c in component_exceptions + [c for pair in component_pairs for c in pair]:
                if self.sizes[c] > smallest:
                    found.setdefault(Condition.NO_INTO_PATH_TO_EXCEPTION,
                                     f'exception at class {c} of size {self.sizes[c]} is reached from '
                                     f'smallest class {root} of size {smallest}')
            if len(component_exceptions) + len(component_pairs) > 1:
                found.setdefault(Condition.ONE_EXCEPTION_PER_COMPONENT,
                                 f'classes {component_exceptions} and pairs {component_pairs} share a component')

        for condition in (Condition.NO_INTO_FROM_PATH, Condition.NO_INTO_PATH_TO_EXCEPTION,
                          Condition.ONE_EXCEPTION_PER_COMPONENT):
            if condition in found:
                return condition, found[condition]
        return None
