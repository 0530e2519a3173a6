"""Robot Framework keyword library over c2kit"""

from robot.api import logger

from identification.graphs import identified_c2_graph
from identification.structures import identified_c2_ecpog, identified_c2_structure
from invariants.invariant import invariant_graph, invariants_equal
from inversion.factorization import walecki
from inversion.multi_circulant import canonize_graph, multi_circulant_representative
from models.graph import ColoredGraph, Graph
from models.verdict import Verdict
from oracles.cfi import cfi_pair, union_and_subdivide_h
from oracles.identification import identified_oracle
from oracles.isomorphism import are_isomorphic, automorphism_orbits
from oracles.kwl import kwl_equivalent
from refinement.refiner import refine_graph
from utils.constants import ECPOG_HEADER
from utils.parsers import parse_ecpog, parse_graph, parse_structure, tokenize


class C2Kit:
    ROBOT_LIBRARY_SCOPE = 'GLOBAL'

    def load_graph(self, path: str) -> ColoredGraph:
        with open(path, 'rb') as f:
            return parse_graph(f.read())

    def graph_from_edges(self, n, *edges: str) -> ColoredGraph:
        """Builds a graph from edges written as ``u-v``"""
        pairs = []
        for edge in edges:
            u, v = edge.split('-')
            pairs.append((int(u), int(v)))
        return ColoredGraph(Graph(int(n), pairs))

    def cycle_graph(self, n) -> ColoredGraph:
        n = int(n)
        return ColoredGraph(Graph(n, [(v, (v + 1) % n) for v in range(n)]))

    def disjoint_union(self, first: ColoredGraph, second: ColoredGraph) -> ColoredGraph:
        shift = first.n
        edges = list(first.edges) + [(u + shift, v + shift) for u, v in second.edges]
        return ColoredGraph(Graph(first.n + second.n, edges))

    def identify_graph(self, g: ColoredGraph) -> Verdict:
        verdict = identified_c2_graph(g)
        logger.info(f'{g!r}: {verdict}')
        return verdict

    def graph_should_be_identified(self, g: ColoredGraph):
        verdict = self.identify_graph(g)
        if not verdict:
            raise AssertionError(f'expected identified, got {verdict}')

    def graph_should_not_be_identified(self, g: ColoredGraph, condition: str | None = None):
        """Fails when the graph is identified or, if ``condition`` is given, fails another condition"""
        verdict = self.identify_graph(g)
        if verdict:
            raise AssertionError('expected not-identified, got identified')
        if condition and verdict.condition.slug != condition:
            raise AssertionError(f'expected condition {condition}, got {verdict.condition.slug}')

    def structure_file_should_be_identified(self, path: str, expected: bool = True):
        with open(path, 'rb') as f:
            text = f.read()
        first = next(tokenize(text), None)
        if first and first[0].text == ECPOG_HEADER:
            verdict = identified_c2_ecpog(*parse_ecpog(text))
        else:
            verdict = identified_c2_structure(parse_structure(text))
        logger.info(f'{path}: {verdict}')
        if bool(verdict) != _truthy(expected):
            raise AssertionError(f'{path}: {verdict}')

    def oracle_should_agree(self, g: ColoredGraph):
        verdict = identified_c2_graph(g)
        oracle = identified_oracle(g)
        if bool(verdict) != oracle:
            raise AssertionError(f'classifier says {verdict}, oracle says {oracle}')

    def canonical_forms_should_be_equal(self, g: ColoredGraph, h: ColoredGraph):
        left, right = canonize_graph(g).serialize(), canonize_graph(h).serialize()
        if left != right:
            raise AssertionError(f'canonical forms differ:\n{left}\n{right}')

    def invariants_should_be_equal(self, g: ColoredGraph, h: ColoredGraph):
        if not invariants_equal(invariant_graph(g), invariant_graph(h)):
            raise AssertionError('invariants differ')

    def inversion_should_round_trip(self, g: ColoredGraph):
        invariant = invariant_graph(g)
        representative = multi_circulant_representative(invariant)
        if not invariants_equal(invariant_graph(representative.graph), invariant):
            raise AssertionError('inverted graph has another invariant')
        if not representative.witness_verified(refine_graph(representative.graph).classes):
            raise AssertionError('witness automorphism does not rotate the classes')
        logger.info(f'inverted {invariant.n} vertices into {representative.graph!r}')

    def walecki_factorization_should_be_valid(self, n):
        factorization = walecki(int(n))
        problems = factorization.violations()
        if problems:
            raise AssertionError('; '.join(problems))
        if not factorization.is_hamiltonian_pair(0, 1):
            raise AssertionError('first two matchings do not form a Hamiltonian cycle')

    def cfi_pair_should_fool_color_refinement(self, base: ColoredGraph):
        pair = cfi_pair(base.graph)
        logger.info(f'CFI pair over {base!r}: {pair.g!r}', console=False)
        if are_isomorphic(pair.g, pair.g_prime):
            raise AssertionError('CFI graphs are isomorphic')
        if not kwl_equivalent(pair.g, pair.g_prime, 1):
            raise AssertionError('color refinement distinguishes the CFI graphs')

    def designated_vertices_should_share_class_but_not_orbit(self, base: ColoredGraph):
        designated = union_and_subdivide_h(base.graph)
        v_p, v_t = designated.parallel[0], designated.twisted[0]
        partition = refine_graph(designated.graph)
        if partition.class_of[v_p] != partition.class_of[v_t]:
            raise AssertionError(f'{v_p} and {v_t} lie in different C2 classes')
        orbits = automorphism_orbits(designated.graph)
        if orbits.class_of[v_p] == orbits.class_of[v_t]:
            raise AssertionError(f'{v_p} and {v_t} share an orbit')


def _truthy(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ('true', 'yes', '1')
    return bool(value)
