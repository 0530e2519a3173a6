from oracles.cfi import CfiPair, Designated, cfi_graph, cfi_pair, double_subdivide_h, union_and_subdivide_h
from oracles.enumeration import ecpog_realizations, enumerate_graphs, graph_realizations
from oracles.identification import identified_oracle, identified_oracle_ecpog
from oracles.isomorphism import are_isomorphic, are_isomorphic_ecpog, automorphism_orbits, find_isomorphism
from oracles.kwl import kwl_equivalent

__all__ = ['enumerate_graphs', 'graph_realizations', 'ecpog_realizations', 'are_isomorphic', 'are_isomorphic_ecpog',
           'find_isomorphism', 'automorphism_orbits', 'kwl_equivalent', 'identified_oracle',
           'identified_oracle_ecpog', 'CfiPair', 'Designated', 'cfi_graph', 'cfi_pair', 'union_and_subdivide_h',
           'double_subdivide_h']
