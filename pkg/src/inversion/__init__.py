from inversion.circulant import DistanceSet, circulant, doubly_circulant
from inversion.coloring import circ_psi, invert_ec, match_psi, orient_color_class
from inversion.factorization import Factorization, walecki
from inversion.multi_circulant import Representative, canonize_graph, multi_circulant_representative

__all__ = ['DistanceSet', 'circulant', 'doubly_circulant', 'Factorization', 'walecki', 'circ_psi', 'match_psi',
           'orient_color_class', 'invert_ec', 'Representative', 'multi_circulant_representative', 'canonize_graph']
