from refinement.equitable import is_equitable, is_equitable_ecpog, quotient_matrix
from refinement.refiner import refine_ecpog, refine_graph
from refinement.signatures import class_signatures

__all__ = ['refine_graph', 'refine_ecpog', 'class_signatures', 'is_equitable', 'is_equitable_ecpog',
           'quotient_matrix']
