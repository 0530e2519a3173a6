from invariants.invariant import invariant_ecpog, invariant_graph, invariants_equal

__all__ = ['invariant_graph', 'invariant_ecpog', 'invariants_equal']
