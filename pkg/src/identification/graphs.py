import logging

from identification.bouquet import bouquet_forest_check
from identification.flip import flip, pair_relation
from identification.skeleton import Skeleton
from models.graph import ColoredGraph, Graph
from models.verdict import Condition, InducedShape, Relation, Verdict

log = logging.getLogger('c2kit')


def identified_c2_graph(g: ColoredGraph | Graph) -> Verdict:
    """Decides whether C2 identifies a (vertex-colored) graph.

    Works on the flip: classes must induce an empty graph, a matching or a 5-cycle, class
    pairs must be empty, matched or one-to-many, the skeleton must be a forest whose sizes
    never shrink away from a smallest class, and every component carries at most one
    exception, which sits at a smallest class. The bouquet forest test runs last.
    """
    f = flip(g)
    exceptions = []
    for i in range(f.t):
        shape = f.shape(i)
        if shape is InducedShape.OTHER:
            verdict = Verdict.negative(Condition.CLASS_SHAPE, f'class {i} of size {f.size(i)} induces a '
                                                              f'{f.degree(i, i)}-regular graph')
            log.debug(f'identify: {verdict}')
            return verdict
        if shape.is_exception:
            exceptions.append(i)

    relations = {}
    for i in range(f.t):
        for j in sorted(f.rows[i]):
            if j <= i:
                continue
            relation = pair_relation(f, i, j)
            if relation is Relation.OTHER:
                verdict = Verdict.negative(Condition.PAIR_RELATION,
                                           f'classes {i} and {j} with degrees {f.degree(i, j)} and {f.degree(j, i)}')
                log.debug(f'identify: {verdict}')
                return verdict
            relations[(i, j)] = relation

    failure = Skeleton(f.partition.sizes, relations, exceptions).violation()
    if failure is not None:
        verdict = Verdict.negative(*failure)
        log.debug(f'identify: {verdict}')
        return verdict

    forest = bouquet_forest_check(f.graph)
    if not forest.is_bouquet_forest:
        verdict = Verdict.negative(Condition.DISTINCT_BOUQUETS, forest.reason)
        log.debug(f'identify: {verdict}')
        return verdict
    log.debug(f'identify: identified, {f.t} classes, {len(forest.bouquets)} bouquets')
    return Verdict.positive()
