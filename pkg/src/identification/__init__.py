from identification.bouquet import BouquetForest, bouquet, bouquet_forest_check
from identification.flip import Flip, flip, pair_relation
from identification.graphs import identified_c2_graph
from identification.skeleton import Skeleton
from identification.structures import classify_class, ecpog_of, graph_to_ecpog, identified_c2_ecpog, \
    identified_c2_structure, pair_relation_ec, restrict_arity2

__all__ = ['Flip', 'flip', 'pair_relation', 'BouquetForest', 'bouquet', 'bouquet_forest_check', 'Skeleton',
           'identified_c2_graph', 'restrict_arity2', 'ecpog_of', 'graph_to_ecpog', 'classify_class',
           'pair_relation_ec', 'identified_c2_ecpog', 'identified_c2_structure']
