
COMMENT_PREFIX = '#'

GRAPH_HEADER = 'graph'
EDGE_KEYWORD = 'e'
VERTEX_KEYWORD = 'v'

STRUCTURE_SIGNATURE = 'sig'
STRUCTURE_UNIVERSE = 'univ'

ECPOG_HEADER = 'ecpog'
UNDIRECTED_KEYWORD = 'u'
DIRECTED_KEYWORD = 'd'

C2_INVARIANT_HEADER = 'c2inv'
EC_INVARIANT_HEADER = 'ecinv'
SIZES_KEYWORD = 's'
COLORS_KEYWORD = 'c'
ROW_KEYWORD = 'm'

# oracle guards
MAX_ENUMERATION_ORDER = 7
MAX_SEARCH_ORDER = 128
MAX_KWL_ORDER = {1: 1000, 2: 40, 3: 20}
