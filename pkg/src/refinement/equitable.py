from models.ecpog import EcPog
from models.graph import ColoredGraph, Graph
from models.partition import OrderedPartition


def degree_profile(g: Graph | ColoredGraph, partition: OrderedPartition, v: int) -> list[int]:
    """Neighbours of v in every class"""
    counts = [0] * partition.t
    for w in g.adjacency[v]:
        counts[partition.class_of[w]] += 1
    return counts


def quotient_matrix(g: Graph | ColoredGraph, partition: OrderedPartition) -> list[list[int]]:
    """M[i][j] read off the first vertex of class i; meaningful for equitable partitions"""
    return [degree_profile(g, partition, cls[0]) for cls in partition.classes]


def is_equitable(g: Graph | ColoredGraph, partition: OrderedPartition) -> bool:
    matrix = quotient_matrix(g, partition)
    return all(degree_profile(g, partition, v) == matrix[partition.class_of[v]] for v in range(g.n))


def ecpog_profile(p: EcPog, partition: OrderedPartition, v: int) -> dict[tuple[int, int, int], int]:
    """Counts keyed by (target class, direction, color)"""
    counts: dict[tuple[int, int, int], int] = {}
    for w in range(p.n):
        if w != v:
            key = (partition.class_of[w], *p.label(v, w))
            counts[key] = counts.get(key, 0) + 1
    return counts


def is_equitable_ecpog(p: EcPog, partition: OrderedPartition) -> bool:
    expected = [ecpog_profile(p, partition, cls[0]) for cls in partition.classes]
    return all(ecpog_profile(p, partition, v) == expected[partition.class_of[v]] for v in range(p.n))


def quotient_rows(g: Graph | ColoredGraph, partition: OrderedPartition) -> list[dict[int, int]]:
    """Sparse quotient: row i maps every class j with M[i][j] > 0 to M[i][j]"""
    rows = []
    for cls in partition.classes:
        row: dict[int, int] = {}
        for w in g.adjacency[cls[0]]:
            target = partition.class_of[w]
            row[target] = row.get(target, 0) + 1
        rows.append(row)
    return rows
