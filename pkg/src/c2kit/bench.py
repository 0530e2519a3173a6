import logging
import time
from typing import Callable, NamedTuple, Sequence

import numpy as np

from identification.graphs import identified_c2_graph
from identification.structures import identified_c2_structure
from inversion.multi_circulant import multi_circulant_representative
from models.graph import Graph
from models.invariant import C2Invariant
from models.structure import RelationalStructure
from refinement.refiner import refine_graph

log = logging.getLogger('c2kit')

BENCH_KINDS = ('refine', 'identify', 'invert', 'identify-structure')
DEFAULT_SIZES = {
    'refine': (10_000, 100_000, 1_000_000),
    'identify': (10_000, 100_000, 1_000_000),
    'invert': (10_000, 100_000, 1_000_000),
    'identify-structure': (100, 200, 400),
}
EDGES_PER_VERTEX = 4
INVERT_CLASSES = 4


class BenchRow(NamedTuple):
    n: int
    m: int
    seconds: float


class BenchReport:

    def __init__(self, kind: str, seed: int, model: str, rows: list[BenchRow]):
        self.kind = kind
        self.seed = seed
        self.model = model
        self.rows = rows

    @property
    def exponent(self) -> float:
        """Slope of log time against log input size (n + m)"""
        if len(self.rows) < 2:
            return float('nan')
        sizes = np.log([row.n + row.m for row in self.rows])
        times = np.log([max(row.seconds, 1e-9) for row in self.rows])
        return float(np.polyfit(sizes, times, 1)[0])

    @property
    def ratios(self) -> list[float]:
        return [later.seconds / max(earlier.seconds, 1e-9) for earlier, later in zip(self.rows, self.rows[1:])]

    def to_dict(self):
        return {
            'kind': self.kind,
            'seed': self.seed,
            'model': self.model,
            'rows': [row._asdict() for row in self.rows],
            'exponent': self.exponent,
        }

    def serialize(self) -> str:
        lines = [f'# bench {self.kind} seed={self.seed} model={self.model}', '# n m seconds']
        lines.extend(f'{row.n} {row.m} {row.seconds:.6f}' for row in self.rows)
        lines.append('# ratios ' + ' '.join(f'{ratio:.2f}' for ratio in self.ratios))
        lines.append(f'# exponent {self.exponent:.3f}')
        return '\n'.join(lines) + '\n'


def random_pairs(rng: np.random.Generator, n: int, m: int, ordered: bool = False) -> list[tuple[int, int]]:
    """m distinct vertex pairs drawn uniformly without loops"""
    limit = n * (n - 1) if ordered else n * (n - 1) // 2
    m = min(m, limit)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        draw = rng.integers(0, n, size=(2 * (m - len(chosen)) + 16, 2))
        for u, v in draw.tolist():
            if u == v:
                continue
            pair = (u, v) if ordered or u < v else (v, u)
            chosen.add(pair)
            if len(chosen) == m:
                break
    return sorted(chosen)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with n vertices and m edges, fully determined by the seed"""
    return Graph(n, random_pairs(np.random.default_rng(seed), n, m))


def random_invariant(n: int, seed: int, classes: int = INVERT_CLASSES) -> C2Invariant:
    """Feasible invariant with a few classes of equal even size and small symmetric degrees"""
    rng = np.random.default_rng(seed)
    size = max(2, n // classes // 2 * 2)
    degrees = rng.integers(0, EDGES_PER_VERTEX + 1, size=(classes, classes))
    matrix = np.minimum(np.triu(degrees) + np.triu(degrees, 1).T, size - 1)
    return C2Invariant([size] * classes, matrix.tolist())


def random_structure(n: int, seed: int) -> RelationalStructure:
    arcs = random_pairs(np.random.default_rng(seed), n, EDGES_PER_VERTEX * n, ordered=True)
    return RelationalStructure([('E', 2)], n, {'E': arcs})


def _timed(action: Callable[[], object]) -> float:
    start = time.perf_counter()
    action()
    return time.perf_counter() - start


def bench(kind: str, sizes: Sequence[int] | None = None, seed: int = 0) -> BenchReport:
    """Times one operation over growing inputs; the seed fixes every random input"""
    if kind not in BENCH_KINDS:
        raise ValueError(f'unknown bench kind {kind}, expected one of {BENCH_KINDS}')
    sizes = sizes or DEFAULT_SIZES[kind]
    rows = []
    for n in sizes:
        if kind == 'invert':
            invariant = random_invariant(n, seed)
            seconds = _timed(lambda: multi_circulant_representative(invariant, verify=False))
            rows.append(BenchRow(invariant.n, invariant.edge_count, seconds))
        elif kind == 'identify-structure':
            structure = random_structure(n, seed)
            seconds = _timed(lambda: identified_c2_structure(structure))
            rows.append(BenchRow(n, len(structure.relations['E']), seconds))
        else:
            g = random_graph(n, EDGES_PER_VERTEX * n, seed)
            operation = refine_graph if kind == 'refine' else identified_c2_graph
            seconds = _timed(lambda: operation(g))
            rows.append(BenchRow(n, g.m, seconds))
        log.info(f'bench {kind}: n={rows[-1].n} m={rows[-1].m} {rows[-1].seconds:.3f}s')

    model = {'invert': f'{INVERT_CLASSES} equal classes, symmetric degrees <= {EDGES_PER_VERTEX}',
             'identify-structure': f'one binary relation, {EDGES_PER_VERTEX}n uniform arcs'}.get(
        kind, f'G(n, m) uniform, m = {EDGES_PER_VERTEX}n')
    return BenchReport(kind, seed, model, rows)
