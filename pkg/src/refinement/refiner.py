import logging
from collections import deque
from typing import Hashable, Sequence

from models.ecpog import EcPog
from models.graph import ColoredGraph, Graph
from models.partition import OrderedPartition, RefinementTrace
from refinement.signatures import ordered_partition
from utils.utils import dense_ranks

log = logging.getLogger('c2kit')


class Refiner:
    """Colour refinement over an ordered array of cells.

    A cell is named by the position of its first vertex in ``order``; splitting never moves a
    cell start, so cell names, the FIFO worklist and every split decision depend only on
    counts and never on vertex labels. Split groups are laid out by ascending count key.
    When a cell that is not queued splits, its largest part (first one on ties) stays off
    the worklist, which bounds the work by O((m + n) log n).
    """

    def __init__(self, n: int, coloring: Sequence[int] | None = None):
        self.n = n
        colors = dense_ranks(coloring) if coloring is not None else [0] * n
        self.order = sorted(range(n), key=lambda v: colors[v])
        self.position = [0] * n
        self.cell_of = [0] * n
        self.end = [0] * (n + 1)
        self.cell_color = [0] * (n + 1)
        self.cell_round = [0] * (n + 1)
        self.queued = [False] * (n + 1)
        self.queue: deque[int] = deque()
        self.steps = 0

        start = 0
        for p, v in enumerate(self.order):
            self.position[v] = p
            if p > 0 and colors[v] != colors[self.order[p - 1]]:
                self._open_initial(start, p, colors[self.order[start]])
                start = p
            self.cell_of[v] = start
        if n:
            self._open_initial(start, n, colors[self.order[start]])

    def _open_initial(self, start: int, end: int, color: int):
        self.end[start] = end
        self.cell_color[start] = color
        self.queue.append(start)
        self.queued[start] = True

    def count(self, splitter: list[int]) -> dict[int, Hashable]:
        """Count key of every vertex with at least one arc into the splitter"""
        raise NotImplementedError

    def profile(self, v: int, cell_index: dict[int, int]) -> tuple[tuple[int, Hashable, int], ...]:
        """(target cell index, label, count) of one vertex against the stable cells"""
        raise NotImplementedError

    def run(self) -> RefinementTrace:
        while self.queue:
            start = self.queue.popleft()
            self.queued[start] = False
            self.steps += 1
            counts = self.count(self.order[start:self.end[start]])
            touched: dict[int, list[int]] = {}
            for v in counts:
                touched.setdefault(self.cell_of[v], []).append(v)
            for cell in sorted(touched):
                self._split(cell, touched[cell], counts)

        starts = []
        start = 0
        while start < self.n:
            starts.append(start)
            start = self.end[start]
        cell_index = {start: index for index, start in enumerate(starts)}
        cells = [self.order[start:self.end[start]] for start in starts]
        profiles = [self.profile(self.order[start], cell_index) for start in starts]
        log.debug(f'refinement stable after {self.steps} splitter steps: {len(cells)} classes on {self.n} vertices')
        return RefinementTrace(cells, [self.cell_color[s] for s in starts], [self.cell_round[s] for s in starts],
                               profiles, self.steps)

    def _split(self, start: int, members: list[int], counts: dict[int, Hashable]):
        end = self.end[start]
        groups: dict[Hashable, list[int]] = {}
        for v in members:
            groups.setdefault(counts[v], []).append(v)
        untouched = end - start - len(members)
        if untouched == 0 and len(groups) == 1:
            return

        boundary = start + untouched
        # untouched vertices take the head of the cell, touched ones the tail
        head_touched = [v for v in members if self.position[v] < boundary]
        tail_untouched = [self.order[p] for p in range(boundary, end) if self.order[p] not in counts]
        for touched_vertex, untouched_vertex in zip(head_touched, tail_untouched):
            p = self.position[touched_vertex]
            self.order[p] = untouched_vertex
            self.position[untouched_vertex] = p

        parts = [(start, untouched)] if untouched else []
        p = boundary
        for key in sorted(groups):
            group = groups[key]
            parts.append((p, len(group)))
            for v in group:
                self.order[p] = v
                self.position[v] = p
                p += 1

        for part_start, size in parts:
            self.end[part_start] = part_start + size
            self.cell_color[part_start] = self.cell_color[start]
            self.cell_round[part_start] = self.steps
            if part_start != start:
                for v in self.order[part_start:part_start + size]:
                    self.cell_of[v] = part_start

        if self.queued[start]:
            skipped = 0
        else:
            skipped = max(range(len(parts)), key=lambda i: (parts[i][1], -i))
            if skipped != 0:
                self.queue.append(start)
                self.queued[start] = True
        for i, (part_start, _) in enumerate(parts):
            if i != 0 and i != skipped:
                self.queue.append(part_start)
                self.queued[part_start] = True


class GraphRefiner(Refiner):

    def __init__(self, g: ColoredGraph):
        super().__init__(g.n, g.coloring)
        self.adjacency = g.adjacency

    def count(self, splitter: list[int]) -> dict[int, int]:
        counts: dict[int, int] = {}
        adjacency = self.adjacency
        for w in splitter:
            for v in adjacency[w]:
                counts[v] = counts.get(v, 0) + 1
        return counts

    def profile(self, v, cell_index):
        per_cell: dict[int, int] = {}
        for w in self.adjacency[v]:
            target = cell_index[self.cell_of[w]]
            per_cell[target] = per_cell.get(target, 0) + 1
        return tuple((target, 0, count) for target, count in sorted(per_cell.items()))


class EcPogRefiner(Refiner):
    """Scans all n - 1 partners of every splitter vertex, labels are (direction, color)"""

    def __init__(self, p: EcPog, coloring: Sequence[int] | None = None):
        super().__init__(p.n, coloring)
        # codes[v][w] = 3 * color + direction of {v, w} seen from v
        self.codes = [[-1] * p.n for _ in range(p.n)]
        for v in range(p.n):
            row = self.codes[v]
            for w in range(p.n):
                if v != w:
                    direction, color = p.label(v, w)
                    row[w] = 3 * color + direction

    def count(self, splitter: list[int]) -> dict[int, tuple]:
        tallies: dict[int, dict[int, int]] = {}
        codes = self.codes
        for w in splitter:
            for v in range(self.n):
                if v == w:
                    continue
                code = codes[v][w]
                tally = tallies.setdefault(v, {})
                tally[code] = tally.get(code, 0) + 1
        return {v: tuple(sorted(tally.items())) for v, tally in tallies.items()}

    def profile(self, v, cell_index):
        per_cell: dict[tuple[int, int], int] = {}
        for w in range(self.n):
            if w != v:
                key = (cell_index[self.cell_of[w]], self.codes[v][w])
                per_cell[key] = per_cell.get(key, 0) + 1
        return tuple((target, decode_label(code), count) for (target, code), count in sorted(per_cell.items()))


def decode_label(code: int) -> tuple[int, int]:
    """(direction, color) from the packed label code"""
    return code % 3, code // 3


def refine_graph(g: ColoredGraph | Graph) -> OrderedPartition:
    """Coarsest equitable partition refining the vertex coloring, classes in canonical order"""
    if isinstance(g, Graph):
        g = ColoredGraph(g)
    return ordered_partition(GraphRefiner(g).run())


def refine_ecpog(p: EcPog, coloring: Sequence[int] | None = None) -> OrderedPartition:
    return ordered_partition(EcPogRefiner(p, coloring).run())
