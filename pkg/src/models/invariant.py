from typing import Sequence

from utils.constants import C2_INVARIANT_HEADER, COLORS_KEYWORD, EC_INVARIANT_HEADER, ROW_KEYWORD, SIZES_KEYWORD

# (color, out, in, undirected) counts from one vertex of class i into class j
EcEntry = tuple[tuple[int, int, int, int], ...]


class C2Invariant:
    """Ordered class sizes, class colors and the class-to-class degree matrix of a graph"""

    def __init__(self, sizes: Sequence[int], matrix: Sequence[Sequence[int]], colors: Sequence[int] | None = None):
        self.sizes: tuple[int, ...] = tuple(sizes)
        self.matrix: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in matrix)
        self.colors: tuple[int, ...] = tuple(colors) if colors is not None else (0,) * len(self.sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        return sum(size * sum(self.matrix[i]) for i, size in enumerate(self.sizes)) // 2

    def violations(self) -> list[str]:
        """Arithmetic conditions that no graph realizing this invariant could break"""
        problems = []
        t = self.t
        if len(self.matrix) != t or any(len(row) != t for row in self.matrix):
            return [f'matrix is not {t}x{t}']
        if len(self.colors) != t:
            return [f'{len(self.colors)} class colors for {t} classes']
        for i, size in enumerate(self.sizes):
            if size < 1:
                problems.append(f'class {i} is empty')
        if problems:
            return problems
        for i in range(t):
            for j in range(t):
                value = self.matrix[i][j]
                bound = self.sizes[j] - 1 if i == j else self.sizes[j]
                if not 0 <= value <= bound:
                    problems.append(f'M[{i}][{j}]={value} outside [0, {bound}]')
                if self.sizes[i] * value != self.sizes[j] * self.matrix[j][i]:
                    problems.append(f'|P{i}|*M[{i}][{j}] != |P{j}|*M[{j}][{i}]')
            if self.sizes[i] * self.matrix[i][i] % 2:
                problems.append(f'|P{i}|*M[{i}][{i}] is odd')
        return problems

    def serialize(self) -> str:
        lines = [f'{C2_INVARIANT_HEADER} {self.t}', f'{SIZES_KEYWORD} ' + ' '.join(map(str, self.sizes))]
        if any(self.colors):
            lines.append(f'{COLORS_KEYWORD} ' + ' '.join(map(str, self.colors)))
        lines.extend(f'{ROW_KEYWORD} ' + ' '.join(map(str, row)) for row in self.matrix)
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (isinstance(other, C2Invariant) and self.sizes == other.sizes and self.matrix == other.matrix
                and self.colors == other.colors)

    def __hash__(self):
        return hash((self.sizes, self.matrix, self.colors))

    def __repr__(self):
        return f'C2Invariant(sizes={self.sizes}, matrix={self.matrix}, colors={self.colors})'


class EcInvariant:
    """Class sizes, class colors and per-color out/in/undirected counts between classes of an ecPOG"""

    def __init__(self, sizes: Sequence[int], matrix: Sequence[Sequence[EcEntry]], colors: Sequence[int] | None = None):
        self.sizes: tuple[int, ...] = tuple(sizes)
        self.matrix: tuple[tuple[EcEntry, ...], ...] = tuple(
            tuple(tuple(sorted(tuple(item) for item in entry if any(item[1:]))) for entry in row) for row in matrix)
        self.colors: tuple[int, ...] = tuple(colors) if colors is not None else (0,) * len(self.sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def entry(self, i: int, j: int) -> dict[int, tuple[int, int, int]]:
        return {color: (out, inc, und) for color, out, inc, und in self.matrix[i][j]}

    @property
    def edge_colors(self) -> tuple[int, ...]:
        return tuple(sorted({item[0] for row in self.matrix for entry in row for item in entry}))

    @property
    def directed_colors(self) -> frozenset[int]:
        return frozenset(item[0] for row in self.matrix for entry in row for item in entry if item[1] or item[2])

    def violations(self) -> list[str]:
        problems = []
        t = self.t
        if len(self.matrix) != t or any(len(row) != t for row in self.matrix):
            return [f'matrix is not {t}x{t}']
        if len(self.colors) != t:
            return [f'{len(self.colors)} class colors for {t} classes']
        if any(size < 1 for size in self.sizes):
            return ['empty class']
        undirected = {item[0] for row in self.matrix for entry in row for item in entry if item[3]}
        mixed = undirected & self.directed_colors
        if mixed:
            problems.append(f'colors {sorted(mixed)} are both directed and undirected')
        for i in range(t):
            for j in range(t):
                forward, backward = self.entry(i, j), self.entry(j, i)
                expected = self.sizes[j] - (1 if i == j else 0)
                total = sum(sum(counts) for counts in forward.values())
                if total != expected:
                    problems.append(f'entry ({i},{j}) covers {total} pairs, class {j} offers {expected}')
                for color, (out, inc, und) in forward.items():
                    if min(out, inc, und) < 0:
                        problems.append(f'negative count for color {color} in entry ({i},{j})')
                    back_out, back_in, back_und = backward.get(color, (0, 0, 0))
                    if self.sizes[i] * out != self.sizes[j] * back_in:
                        problems.append(f'color {color}: outgoing ({i},{j}) and incoming ({j},{i}) disagree')
                    if self.sizes[i] * und != self.sizes[j] * back_und:
                        problems.append(f'color {color}: undirected ({i},{j}) and ({j},{i}) disagree')
                    if i == j and und * self.sizes[i] % 2:
                        problems.append(f'color {color}: odd undirected degree sum inside class {i}')
        return problems

    def serialize(self) -> str:
        lines = [f'{EC_INVARIANT_HEADER} {self.t}', f'{SIZES_KEYWORD} ' + ' '.join(map(str, self.sizes))]
        if any(self.colors):
            lines.append(f'{COLORS_KEYWORD} ' + ' '.join(map(str, self.colors)))
        for row in self.matrix:
            cells = [''.join(f'({c}:{o},{i},{u})' for c, o, i, u in entry) or '()' for entry in row]
            lines.append(f'{ROW_KEYWORD} ' + ' '.join(cells))
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (isinstance(other, EcInvariant) and self.sizes == other.sizes and self.matrix == other.matrix
                and self.colors == other.colors)

    def __hash__(self):
        return hash((self.sizes, self.matrix, self.colors))

    def __repr__(self):
        return f'EcInvariant(sizes={self.sizes}, colors={self.colors})'
