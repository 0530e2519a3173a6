from typing import Hashable, NamedTuple, Sequence

from models.exception import MalformedInputException


class ClassSignature(NamedTuple):
    """Relabeling-invariant description of one stable class.

    ``profile`` lists (target cell, label, count) for one vertex of the class, where target
    cells are numbered in the order the refiner produced them. Signatures compare as tuples.
    """
    round: int
    color: int
    size: int
    profile: tuple[tuple[int, Hashable, int], ...]


class RefinementTrace:
    """What the refiner leaves behind for ordering its stable cells"""

    def __init__(self, cells: Sequence[Sequence[int]], colors: Sequence[int], rounds: Sequence[int],
                 profiles: Sequence[tuple[tuple[int, Hashable, int], ...]], steps: int):
        self.cells = [tuple(sorted(cell)) for cell in cells]
        self.colors = tuple(colors)
        self.rounds = tuple(rounds)
        self.profiles = tuple(profiles)
        self.steps = steps

    def __len__(self):
        return len(self.cells)


class OrderedPartition:

    def __init__(self, classes: Sequence[Sequence[int]], signatures: Sequence[ClassSignature] | None = None,
                 colors: Sequence[int] | None = None, trace: RefinementTrace | None = None):
        self.classes: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(cls)) for cls in classes)
        n = sum(len(cls) for cls in self.classes)
        class_of = [-1] * n
        for index, cls in enumerate(self.classes):
            for v in cls:
                if not 0 <= v < n or class_of[v] != -1:
                    raise MalformedInputException(f'classes do not partition [0, {n}): vertex {v}')
                class_of[v] = index
        self.class_of: tuple[int, ...] = tuple(class_of)
        self.signatures = tuple(signatures) if signatures is not None else None
        self.colors = tuple(colors) if colors is not None else None
        self.trace = trace

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> 'OrderedPartition':
        """Groups vertices by label, classes ordered by their smallest vertex"""
        groups: dict[Hashable, list[int]] = {}
        for v, label in enumerate(labels):
            groups.setdefault(label, []).append(v)
        return cls(sorted(groups.values()))

    @property
    def t(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(cls) for cls in self.classes)

    @property
    def is_discrete(self) -> bool:
        return self.t == self.n

    def as_sets(self) -> set[frozenset[int]]:
        """Order-free view, for comparing partitions produced by different procedures"""
        return {frozenset(cls) for cls in self.classes}

    def refines(self, other: 'OrderedPartition') -> bool:
        """Whether every class of this partition lies inside a class of ``other``"""
        return all(len({other.class_of[v] for v in cls}) == 1 for cls in self.classes)

    def serialize(self) -> str:
        return ''.join(' '.join(map(str, cls)) + '\n' for cls in self.classes)

    def __eq__(self, other):
        return isinstance(other, OrderedPartition) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        return f'OrderedPartition(t={self.t}, sizes={self.sizes})'
