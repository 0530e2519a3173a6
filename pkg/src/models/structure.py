from typing import Iterable, Mapping, Sequence

from models.exception import ArityMismatchException, IndexOutOfRangeException, MalformedInputException
from utils.constants import STRUCTURE_SIGNATURE, STRUCTURE_UNIVERSE


class RelationalStructure:
    """Finite structure over a signature read at run time. Only positive tuples are stored."""

    def __init__(self, signature: Sequence[tuple[str, int]], n: int,
                 relations: Mapping[str, Iterable[tuple[int, ...]]] | None = None):
        names = [name for name, _ in signature]
        if len(set(names)) != len(names):
            raise MalformedInputException(f'relation names repeat in signature {names}')
        for name, arity in signature:
            if arity < 1:
                raise MalformedInputException(f'relation {name} needs a positive arity, got {arity}')
        if n < 0:
            raise MalformedInputException(f'universe size must be non-negative, got {n}')
        self.signature: tuple[tuple[str, int], ...] = tuple(signature)
        self.n = n
        arities = dict(self.signature)
        relations = relations or {}
        unknown = set(relations) - set(arities)
        if unknown:
            raise MalformedInputException(f'relations {sorted(unknown)} are not declared in the signature')

        self.relations: dict[str, frozenset[tuple[int, ...]]] = {}
        for name, arity in self.signature:
            tuples = set()
            for entry in relations.get(name, ()):
                entry = tuple(entry)
                if len(entry) != arity:
                    raise ArityMismatchException(f'{name} has arity {arity}, got tuple {entry}')
                for element in entry:
                    if not 0 <= element < n:
                        raise IndexOutOfRangeException(f'{name}{entry} leaves the universe [0, {n})')
                tuples.add(entry)
            self.relations[name] = frozenset(tuples)

    def arity(self, name: str) -> int:
        return dict(self.signature)[name]

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.signature), default=0)

    def with_relations(self, relations: Mapping[str, Iterable[tuple[int, ...]]],
                       signature: Sequence[tuple[str, int]] | None = None) -> 'RelationalStructure':
        return RelationalStructure(signature or self.signature, self.n, relations)

    def relabel(self, permutation: Sequence[int]) -> 'RelationalStructure':
        return self.with_relations({name: {tuple(permutation[x] for x in entry) for entry in tuples}
                                    for name, tuples in self.relations.items()})

    def serialize(self) -> str:
        lines = [f'{STRUCTURE_SIGNATURE} ' + ' '.join(f'{name}/{arity}' for name, arity in self.signature),
                 f'{STRUCTURE_UNIVERSE} {self.n}']
        for name, _ in self.signature:
            lines.extend(f'{name} ' + ' '.join(map(str, entry)) for entry in sorted(self.relations[name]))
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (isinstance(other, RelationalStructure) and self.signature == other.signature
                and self.n == other.n and self.relations == other.relations)

    def __hash__(self):
        return hash((self.signature, self.n, tuple(self.relations[name] for name, _ in self.signature)))

    def __repr__(self):
        sizes = ', '.join(f'{name}/{arity}:{len(self.relations[name])}' for name, arity in self.signature)
        return f'RelationalStructure(n={self.n}, {sizes})'
