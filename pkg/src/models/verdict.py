from enum import Enum

IDENTIFIED = 'identified'
NOT_IDENTIFIED = 'not-identified'


class Relation(Enum):
    """How the edges between two classes look"""
    EMPTY = '□'
    MATCHED = '≐'
    INTO = '≪'
    FROM = '≫'
    THREE_MATCHINGS = '≡₃³'
    OTHER = 'other'

    def reversed(self) -> 'Relation':
        if self is Relation.INTO:
            return Relation.FROM
        if self is Relation.FROM:
            return Relation.INTO
        return self


class RegularCase(Enum):
    """Color-regular classes that are identified on their own, plus the rejection tag"""
    MONOCHROME_COMPLETE = 1
    MATCHING_PLUS_ONE = 2
    DIRECTED_3_CYCLE = 3
    THREE_MATCHINGS_K4 = 4
    CYCLE_4_PLUS_MATCHING = 5
    REGULAR_TOURNAMENT_5 = 6
    TWO_FIVE_CYCLES = 7
    FIVE_MATCHINGS_K6 = 8
    CO_C6_PLUS_TWO_MATCHINGS = 9
    NOT_IDENTIFIED = 0

    @property
    def is_exception(self) -> bool:
        return self not in (RegularCase.MONOCHROME_COMPLETE, RegularCase.NOT_IDENTIFIED)


class Condition(Enum):
    """Conditions of the classification in the order they are checked"""
    CLASS_SHAPE = 1
    PAIR_RELATION = 2
    SKELETON_FOREST = 3
    NO_INTO_FROM_PATH = 4
    NO_INTO_PATH_TO_EXCEPTION = 5
    ONE_EXCEPTION_PER_COMPONENT = 6
    DISTINCT_BOUQUETS = 7
    BINARY_ONLY = 8

    @property
    def slug(self) -> str:
        return self.name.lower().replace('_', '-')


class Verdict:

    def __init__(self, identified: bool, condition: Condition | None = None, witness: str = ''):
        if identified == (condition is not None):
            raise ValueError('a verdict carries a failed condition exactly when it is negative')
        self.identified = identified
        self.condition = condition
        self.witness = witness

    @classmethod
    def positive(cls) -> 'Verdict':
        return cls(True)

    @classmethod
    def negative(cls, condition: Condition, witness: str) -> 'Verdict':
        return cls(False, condition, witness)

    @property
    def reason(self) -> str | None:
        if self.identified:
            return None
        return f'{self.condition.slug} {self.witness}'.rstrip()

    def __bool__(self):
        return self.identified

    def __str__(self):
        return IDENTIFIED if self.identified else f'{NOT_IDENTIFIED}: {self.reason}'

    def __repr__(self):
        return f'Verdict({self})'


class InducedShape(Enum):
    """What a class of a flipped graph induces"""
    EMPTY = 'empty'
    MATCHING = 'matching'
    FIVE_CYCLE = '5-cycle'
    OTHER = 'other'

    @property
    def is_exception(self) -> bool:
        return self in (InducedShape.MATCHING, InducedShape.FIVE_CYCLE)
