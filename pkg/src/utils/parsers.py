import re
from typing import Iterator

from models.ecpog import EcPog, validate_ecpog
from models.exception import ArityMismatchException, DuplicateEdgeException, IndexOutOfRangeException, \
    LoopEdgeException, MalformedInputException
from models.graph import ColoredGraph, Graph
from models.invariant import C2Invariant, EcInvariant
from models.structure import RelationalStructure
from utils.constants import C2_INVARIANT_HEADER, COLORS_KEYWORD, COMMENT_PREFIX, DIRECTED_KEYWORD, \
    EC_INVARIANT_HEADER, ECPOG_HEADER, EDGE_KEYWORD, GRAPH_HEADER, ROW_KEYWORD, SIZES_KEYWORD, \
    STRUCTURE_SIGNATURE, STRUCTURE_UNIVERSE, UNDIRECTED_KEYWORD, VERTEX_KEYWORD
from utils.utils import dense_ranks, parse_int

TOKEN_PATTERN = re.compile(r'\S+')
SIGNATURE_PATTERN = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)/(\d+)$', re.ASCII)
EC_ITEM_PATTERN = re.compile(r'\((\d+):(\d+),(\d+),(\d+)\)', re.ASCII)
EC_CELL_PATTERN = re.compile(r'^(?:\(\)|(?:\(\d+:\d+,\d+,\d+\))+)$', re.ASCII)


class Token:

    def __init__(self, text: str, line: int, column: int):
        self.text = text
        self.line = line
        self.column = column

    def integer(self) -> int:
        return parse_int(self.text, self.line, self.column)

    def __repr__(self):
        return f'Token({self.text!r}, {self.line}:{self.column})'


def tokenize(text: str | bytes) -> Iterator[list[Token]]:
    """Yields the tokens of every non-empty line, comments stripped"""
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise MalformedInputException(f'input is not UTF-8: {e}')
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split(COMMENT_PREFIX, 1)[0]
        tokens = [Token(match.group(), number, match.start() + 1) for match in TOKEN_PATTERN.finditer(line)]
        if tokens:
            yield tokens


def _expect_arguments(tokens: list[Token], count: int):
    if len(tokens) != count + 1:
        head = tokens[0]
        raise MalformedInputException(f"'{head.text}' takes {count} arguments, got {len(tokens) - 1}",
                                      head.line, head.column)


def _header(lines: Iterator[list[Token]], keyword: str, arguments: int) -> list[int]:
    tokens = next(lines, None)
    if tokens is None:
        raise MalformedInputException(f"empty input, expected a '{keyword}' header")
    if tokens[0].text != keyword:
        raise MalformedInputException(f"expected '{keyword}' header, got '{tokens[0].text}'",
                                      tokens[0].line, tokens[0].column)
    _expect_arguments(tokens, arguments)
    return [token.integer() for token in tokens[1:]]


def _vertex(token: Token, n: int) -> int:
    v = token.integer()
    if v >= n:
        raise IndexOutOfRangeException(f'vertex {v} outside [0, {n})', token.line, token.column)
    return v


def _coloring(colors: dict[int, int], n: int) -> list[int] | None:
    if not colors:
        return None
    return dense_ranks([colors.get(v, 0) for v in range(n)])


def _color_line(tokens: list[Token], n: int, colors: dict[int, int]):
    _expect_arguments(tokens, 2)
    v = _vertex(tokens[1], n)
    if v in colors:
        raise MalformedInputException(f'vertex {v} colored twice', tokens[0].line, tokens[0].column)
    colors[v] = tokens[2].integer()


def parse_graph(text: str | bytes) -> ColoredGraph:
    lines = tokenize(text)
    n, m = _header(lines, GRAPH_HEADER, 2)
    edges = set()
    colors: dict[int, int] = {}
    for tokens in lines:
        keyword = tokens[0]
        if keyword.text == EDGE_KEYWORD:
            _expect_arguments(tokens, 2)
            u, v = _vertex(tokens[1], n), _vertex(tokens[2], n)
            if u == v:
                raise LoopEdgeException(f'loop at vertex {u}', keyword.line, keyword.column)
            edge = (min(u, v), max(u, v))
            if edge in edges:
                raise DuplicateEdgeException(f'edge {{{u},{v}}} listed twice', keyword.line, keyword.column)
            edges.add(edge)
        elif keyword.text == VERTEX_KEYWORD:
            _color_line(tokens, n, colors)
        else:
            raise MalformedInputException(f"unknown line type '{keyword.text}'", keyword.line, keyword.column)
    if len(edges) != m:
        raise MalformedInputException(f'header announces {m} edges, found {len(edges)}')
    return ColoredGraph(Graph(n, edges), _coloring(colors, n))


def parse_ecpog(text: str | bytes) -> tuple[EcPog, list[int] | None]:
    """Reads an ecPOG file; the second value is the vertex coloring from 'v' lines, if any"""
    lines = tokenize(text)
    n, t = _header(lines, ECPOG_HEADER, 2)
    arcs: dict[tuple[int, int], int] = {}
    seen = set()
    colors: dict[int, int] = {}
    for tokens in lines:
        keyword = tokens[0]
        if keyword.text in (UNDIRECTED_KEYWORD, DIRECTED_KEYWORD):
            _expect_arguments(tokens, 3)
            a, b = _vertex(tokens[1], n), _vertex(tokens[2], n)
            color = tokens[3].integer()
            if a == b:
                raise LoopEdgeException(f'loop at vertex {a}', keyword.line, keyword.column)
            if color >= t:
                raise IndexOutOfRangeException(f'color {color} outside [0, {t})', tokens[3].line, tokens[3].column)
            pair = (min(a, b), max(a, b))
            if pair in seen:
                raise DuplicateEdgeException(f'pair {{{a},{b}}} listed twice', keyword.line, keyword.column)
            seen.add(pair)
            arcs[(a, b)] = color
            if keyword.text == UNDIRECTED_KEYWORD:
                arcs[(b, a)] = color
        elif keyword.text == VERTEX_KEYWORD:
            _color_line(tokens, n, colors)
        else:
            raise MalformedInputException(f"unknown line type '{keyword.text}'", keyword.line, keyword.column)
    return validate_ecpog(n, arcs), _coloring(colors, n)


def parse_structure(text: str | bytes) -> RelationalStructure:
    lines = tokenize(text)
    tokens = next(lines, None)
    if tokens is None or tokens[0].text != STRUCTURE_SIGNATURE:
        where = (tokens[0].line, tokens[0].column) if tokens else (None, None)
        raise MalformedInputException(f"expected '{STRUCTURE_SIGNATURE}' line", *where)
    signature = []
    for token in tokens[1:]:
        match = SIGNATURE_PATTERN.match(token.text)
        if not match:
            raise MalformedInputException(f"expected <Name>/<arity>, got '{token.text}'", token.line, token.column)
        signature.append((match.group(1), int(match.group(2))))
    arities = dict(signature)
    if len(arities) != len(signature):
        raise MalformedInputException('relation names repeat in signature', tokens[0].line, tokens[0].column)

    (n,) = _header(lines, STRUCTURE_UNIVERSE, 1)
    relations: dict[str, set[tuple[int, ...]]] = {name: set() for name in arities}
    for tokens in lines:
        name = tokens[0]
        if name.text not in arities:
            raise MalformedInputException(f"relation '{name.text}' is not declared", name.line, name.column)
        arity = arities[name.text]
        if len(tokens) - 1 != arity:
            raise ArityMismatchException(f'{name.text} has arity {arity}, got {len(tokens) - 1} elements',
                                         name.line, name.column)
        relations[name.text].add(tuple(_vertex(token, n) for token in tokens[1:]))
    return RelationalStructure(signature, n, relations)


def parse_invariant(text: str | bytes) -> C2Invariant | EcInvariant:
    """Reads either invariant text form, as written by their serialize methods"""
    lines = list(tokenize(text))
    if not lines:
        raise MalformedInputException('empty input, expected an invariant header')
    head = lines[0][0]
    if head.text not in (C2_INVARIANT_HEADER, EC_INVARIANT_HEADER):
        raise MalformedInputException(f"expected '{C2_INVARIANT_HEADER}' or '{EC_INVARIANT_HEADER}' header",
                                      head.line, head.column)
    _expect_arguments(lines[0], 1)
    t = lines[0][1].integer()
    sizes = None
    colors = None
    rows = []
    for tokens in lines[1:]:
        keyword = tokens[0]
        if keyword.text == SIZES_KEYWORD and sizes is None:
            _expect_arguments(tokens, t)
            sizes = [token.integer() for token in tokens[1:]]
        elif keyword.text == COLORS_KEYWORD and colors is None:
            _expect_arguments(tokens, t)
            colors = [token.integer() for token in tokens[1:]]
        elif keyword.text == ROW_KEYWORD:
            _expect_arguments(tokens, t)
            if head.text == C2_INVARIANT_HEADER:
                rows.append([token.integer() for token in tokens[1:]])
            else:
                rows.append([_ec_cell(token) for token in tokens[1:]])
        else:
            raise MalformedInputException(f"unexpected line '{keyword.text}'", keyword.line, keyword.column)
    if sizes is None:
        raise MalformedInputException(f"missing '{SIZES_KEYWORD}' line")
    if len(rows) != t:
        raise MalformedInputException(f'expected {t} matrix rows, found {len(rows)}')
    if head.text == C2_INVARIANT_HEADER:
        return C2Invariant(sizes, rows, colors)
    return EcInvariant(sizes, rows, colors)


def _ec_cell(token: Token) -> tuple[tuple[int, int, int, int], ...]:
    if not EC_CELL_PATTERN.match(token.text):
        raise MalformedInputException(f"malformed entry '{token.text}'", token.line, token.column)
    return tuple(tuple(int(group) for group in match.groups()) for match in EC_ITEM_PATTERN.finditer(token.text))
