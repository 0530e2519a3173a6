import argparse
import logging
import sys
from typing import Sequence

from c2kit.bench import BENCH_KINDS, bench
from identification.bouquet import bouquet
from identification.graphs import identified_c2_graph
from identification.structures import ecpog_of, identified_c2_ecpog, identified_c2_structure, restrict_arity2
from invariants.invariant import invariant_ecpog, invariant_graph
from inversion.circulant import circulant, doubly_circulant
from inversion.coloring import circ_psi, invert_ec, match_psi
from inversion.multi_circulant import canonize_graph, multi_circulant_representative
from models.exception import C2KitException, MalformedInputException
from models.invariant import C2Invariant
from models.run_config import RunConfig
from models.structure import RelationalStructure
from models.verdict import IDENTIFIED, NOT_IDENTIFIED
from oracles.cfi import cfi_pair
from oracles.identification import identified_oracle, identified_oracle_ecpog
from oracles.isomorphism import are_isomorphic, are_isomorphic_ecpog, automorphism_orbits
from oracles.kwl import kwl_equivalent
from refinement.refiner import refine_ecpog, refine_graph
from utils.constants import ECPOG_HEADER, GRAPH_HEADER, STRUCTURE_SIGNATURE
from utils.parsers import parse_ecpog, parse_graph, parse_invariant, parse_structure, tokenize

log = logging.getLogger('c2kit')

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

_handler: logging.Handler | None = None


def _options(defaults: bool) -> argparse.ArgumentParser:
    # subcommands repeat the options without defaults so they never reset a value given before the command
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument('-v', '--verbose', action='count', default=0 if defaults else argparse.SUPPRESS,
                         help='-v for INFO, -vv for DEBUG on stderr')
    options.add_argument('-o', '--output', default=None if defaults else argparse.SUPPRESS,
                         help='write the result to this file instead of standard output')
    return options


def build_parser() -> argparse.ArgumentParser:
    common = _options(defaults=False)

    parser = argparse.ArgumentParser(prog='c2kit', parents=[_options(defaults=True)],
                                     description='C2 identification, canonization and inversion')
    commands = parser.add_subparsers(dest='command', required=True, metavar='command')

    for name, help_text in (('refine', 'print the C2-partition, one class per line'),
                            ('invariant', 'print the complete C2 invariant'),
                            ('identify', 'decide whether C2 identifies a graph'),
                            ('identify-structure', 'decide whether C2 identifies a relational structure'),
                            ('identify-ecpog', 'decide whether C2 identifies an ecPOG'),
                            ('invert', 'build a graph or ecPOG realizing an invariant'),
                            ('canon', 'print the canonical C2-equivalent graph')):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument('file', help="input file, '-' for standard input")

    gen = commands.add_parser('gen', parents=[common], help='print one of the explicit constructions')
    generators = gen.add_subparsers(dest='action', required=True, metavar='generator')
    for name, params in (('circulant', ('n', 'k')), ('doubly', ('m', 'n', 'k', 'l')), ('walecki', ('n',))):
        generator = generators.add_parser(name, parents=[common])
        for param in params:
            generator.add_argument(param, type=int)
    for name in ('circpsi', 'matchpsi'):
        generator = generators.add_parser(name, parents=[common])
        generator.add_argument('n', type=int)
        generator.add_argument('degrees', type=int, nargs='+')
    cfi = generators.add_parser('cfi', parents=[common])
    cfi.add_argument('file', help='base graph')
    cfi.add_argument('--twisted', action='store_true', help='print the graph with the first base edge twisted')
    tree = generators.add_parser('bouquet', parents=[common])
    tree.add_argument('file', help='tree to copy five times')
    tree.add_argument('--root', type=int, default=0)

    oracle = commands.add_parser('oracle', parents=[common], help='exhaustive reference checks')
    oracles = oracle.add_subparsers(dest='action', required=True, metavar='oracle')
    oracles.add_parser('identify', parents=[common]).add_argument('file')
    oracles.add_parser('orbits', parents=[common]).add_argument('file')
    oracles.add_parser('iso', parents=[common]).add_argument('files', nargs=2)
    kwl = oracles.add_parser('kwl', parents=[common])
    kwl.add_argument('files', nargs=2)
    kwl.add_argument('-k', type=int, default=1, help='Weisfeiler-Leman dimension (1 to 3)')

    timing = commands.add_parser('bench', parents=[common], help='time an operation over growing inputs')
    timing.add_argument('kind', choices=BENCH_KINDS)
    timing.add_argument('--sizes', type=int, nargs='+')
    timing.add_argument('--seed', type=int, default=0)
    return parser


def configure_logging(config: RunConfig):
    global _handler
    if _handler is not None:
        log.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    log.addHandler(_handler)
    log.setLevel(config.log_level)


def read_input(path: str) -> bytes:
    if path == '-':
        return sys.stdin.buffer.read()
    with open(path, 'rb') as f:
        return f.read()


def input_kind(text: bytes) -> str:
    first = next(tokenize(text), None)
    if first is None:
        raise MalformedInputException('empty input')
    return first[0].text


def _load_any(path: str):
    """Graph, (ecPOG, coloring) or structure, told apart by the header keyword"""
    text = read_input(path)
    kind = input_kind(text)
    if kind == GRAPH_HEADER:
        return parse_graph(text)
    if kind == ECPOG_HEADER:
        return parse_ecpog(text)
    if kind == STRUCTURE_SIGNATURE:
        return parse_structure(text)
    raise MalformedInputException(f"unknown header '{kind}', expected graph, ecpog or sig", 1)


def _as_ecpog(loaded):
    if isinstance(loaded, tuple):
        return loaded
    if isinstance(loaded, RelationalStructure):
        return ecpog_of(restrict_arity2(loaded))
    return None


def _verdict_line(identified: bool) -> str:
    return IDENTIFIED if identified else NOT_IDENTIFIED


def run(config: RunConfig, namespace: argparse.Namespace) -> tuple[str, int]:
    """Executes one subcommand and returns its standard output text and exit code"""
    command = config.subcommand
    if command == 'refine':
        loaded = _load_any(config.inputs[0])
        ecpog = _as_ecpog(loaded)
        partition = refine_ecpog(*ecpog) if ecpog else refine_graph(loaded)
        return partition.serialize(), EXIT_OK
    if command == 'invariant':
        loaded = _load_any(config.inputs[0])
        ecpog = _as_ecpog(loaded)
        invariant = invariant_ecpog(*ecpog) if ecpog else invariant_graph(loaded)
        return invariant.serialize(), EXIT_OK
    if command in ('identify', 'identify-structure', 'identify-ecpog'):
        text = read_input(config.inputs[0])
        if command == 'identify':
            verdict = identified_c2_graph(parse_graph(text))
        elif command == 'identify-structure':
            verdict = identified_c2_structure(parse_structure(text))
        else:
            verdict = identified_c2_ecpog(*parse_ecpog(text))
        log.info(f'{command} {config.inputs[0]}: {verdict}')
        return f'{verdict}\n', EXIT_OK if verdict else EXIT_NEGATIVE
    if command == 'invert':
        invariant = parse_invariant(read_input(config.inputs[0]))
        if isinstance(invariant, C2Invariant):
            return multi_circulant_representative(invariant).graph.serialize(), EXIT_OK
        p, coloring = invert_ec(invariant)
        return p.serialize(coloring), EXIT_OK
    if command == 'canon':
        return canonize_graph(parse_graph(read_input(config.inputs[0]))).serialize(), EXIT_OK
    if command == 'gen':
        return _generate(config, namespace), EXIT_OK
    if command == 'oracle':
        return _oracle(config, namespace)
    if command == 'bench':
        return bench(namespace.kind, namespace.sizes, config.seed).serialize(), EXIT_OK
    raise MalformedInputException(f'unknown command {command}')


def _generate(config: RunConfig, ns: argparse.Namespace) -> str:
    action = config.action
    if action == 'circulant':
        return circulant(ns.n, ns.k).serialize()
    if action == 'doubly':
        return doubly_circulant(ns.m, ns.n, ns.k, ns.l).serialize()
    if action == 'walecki':
        return match_psi(ns.n, [1] * (ns.n - 1)).serialize()
    if action == 'circpsi':
        return circ_psi(ns.n, ns.degrees).serialize()
    if action == 'matchpsi':
        return match_psi(ns.n, ns.degrees).serialize()
    base = parse_graph(read_input(config.inputs[0]))
    if action == 'cfi':
        pair = cfi_pair(base.graph)
        return (pair.g_prime if ns.twisted else pair.g).serialize()
    return bouquet(base, ns.root).serialize()


def _oracle(config: RunConfig, ns: argparse.Namespace) -> tuple[str, int]:
    action = config.action
    loaded = [_load_any(path) for path in config.inputs]
    ecpogs = [_as_ecpog(item) for item in loaded]
    if action == 'identify':
        identified = identified_oracle_ecpog(*ecpogs[0]) if ecpogs[0] else identified_oracle(loaded[0])
        return _verdict_line(identified) + '\n', EXIT_OK if identified else EXIT_NEGATIVE
    if action == 'orbits':
        if ecpogs[0]:
            raise MalformedInputException('orbits are computed for graphs only')
        return automorphism_orbits(loaded[0]).serialize(), EXIT_OK
    if any(ecpogs) and not all(ecpogs):
        raise MalformedInputException('both inputs must be graphs or both ecPOGs')
    if action == 'iso':
        if ecpogs[0]:
            (p, p_coloring), (q, q_coloring) = ecpogs
            same = are_isomorphic_ecpog(p, q, p_coloring, q_coloring)
        else:
            same = are_isomorphic(*loaded)
        return ('isomorphic' if same else 'not-isomorphic') + '\n', EXIT_OK if same else EXIT_NEGATIVE
    if ecpogs[0]:
        raise MalformedInputException('k-WL is computed for graphs only')
    same = kwl_equivalent(*loaded, ns.k)
    return ('equivalent' if same else 'distinguished') + '\n', EXIT_OK if same else EXIT_NEGATIVE


def main(argv: Sequence[str] | None = None) -> int:
    namespace = build_parser().parse_args(argv)
    config = RunConfig.from_namespace(namespace)
    configure_logging(config)
    log.debug(f'run config: {config.to_dict()}')
    try:
        output, code = run(config, namespace)
    except (C2KitException, OSError) as e:
        print(f'c2kit: error: {e}', file=sys.stderr)
        return EXIT_ERROR
    if config.output:
        with open(config.output, 'w', encoding='utf-8') as f:
            f.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == '__main__':
    sys.exit(main())
