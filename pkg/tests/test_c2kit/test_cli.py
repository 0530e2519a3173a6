import io
import logging
from unittest.mock import patch

import pytest

from builders import cycle, disjoint_union, path, shuffled
from c2kit.bench import BenchReport, BenchRow
from c2kit.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, build_parser, main
from invariants.invariant import invariant_graph
from models.graph import ColoredGraph
from utils.parsers import parse_ecpog, parse_graph

DIRECTED_TRIANGLE = 'ecpog 3 1\nd 0 1 0\nd 1 2 0\nd 2 0 0\n'


@pytest.fixture
def write(tmp_path):
    """Writes text (or a graph) into a file under tmp_path and returns the path as a string"""
    def _write(name, content):
        path_ = tmp_path / name
        path_.write_text(content if isinstance(content, str) else content.serialize(), encoding='utf-8')
        return str(path_)
    return _write


@pytest.fixture(autouse=True)
def reset_logger():
    yield
    logging.getLogger('c2kit').setLevel(logging.WARNING)


class TestParser:
    """Tests for the argument parser"""

    def test_verbose_after_command(self):
        """Test -v given after the subcommand is kept"""
        namespace = build_parser().parse_args(['identify', 'g.txt', '-vv'])

        assert namespace.verbose == 2

    def test_verbose_before_command(self):
        """Test -v given before the subcommand is not reset by it"""
        namespace = build_parser().parse_args(['-v', '-o', 'out.txt', 'refine', 'g.txt'])

        assert namespace.verbose == 1
        assert namespace.output == 'out.txt'

    def test_nested_actions(self):
        """Test gen and oracle read their action"""
        namespace = build_parser().parse_args(['oracle', 'kwl', 'a', 'b', '-k', '2'])

        assert namespace.action == 'kwl'
        assert namespace.files == ['a', 'b']
        assert namespace.k == 2

    def test_unknown_bench_kind(self):
        """Test argparse rejects unknown bench kinds"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(['bench', 'sort'])


class TestCommands:
    """Tests for main() on files"""

    def test_refine(self, write, capsys):
        """Test classes are printed one per line in canonical order"""
        code = main(['refine', write('p3.txt', path(3))])

        assert code == EXIT_OK
        assert capsys.readouterr().out == '1\n0 2\n'

    def test_invariant(self, write, capsys):
        """Test the invariant of a 5-cycle"""
        main(['invariant', write('c5.txt', cycle(5))])

        assert capsys.readouterr().out == 'c2inv 1\ns 5\nm 2\n'

    def test_identify_positive(self, write, capsys):
        """Test an identified graph exits with 0"""
        code = main(['identify', write('c5.txt', cycle(5))])

        assert code == EXIT_OK
        assert capsys.readouterr().out == 'identified\n'

    def test_identify_negative(self, write, capsys):
        """Test a negative verdict exits with 1 and names the condition"""
        code = main(['identify', write('c6.txt', cycle(6))])

        assert code == EXIT_NEGATIVE
        assert capsys.readouterr().out == 'not-identified: class-shape class 0 of size 6 induces a 2-regular graph\n'

    def test_identify_stdin(self, monkeypatch, capsys):
        """Test '-' reads standard input"""
        monkeypatch.setattr('sys.stdin', io.TextIOWrapper(io.BytesIO(path(4).serialize().encode())))

        assert main(['identify', '-']) == EXIT_OK
        assert capsys.readouterr().out == 'identified\n'

    def test_identify_structure(self, write, capsys):
        """Test a wide tuple is reported"""
        code = main(['identify-structure', write('s.txt', 'sig T/3\nuniv 3\nT 0 1 2\n')])

        assert code == EXIT_NEGATIVE
        assert capsys.readouterr().out.startswith('not-identified: binary-only T(0, 1, 2)')

    def test_identify_ecpog(self, write, capsys):
        """Test the directed triangle"""
        assert main(['identify-ecpog', write('p.txt', DIRECTED_TRIANGLE)]) == EXIT_OK
        assert capsys.readouterr().out == 'identified\n'

    def test_refine_ecpog(self, write, capsys):
        """Test refine sniffs the ecpog header"""
        main(['refine', write('p.txt', DIRECTED_TRIANGLE)])

        assert capsys.readouterr().out == '0 1 2\n'

    def test_invert(self, write, capsys, petersen):
        """Test the inverted graph has the given invariant"""
        invariant = invariant_graph(petersen)

        assert main(['invert', write('inv.txt', invariant.serialize())]) == EXIT_OK
        assert invariant_graph(parse_graph(capsys.readouterr().out)) == invariant

    def test_invert_ec(self, write, capsys):
        """Test ecinv files give an ecPOG"""
        main(['invariant', write('p.txt', DIRECTED_TRIANGLE)])
        invariant = capsys.readouterr().out

        assert main(['invert', write('inv.txt', invariant)]) == EXIT_OK
        p, _ = parse_ecpog(capsys.readouterr().out)
        assert p.n == 3

    def test_canon(self, write, capsys):
        """Test shuffled copies get the same canonical graph"""
        g = ColoredGraph(disjoint_union(cycle(3), path(3)))
        main(['canon', write('g.txt', g)])
        first = capsys.readouterr().out
        main(['canon', write('h.txt', shuffled(g, 4)[0])])

        assert capsys.readouterr().out == first

    def test_output_file(self, write, tmp_path, capsys):
        """Test -o writes the result to a file"""
        target = tmp_path / 'out.txt'

        main(['identify', write('c5.txt', cycle(5)), '-o', str(target)])

        assert target.read_text(encoding='utf-8') == 'identified\n'
        assert capsys.readouterr().out == ''

    def test_verbose_sets_level(self, write):
        """Test -v switches the package logger to INFO"""
        main(['-v', 'identify', write('c5.txt', cycle(5))])

        assert logging.getLogger('c2kit').level == logging.INFO


class TestGenerators:
    """Tests for the gen subcommand"""

    def test_circulant(self, capsys):
        """Test a 2-regular circulant on five vertices"""
        main(['gen', 'circulant', '5', '2'])
        g = parse_graph(capsys.readouterr().out)

        assert g.graph.m == 5
        assert all(g.graph.degree(v) == 2 for v in range(5))

    def test_doubly(self, capsys):
        """Test biregular degrees of the doubly circulant graph"""
        main(['gen', 'doubly', '2', '4', '2', '1'])
        g = parse_graph(capsys.readouterr().out)

        assert [g.graph.degree(v) for v in range(6)] == [2, 2, 1, 1, 1, 1]

    def test_walecki(self, capsys):
        """Test the Walecki coloring of K_6 has five colors"""
        main(['gen', 'walecki', '6'])

        assert capsys.readouterr().out.startswith('ecpog 6 5\n')

    def test_circpsi(self, capsys):
        """Test a two-colored K_5"""
        main(['gen', 'circpsi', '5', '2', '2'])
        p, _ = parse_ecpog(capsys.readouterr().out)

        assert p.colors == (0, 1)

    def test_infeasible_degrees(self, capsys):
        """Test infeasible parameters exit with 2"""
        assert main(['gen', 'circpsi', '6', '5']) == EXIT_ERROR
        assert 'c2kit: error:' in capsys.readouterr().err

    @pytest.mark.parametrize('twisted', [False, True])
    def test_cfi(self, write, capsys, twisted):
        """Test both CFI graphs over a triangle"""
        args = ['gen', 'cfi', write('k3.txt', cycle(3))] + (['--twisted'] if twisted else [])

        main(args)

        assert parse_graph(capsys.readouterr().out).n == 18

    def test_bouquet(self, write, capsys):
        """Test five copies of a path rooted at its middle"""
        main(['gen', 'bouquet', write('p3.txt', path(3)), '--root', '1'])
        g = parse_graph(capsys.readouterr().out)

        assert g.n == 15
        assert g.graph.m == 15


class TestOracles:
    """Tests for the oracle subcommand"""

    def test_identify(self, write, capsys):
        """Test the exhaustive check on a 6-cycle"""
        assert main(['oracle', 'identify', write('c6.txt', cycle(6))]) == EXIT_NEGATIVE
        assert capsys.readouterr().out == 'not-identified\n'

    def test_identify_ecpog(self, write, capsys):
        """Test the exhaustive check on an ecPOG"""
        assert main(['oracle', 'identify', write('p.txt', DIRECTED_TRIANGLE)]) == EXIT_OK
        assert capsys.readouterr().out == 'identified\n'

    def test_orbits(self, write, capsys):
        """Test orbits of P4"""
        main(['oracle', 'orbits', write('p4.txt', path(4))])

        assert capsys.readouterr().out == '0 3\n1 2\n'

    def test_iso(self, write, capsys):
        """Test a 6-cycle against two triangles"""
        code = main(['oracle', 'iso', write('a.txt', cycle(6)), write('b.txt', disjoint_union(cycle(3), cycle(3)))])

        assert code == EXIT_NEGATIVE
        assert capsys.readouterr().out == 'not-isomorphic\n'

    def test_kwl(self, write, capsys):
        """Test color refinement does not separate a 6-cycle from two triangles"""
        code = main(['oracle', 'kwl', write('a.txt', cycle(6)), write('b.txt', disjoint_union(cycle(3), cycle(3)))])

        assert code == EXIT_OK
        assert capsys.readouterr().out == 'equivalent\n'

    def test_mixed_inputs(self, write, capsys):
        """Test a graph and an ecPOG cannot be compared"""
        code = main(['oracle', 'iso', write('a.txt', cycle(3)), write('b.txt', DIRECTED_TRIANGLE)])

        assert code == EXIT_ERROR
        assert 'both inputs' in capsys.readouterr().err


class TestErrors:
    """Tests for exit code 2"""

    def test_malformed(self, write, capsys):
        """Test parse errors are reported on stderr"""
        code = main(['identify', write('bad.txt', 'graph 3 1\ne 0 7\n')])

        assert code == EXIT_ERROR
        assert capsys.readouterr().err.startswith('c2kit: error:')

    def test_non_ascii_digit(self, write, capsys):
        """Test a superscript digit is a parse error and not a crash"""
        code = main(['identify', write('sup.txt', 'graph ² 0\n')])

        assert code == EXIT_ERROR
        assert 'line 1' in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test a missing file exits with 2"""
        assert main(['identify', str(tmp_path / 'missing.txt')]) == EXIT_ERROR

    def test_unknown_header(self, write, capsys):
        """Test refine refuses files it cannot sniff"""
        assert main(['refine', write('x.txt', 'digraph 3 0\n')]) == EXIT_ERROR
        assert 'unknown header' in capsys.readouterr().err


class TestBenchCommand:
    """Tests for the bench subcommand"""

    def test_passes_sizes_and_seed(self, capsys):
        """Test sizes and seed reach the bench runner"""
        report = BenchReport('refine', 3, 'model', [BenchRow(10, 40, 0.5), BenchRow(100, 400, 5.0)])
        with patch('c2kit.cli.bench', return_value=report) as runner:
            code = main(['bench', 'refine', '--sizes', '10', '100', '--seed', '3'])

        assert code == EXIT_OK
        runner.assert_called_once_with('refine', [10, 100], 3)
        assert '# exponent 1.000' in capsys.readouterr().out
