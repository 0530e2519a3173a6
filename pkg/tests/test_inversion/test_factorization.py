import pytest

from inversion.exception import OddOrderException
from inversion.factorization import Factorization, walecki


class TestWalecki:
    """Tests for Walecki's 1-factorization"""

    @pytest.mark.parametrize('n', [2, 4, 6, 8, 20, 64])
    def test_valid_factorization(self, n):
        """Test n - 1 perfect matchings covering every edge once"""
        factorization = walecki(n)

        assert factorization.violations() == []
        assert len(factorization) == n - 1

    @pytest.mark.parametrize('n', [4, 6, 10, 16])
    def test_consecutive_matchings_are_hamiltonian(self, n):
        """Test every pair of consecutive matchings forms one cycle through all vertices"""
        factorization = walecki(n)

        assert all(factorization.is_hamiltonian_pair(r, (r + 1) % (n - 1)) for r in range(n - 1))

    def test_odd_order(self):
        """Test odd n has no 1-factorization"""
        with pytest.raises(OddOrderException):
            walecki(7)

    def test_violations_are_reported(self):
        """Test a broken factorization lists its problems"""
        broken = Factorization(4, [((0, 1), (2, 3)), ((0, 1), (2, 3))])

        problems = broken.violations()

        assert any('used twice' in problem for problem in problems)
        assert any('matchings for K_4' in problem for problem in problems)
