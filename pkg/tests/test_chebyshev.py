import numpy as np
import pytest

from cliqueorder import (
    brute_force_perm_min,
    chebyshev,
    chebyshev_complement,
    cost_lemma,
    cost_stable,
    default_epsilon,
    default_sinkhorn_iters,
    er_generate,
    perm_loss,
)


class TestChebyshev:
    def test_n6_rows(self):
        c = chebyshev(6)
        assert c[0].tolist() == [0, 1, 2, 3, 4, 5]
        assert c[5].tolist() == [5] * 6

    def test_n1(self):
        assert chebyshev(1).tolist() == [[0]]

    def test_n3(self):
        assert chebyshev(3).tolist() == [[0, 1, 2], [1, 1, 2], [2, 2, 2]]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            chebyshev(0)


class TestChebyshevComplement:
    def test_n6_rows(self):
        c = chebyshev_complement(6)
        assert c[0].tolist() == [5, 4, 3, 2, 1, 0]
        assert c[5].tolist() == [0] * 6

    def test_n2(self):
        assert chebyshev_complement(2).tolist() == [[1, 0], [0, 0]]

    def test_sum_identity(self):
        for n in (1, 2, 5, 9):
            total = chebyshev(n) + chebyshev_complement(n)
            assert (total == n - 1).all()


class TestCostLemma:
    def test_n3_corners(self):
        d = cost_lemma(3)
        assert d[0][0] == 81  # (3^2)^2
        assert d[2][2] == 1

    def test_n1(self):
        assert cost_lemma(1) == [[1]]

    def test_n4_offdiag(self):
        assert cost_lemma(4)[0][1] == 256  # (4^2)^2

    def test_exact_shell_ratio(self):
        # consecutive shells differ by exactly n^2
        for n in (3, 5, 8):
            d = cost_lemma(n)
            for k in range(n - 1):
                assert d[k][k] == n * n * d[k + 1][k + 1]

    def test_exact_integer_arithmetic(self):
        d = cost_lemma(8)
        assert isinstance(d[0][0], int)
        assert d[0][0] == 64**7

    def test_symmetric_and_shell_structure(self):
        d = cost_lemma(5)
        for i in range(5):
            for j in range(5):
                assert d[i][j] == d[j][i]
                assert d[i][j] == d[max(i, j)][max(i, j)]


class TestCostStable:
    def test_last_diagonal_entry(self):
        for n, eps in ((4, 0.2), (7, 0.06)):
            d = cost_stable(n, eps)
            assert d[n - 1, n - 1] == pytest.approx((1 + eps) ** (-n / 2))

    def test_n6_eps02_first_entry(self):
        assert cost_stable(6, 0.2)[0, 0] == pytest.approx(1.2**2)

    def test_strictly_decreasing_shells(self):
        d = cost_stable(8, 0.2)
        diag = np.diag(d)
        assert (np.diff(diag) < 0).all()

    def test_scaling_relation(self):
        n, eps = 7, 0.2
        unshifted = (1.0 + eps) ** chebyshev_complement(n).astype(float)
        assert np.allclose(cost_stable(n, eps), (1 + eps) ** (-n / 2) * unshifted)

    def test_rejects_bad_epsilon(self):
        with pytest.raises(ValueError):
            cost_stable(4, 0.0)

    def test_exponent_shift_preserves_minimizers_up_to_ties(self):
        # cost_stable is a positive constant multiple of (1+eps)**complement,
        # so both share the same set of minimizing permutations.  The reported
        # minimizer may differ within an exactly-tied class (graphs can have
        # loss-equal permutations), so compare achieved losses, not the maps.
        for seed in range(4):
            g = er_generate(6, 0.5, 100 + seed)
            eps = 0.2
            unshifted = (1.0 + eps) ** chebyshev_complement(6).astype(float)
            p1, l1 = brute_force_perm_min(g, unshifted)
            p2, l2 = brute_force_perm_min(g, cost_stable(6, eps))
            scale = (1.0 + eps) ** (-6 / 2)
            assert l2 == pytest.approx(l1 * scale, rel=1e-9)
            assert perm_loss(g, p1, cost_stable(6, eps)) == pytest.approx(l2, rel=1e-9)
            assert perm_loss(g, p2, unshifted) == pytest.approx(l1, rel=1e-9)


class TestDefaults:
    def test_epsilon_by_size(self):
        assert default_epsilon(100) == 0.2
        assert default_epsilon(101) == 0.06

    def test_sinkhorn_iters_by_size(self):
        assert default_sinkhorn_iters(100) == 20
        assert default_sinkhorn_iters(101) == 10
