import itertools

import pytest

from skyline.correspondences import from_multiset, phi
from skyline.demazure import atom, key_polynomial, schur_polynomial
from skyline.kernel import (
    ExpansionReport,
    KernelInstance,
    alpha_vector,
    alpha_via_sorting,
    kernel_lhs,
    kernel_rhs,
    sigma_nw_word,
    sigma_se_word,
    verify_expansion,
)
from skyline.permutations import orbit_bruhat_leq
from skyline.polynomials import SparsePoly, pair_product
from skyline.shapes import (
    cells,
    compositions_with_sum,
    decreasing_rearrangement,
    reverse,
)


def test_instance_validation():
    KernelInstance(5, 4, 3)
    with pytest.raises(ValueError):
        KernelInstance(5, 1, 1)
    assert KernelInstance(4, 3, 2).is_rectangle
    assert KernelInstance(3, 3, 3).is_staircase


def test_sigma_se_word_examples():
    assert sigma_se_word(5, 4, 3).word == (2, 1, 3, 2, 3)
    assert sigma_se_word(4, 3, 2).word == (2, 1, 2)
    assert sigma_se_word(3, 3, 3).word == ()
    with pytest.raises(ValueError):
        sigma_se_word(5, 3, 4)


def test_sigma_se_word_length_is_skew_size():
    for n, m, k in [(5, 4, 3), (4, 3, 2), (5, 5, 3), (6, 5, 4), (4, 4, 2)]:
        lam = KernelInstance(n, m, k).shape
        rho_size = min(k, m) * (min(k, m) + 1) // 2
        assert len(sigma_se_word(n, m, k).word) == sum(lam) - rho_size


def test_sigma_nw_word():
    assert sigma_nw_word(5, 3, 4).word == sigma_se_word(5, 4, 3).word
    assert sigma_nw_word(3, 3, 3).word == ()
    with pytest.raises(ValueError):
        sigma_nw_word(5, 4, 3)


def test_alpha_vector_examples():
    assert alpha_vector((1, 1, 2), 5, 4, 3) == (1, 2, 1)
    # m = n: plain reversal
    for mu in compositions_with_sum(4, 3):
        assert alpha_vector(mu, 5, 5, 3) == reverse(mu)
    # rectangle: sorted increasingly
    for mu in compositions_with_sum(4, 2):
        assert alpha_vector(mu, 4, 3, 2) == reverse(decreasing_rearrangement(mu))


def test_alpha_via_sorting_examples():
    assert alpha_via_sorting((1, 1, 2), 5, 4, 3) == (0, 1, 2, 1, 0)
    assert alpha_via_sorting((0, 0, 0), 5, 4, 3) == (0, 0, 0, 0, 0)


@pytest.mark.parametrize("n,m,k", [(5, 4, 3), (4, 3, 2), (4, 4, 3)])
def test_alpha_routes_agree(n, m, k):
    for mu in itertools.product(range(4), repeat=k):
        expected = (0,) * (m - k) + alpha_vector(mu, n, m, k) + (0,) * (n - m)
        assert alpha_via_sorting(mu, n, m, k) == expected


def test_alpha_vector_bounds():
    for n, m, k in [(5, 4, 3), (4, 3, 2), (4, 4, 3), (5, 5, 3)]:
        for mu in itertools.product(range(3), repeat=k):
            alpha = alpha_vector(mu, n, m, k)
            assert orbit_bruhat_leq(reverse(mu), alpha)
            assert orbit_bruhat_leq(alpha, reverse(decreasing_rearrangement(mu)))


def test_kernel_lhs_small():
    inst = KernelInstance(2, 2, 2)  # the staircase shape (2, 1)
    assert inst.shape == (2, 1)
    assert kernel_lhs(inst, 0) == SparsePoly.one(2, 2)
    lhs1 = kernel_lhs(inst, 1)
    expected = SparsePoly.one(2, 2)
    for i, j in sorted(cells((2, 1))):
        xexp = [0, 0]
        yexp = [0, 0]
        xexp[i - 1] = 1
        yexp[j - 1] = 1
        expected = expected + SparsePoly.monomial(1, xexp, yexp)
    assert lhs1 == expected


def test_kernel_lhs_single_cell_geometric():
    inst = KernelInstance(1, 1, 1)  # shape (1)
    lhs = kernel_lhs(inst, 2)
    assert lhs.terms == {
        ((0,), (0,)): 1,
        ((1,), (1,)): 1,
        ((2,), (2,)): 1,
    }


def test_kernel_rhs_degree_zero():
    assert kernel_rhs(KernelInstance(4, 3, 2), 0) == SparsePoly.one(2, 3)


def test_kernel_rhs_staircase_term_structure():
    inst = KernelInstance(2, 2, 2)
    d = 2
    expected = SparsePoly.zero(2, 2)
    for size in range(d + 1):
        for mu in compositions_with_sum(size, 2):
            expected = expected + pair_product(
                atom(mu), key_polynomial(reverse(mu))
            )
    assert kernel_rhs(inst, d) == expected


def test_kernel_rhs_rectangle_collapses_to_sorted_index():
    inst = KernelInstance(4, 3, 2)
    d = 3
    expected = SparsePoly.zero(2, 3)
    for size in range(d + 1):
        for mu in compositions_with_sum(size, 2):
            index = (0,) + reverse(decreasing_rearrangement(mu))
            expected = expected + pair_product(atom(mu), key_polynomial(index))
    assert kernel_rhs(inst, d) == expected


def test_verify_expansion_basic():
    report = verify_expansion(KernelInstance(3, 3, 3), 3)
    assert report.equal and report.first_diff is None
    assert "equal" in report.summary()
    assert verify_expansion(KernelInstance(4, 3, 2), 0).equal


def test_verify_expansion_report_on_mismatch():
    lhs = SparsePoly.monomial(1, (1,), (1,))
    rhs = SparsePoly.monomial(2, (1,), (1,)) + SparsePoly.monomial(1, (2,), (2,))
    report = ExpansionReport(1, 1, 1, 2, lhs, rhs, False, ((1,), (1,), 1, 2))
    assert "MISMATCH" in report.summary()
    assert report.to_json()["first_diff"]["lhs_coeff"] == 1


def test_rectangle_matches_classical_cauchy():
    inst = KernelInstance(4, 3, 2)
    d = 4
    lhs = kernel_lhs(inst, d)
    total = SparsePoly.zero(2, 3)
    seen = set()
    for size in range(d + 1):
        for mu in compositions_with_sum(size, 2):
            lam = decreasing_rearrangement(mu)
            if lam in seen:
                continue
            seen.add(lam)
            total = total + pair_product(
                schur_polynomial(lam, 2), schur_polynomial(lam, 3)
            )
    assert lhs == total


def test_conjugation_symmetry():
    for (n, m, k), d in [((5, 4, 3), 2), ((4, 3, 2), 3), ((4, 4, 3), 2)]:
        direct = kernel_rhs(KernelInstance(n, k, m), d)
        swapped = kernel_rhs(KernelInstance(n, m, k), d).swap_alphabets()
        assert direct == swapped
        assert kernel_lhs(KernelInstance(n, k, m), d) == kernel_lhs(
            KernelInstance(n, m, k), d
        ).swap_alphabets()


def test_bijection_level_binning():
    # every cell multiset lands, through the correspondence, in the single
    # term of the expansion indexed by the recording shape
    n, m, k, d = 5, 4, 3, 3
    inst = KernelInstance(n, m, k)
    lam_cells = sorted(cells(inst.shape))
    buckets = {}
    for r in range(d + 1):
        for ms in itertools.combinations_with_replacement(lam_cells, r):
            w = from_multiset(ms, n)
            f, g = phi(w, n)
            assert all(e == 0 for e in g.shape[k:])
            assert all(e == 0 for e in f.shape[m:])
            mu = g.shape[:k]
            mono = pair_product(
                SparsePoly.monomial(1, g.content()[:k]),
                SparsePoly.monomial(1, f.content()[:m]),
            )
            buckets[mu] = buckets.get(mu, SparsePoly.zero(k, m)) + mono
    for size in range(d + 1):
        for mu in compositions_with_sum(size, k):
            expected = pair_product(
                atom(mu),
                key_polynomial((0,) * (m - k) + alpha_vector(mu, n, m, k)),
            )
            assert buckets.get(mu, SparsePoly.zero(k, m)) == expected


def test_entry_restriction_matches_kernel_character():
    # restricting the crystal of the padded reversed index to small entries
    # gives exactly the character appearing in the kernel expansion
    from skyline.crystal import bounded_entry_restriction, demazure_crystal, weight_sum

    for n, m, k in [(5, 4, 3), (4, 3, 2)]:
        for mu in itertools.product(range(3), repeat=k):
            gamma = (0,) * (n - k) + reverse(mu)
            restricted = bounded_entry_restriction(demazure_crystal(gamma, n), m)
            target = key_polynomial(
                (0,) * (m - k) + alpha_vector(mu, n, m, k) + (0,) * (n - m)
            )
            assert weight_sum(restricted, n) == target
