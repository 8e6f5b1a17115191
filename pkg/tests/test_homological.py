import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from auslab.algebra import lower_triangular, prime_field, product, truncated_polynomial
from auslab.homological import (
    MINUS_INFINITY,
    AtLeast,
    ExtDim,
    Finite,
    bass_numbers,
    check_exact,
    check_minimal,
    ext_dim,
    ext_dims_injective,
    ext_dims_projective,
    injective_cogenerator,
    injective_dimension,
    injective_envelope,
    is_injective,
    is_projective,
    join_all,
    minimal_injective_resolution,
    minimal_projective_resolution,
    projective_cover,
    projective_dimension,
    projective_dimension_by_ext,
    resolution_length,
    rfd_profile,
    simple_envelope,
)
from auslab.linalg import rank
from auslab.modules import (
    direct_sum,
    dual,
    hom_dim,
    is_isomorphic,
    is_module_map,
    regular_module,
    simple_modules,
    socle,
    zero_module,
)

from conftest import base_corpus, local2, random_module

ext_values = st.one_of(
    st.just(MINUS_INFINITY),
    st.integers(0, 9).map(Finite),
    st.integers(1, 9).map(AtLeast),
)


# -- ExtDim ---------------------------------------------------------------------


def test_extdim_rendering():
    assert MINUS_INFINITY.render() == "-inf" and MINUS_INFINITY.render(compat=True) == "-1"
    assert Finite(3).render() == "3" and AtLeast(6).render() == ">=6"
    for s in ("-inf", "0", "4", ">=7"):
        assert ExtDim.parse(s).render() == s


def test_minus_infinity_absorbs_shift():
    assert MINUS_INFINITY.plus(1) == MINUS_INFINITY
    assert Finite(2).plus(1) == Finite(3)
    assert AtLeast(4).plus(1) == AtLeast(5)
    assert MINUS_INFINITY.join(MINUS_INFINITY.plus(1)) == MINUS_INFINITY


@settings(max_examples=200)
@given(ext_values, ext_values, ext_values)
def test_join_is_a_semilattice(a, b, c):
    assert a.join(b) == b.join(a)
    assert a.join(a) == a
    assert a.join(b).join(c) == a.join(b.join(c))
    assert a.join(MINUS_INFINITY) == a


@settings(max_examples=200)
@given(ext_values, st.integers(-1, 10))
def test_leq_is_sound(a, n):
    v = a.leq(n)
    if a.is_minus_infinity:
        assert v is True
    elif a.is_finite:
        assert v is (a.value <= n)
    else:
        # censored: only a refutation below the cap is sound
        assert v is (False if n < a.value else None)


@settings(max_examples=200)
@given(ext_values, ext_values)
def test_less_than_three_valued(a, b):
    v = a.less_than(b)
    if a.is_finite and b.is_finite:
        assert v is (a.value < b.value)
    if b.is_minus_infinity:
        assert v is False
    if a.is_minus_infinity and not b.is_minus_infinity:
        assert v is True
    assert a.agrees(a) in (True, None)


def test_join_all_empty_is_minus_infinity():
    assert join_all([]) == MINUS_INFINITY
    assert join_all([Finite(1), Finite(0)]) == Finite(1)


# -- envelopes and covers -------------------------------------------------------------


def test_envelope_examples():
    A = truncated_polynomial(2, 2)
    R = regular_module(A)
    E, emb = injective_envelope(R)
    assert E.mdim == 2 and rank(emb, A.field) == 2
    S = simple_modules(A)[0]
    ES, _ = injective_envelope(S)
    assert ES.mdim == 2 and is_isomorphic(ES, injective_cogenerator(A))
    assert injective_envelope(zero_module(A))[0].mdim == 0


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_envelope_is_injective_and_essential(A):
    rng = np.random.default_rng(11)
    F = A.field
    for M in [regular_module(A)] + simple_modules(A) + [random_module(A, rng) for _ in range(3)]:
        E, emb = injective_envelope(M)
        assert is_module_map(M, E, emb)
        assert rank(emb, F) == M.mdim if M.mdim else E.mdim == 0
        assert is_injective(E)
        # essential: the socle of E already lives in M
        assert socle(E)[0].mdim == socle(M)[0].mdim


def test_cover_examples():
    A = truncated_polynomial(2, 2)
    S = simple_modules(A)[0]
    P, epi = projective_cover(S)
    assert P.mdim == 2 and is_projective(P)
    T = lower_triangular(prime_field(2), 2)
    sizes = sorted(projective_cover(S)[0].mdim for S in simple_modules(T))
    assert sizes == [1, 2]
    R = regular_module(T)
    assert projective_cover(R)[0].mdim == R.mdim


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_cover_is_projective_and_epi(A):
    rng = np.random.default_rng(12)
    F = A.field
    for M in simple_modules(A) + [random_module(A, rng) for _ in range(3)]:
        P, epi = projective_cover(M)
        assert is_module_map(P, M, epi) and is_projective(P)
        assert rank(epi, F) == M.mdim if M.mdim else P.mdim == 0


# -- resolutions and Ext ------------------------------------------------------------


def test_resolution_examples():
    assert minimal_injective_resolution(regular_module(prime_field(2)), 3).dims == [1, 0, 0, 0]
    assert minimal_injective_resolution(regular_module(truncated_polynomial(2, 2)), 3).dims == [2, 0, 0, 0]
    T = lower_triangular(prime_field(2), 2)
    d = minimal_injective_resolution(regular_module(T), 3).dims
    assert d[0] and d[1] and d[2] == 0
    A = truncated_polynomial(2, 2)
    S = simple_modules(A)[0]
    assert minimal_projective_resolution(S, 4).dims == [2] * 5
    P = regular_module(A)
    assert minimal_projective_resolution(P, 2).dims == [2, 0, 0]
    S2 = [S for S in simple_modules(T) if not is_projective(S)][0]
    assert minimal_projective_resolution(S2, 2).dims == [2, 1, 0]


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_resolutions_exact_and_minimal(A):
    rng = np.random.default_rng(13)
    for M in [regular_module(A), injective_cogenerator(A)] + [random_module(A, rng) for _ in range(2)]:
        for res in (minimal_injective_resolution(M, 3), minimal_projective_resolution(M, 3)):
            assert check_exact(res), (A.name, res.direction)
            assert check_minimal(res), (A.name, res.direction)


def test_ext_examples():
    A = truncated_polynomial(2, 2)
    S = simple_modules(A)[0]
    assert ext_dims_projective(S, S, 4) == [1] * 5
    assert ext_dims_injective(S, S, 4) == [1] * 5
    rng = np.random.default_rng(4)
    for B in base_corpus():
        R = regular_module(B)
        N = random_module(B, rng)
        assert ext_dim(R, N, 0) == N.mdim
        D = injective_cogenerator(B)
        M = random_module(B, rng)
        assert ext_dim(M, D, 1) == 0


@pytest.mark.parametrize("A", base_corpus(), ids=lambda A: A.name)
def test_ext_balanced(A):
    """Both resolutions compute the same Ext."""
    rng = np.random.default_rng(14)
    for _ in range(3):
        M, N = random_module(A, rng), random_module(A, rng)
        assert ext_dims_projective(M, N, 2) == ext_dims_injective(M, N, 2)
        assert ext_dim(M, N, 0) == hom_dim(M, N)


# -- dimensions --------------------------------------------------------------------


def test_dimension_examples():
    A = truncated_polynomial(2, 2)
    assert projective_dimension(zero_module(A), 6) == MINUS_INFINITY
    assert projective_dimension(regular_module(A), 6) == Finite(0)
    assert projective_dimension(simple_modules(A)[0], 6) == AtLeast(6)
    assert is_injective(regular_module(A)) and is_projective(regular_module(A))
    S = simple_modules(A)[0]
    assert not is_injective(S) and not is_projective(S)


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_pd_three_ways(A):
    rng = np.random.default_rng(15)
    cap = 4 if A.name == "local2" else 6
    mods = [regular_module(A), injective_cogenerator(A)] + simple_modules(A)
    mods += [simple_envelope(A, k)[0] for k in range(len(simple_modules(A)))]
    mods += [random_module(A, rng) for _ in range(3)]
    for M in mods:
        lit = resolution_length(M, cap)
        assert projective_dimension(M, cap) == lit
        assert projective_dimension_by_ext(M, cap) == lit


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_injective_iff_dual_projective(A):
    rng = np.random.default_rng(16)
    for M in [regular_module(A), injective_cogenerator(A)] + simple_modules(A) + [random_module(A, rng)]:
        assert is_injective(M) == is_projective(dual(M))


def test_injective_dimension_examples():
    T = lower_triangular(prime_field(2), 2)
    assert injective_dimension(regular_module(T), 5) == Finite(1)
    assert injective_dimension(regular_module(truncated_polynomial(3, 2)), 5) == Finite(0)


# -- profiles -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "A,want",
    [
        (prime_field(2), "<0, -inf, -inf, -inf>"),
        (prime_field(5), "<0, -inf, -inf, -inf>"),
        (truncated_polynomial(2, 3), "<0, -inf, -inf, -inf>"),
        (lower_triangular(prime_field(2), 2), "<0, 1, -inf, -inf>"),
        (lower_triangular(prime_field(3), 2), "<0, 1, -inf, -inf>"),
    ],
    ids=lambda x: getattr(x, "name", ""),
)
def test_profile_examples(A, want):
    assert rfd_profile(A, 3, 6).render() == want


@pytest.mark.parametrize("A", base_corpus() + [local2()], ids=lambda A: A.name)
def test_profile_routes_agree(A):
    direct = rfd_profile(A, 3, 6, route="direct")
    bass = rfd_profile(A, 3, 6, route="bass")
    assert direct.entries == bass.entries


def test_bass_numbers_match_resolution_socles():
    for A in base_corpus():
        R = regular_module(A)
        res = minimal_injective_resolution(R, 2)
        for i in range(3):
            b = bass_numbers(R, i)
            dims = sum(b[k] * simple_envelope(A, k)[0].mdim for k in range(len(b)))
            assert dims == res.terms[i].mdim


def test_profile_of_direct_sum_algebra_is_the_join():
    # T_2(F_2) x F_2[x]/(x^2): profiles join entrywise
    A = product(lower_triangular(prime_field(2), 2), truncated_polynomial(2, 2))
    assert rfd_profile(A, 3, 6).render() == "<0, 1, -inf, -inf>"
    M = direct_sum(regular_module(A), injective_cogenerator(A))
    assert projective_dimension(M, 6) == Finite(1)
