from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from fockverma.cocycle import WeightFunctional, hyperelliptic_cocycle, validate_cocycle
from fockverma.fock import (
    ModuleVector,
    annihilate,
    create,
    gram_det,
    gram_matrix,
    is_p_admissible_up_to,
    level_decompose,
    shapovalov,
)
from fockverma.intertwiner import intertwining_check, phi_map, quotient_psi
from fockverma.legendre import legendre_operator
from fockverma.linalg import determinant, is_symmetric, mat_vec
from fockverma.sugawara import apply_L0, apply_Omega, apply_Omega_power

from oracles import sympy_det
from strategies import compatible_tables, nonzero_fractions, small_fractions, vectors

HYP = hyperelliptic_cocycle(1, 12)
positive = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)


@given(vectors(), vectors(), st.integers(1, 4), positive, nonzero_fractions)
def test_contravariance(v, w, k, omega1, c):
    t = hyperelliptic_cocycle(omega1, 12)
    phi = WeightFunctional.simple(c=c)
    assert shapovalov(create(v, k), w, t, phi) == shapovalov(v, annihilate(w, k, 1, t, phi), t, phi)


@given(vectors(), vectors())
def test_symmetry(v, w):
    phi = WeightFunctional.simple()
    assert shapovalov(v, w, HYP, phi) == shapovalov(w, v, HYP, phi)


@given(st.integers(0, 6), st.integers(0, 6), st.data())
def test_weight_preservation(n, m, data):
    assume(n != m)
    v = data.draw(vectors(homogeneous_level=n))
    w = data.draw(vectors(homogeneous_level=m))
    assert shapovalov(v, w, HYP, WeightFunctional.simple(c=3)) == 0


@given(vectors(), vectors(), small_fractions, small_fractions)
def test_bilinearity(v, w, a, b):
    phi = WeightFunctional.simple()
    lhs = shapovalov(v * a + w * b, w, HYP, phi)
    assert lhs == a * shapovalov(v, w, HYP, phi) + b * shapovalov(w, w, HYP, phi)


@given(st.integers(0, 6), positive, nonzero_fractions)
def test_charge_scaling_covariance(n, t, c):
    base = WeightFunctional.simple(c=c)
    scaled = WeightFunctional.simple(c=c * t)
    g1, g2 = gram_matrix(n, HYP, base), gram_matrix(n, HYP, scaled)
    for i, lam in enumerate(g1.basis):
        for j in range(len(g1.basis)):
            assert g2.entries[i][j] == g1.entries[i][j] * t ** lam.length
    assert (gram_det(n, HYP, base) == 0) == (gram_det(n, HYP, scaled) == 0)


@given(vectors(), st.integers(1, 4))
@settings(max_examples=60)
def test_tower_coherence(v, r):
    phi = WeightFunctional.simple()
    iterated = v
    for _ in range(r):
        iterated = apply_Omega(iterated, HYP, phi)
    assert apply_Omega_power(v, r, HYP, phi) == iterated


@given(vectors())
def test_L0_acts_by_level(v):
    phi = WeightFunctional.simple()
    expected = sum((comp * n for n, comp in level_decompose(v).items()), ModuleVector())
    assert apply_L0(v, HYP, phi) == expected


@given(vectors())
def test_intertwining_random(v):
    phi = WeightFunctional.simple()
    assert intertwining_check(v, 1, HYP, phi)
    assert phi_map(apply_Omega(v, HYP, phi)) == legendre_operator(phi_map(v))


@given(st.integers(0, 6), st.data())
def test_psi_grading(n, data):
    v = data.draw(vectors(homogeneous_level=n))
    p = quotient_psi(v)
    assert all(c == 0 for k, c in enumerate(p.coefficients) if k != n)


# --- synthetic multi-sector and banded tables --------------------------------

@given(compatible_tables())
@settings(max_examples=40)
def test_synthetic_tables_validate(table):
    assert validate_cocycle(table) == []


@given(compatible_tables(), st.integers(0, 3), nonzero_fractions)
@settings(max_examples=40)
def test_synthetic_gram_symmetric(table, n, c):
    phi = WeightFunctional.simple(c=c, sectors=table.sector_count)
    g = gram_matrix(n, table, phi)
    assert is_symmetric(g.entries)
    assert determinant(g.entries) == sympy_det(g.entries)


@given(compatible_tables(max_band=0), st.integers(0, 3), st.integers(0, 3), st.data())
@settings(max_examples=40)
def test_synthetic_weight_preservation(table, n, m, data):
    assume(n != m)
    phi = WeightFunctional.simple(sectors=table.sector_count)
    v = data.draw(vectors(sectors=table.sector_count, homogeneous_level=n))
    w = data.draw(vectors(sectors=table.sector_count, homogeneous_level=m))
    assert shapovalov(v, w, table, phi) == 0


@given(compatible_tables(), st.data())
@settings(max_examples=40)
def test_synthetic_contravariance(table, data):
    s = table.sector_count
    phi = WeightFunctional.simple(c=2, sectors=s)
    v = data.draw(vectors(max_level=2, sectors=s))
    w = data.draw(vectors(max_level=3, sectors=s))
    k = data.draw(st.integers(1, 2))
    j = data.draw(st.integers(1, s))
    assert shapovalov(create(v, k, j), w, table, phi) == \
        shapovalov(v, annihilate(w, k, j, table, phi), table, phi)


@given(compatible_tables(max_sectors=2))
@settings(max_examples=40)
def test_determinant_witness(table):
    phi = WeightFunctional.simple(sectors=table.sector_count)
    res = is_p_admissible_up_to(3, table, phi)
    dets = [sympy_det(gram_matrix(n, table, phi).entries) for n in range(1, 4)]
    if all(dets):
        assert res.admissible
    else:
        first = next(n for n, d in enumerate(dets, start=1) if d == 0)
        assert res.degenerate_level == first
        g = gram_matrix(first, table, phi)
        kernel = [res.kernel_vector.coefficient(lam) for lam in g.basis]
        assert any(kernel) and mat_vec(g.entries, kernel) == [0] * len(kernel)
