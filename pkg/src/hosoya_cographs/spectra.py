"""Exact characteristic polynomials, integer-root extraction, and closed-form spectra.

Everything here is integer arithmetic: characteristic polynomials are computed
by the Faddeev-LeVerrier trace iteration (every internal division is exact and
asserted), ranks of root multisets come from divisor search on the constant
term, and distinct-root counts come from the squarefree part via a primitive
pseudo-remainder gcd.  No floating point anywhere.

Characteristic polynomials are monic det(xI - M); closed-form predictions
carry sign prefactors in some sources, so all comparisons normalize to a
monic polynomial first (the leading coefficient is always +-1 here).
"""

from __future__ import annotations

import operator
from functools import lru_cache
from math import isqrt
from typing import Iterable, NamedTuple, Sequence

from .graphs import FamilySpec, Graph
from .matrices import ExactMatrix


class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i.

    Trailing zeros are stripped; the zero polynomial has an empty coefficient
    tuple and degree -1.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, root_mults: Sequence[tuple[int, int]]) -> "IntPolynomial":
        """Monic product of (x - root)^mult over the given (root, mult) pairs."""
        p = cls((1,))
        for root, mult in root_mults:
            for _ in range(mult):
                p = p * cls((-root, 1))
        return p

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-v for v in self.coeffs])

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * v for v in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- calculus and division ---------------------------------------------------

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_linear(self, c0: int, c1: int) -> "IntPolynomial":
        """Substitute x := c0 + c1*x."""
        lin = IntPolynomial((c0, c1))
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def divide_exact(self, d: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / d, raising ValueError unless the division is exact over Z."""
        if d.is_zero:
            raise ValueError("division by the zero polynomial")
        if self.is_zero:
            return IntPolynomial()
        qdeg = self.degree - d.degree
        if qdeg < 0:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        quot = [0] * (qdeg + 1)
        for i in range(qdeg, -1, -1):
            c = rem[i + d.degree]
            if c == 0:
                continue
            q, r = divmod(c, d.lead)
            if r != 0:
                raise ValueError("inexact polynomial division")
            quot[i] = q
            for j, dc in enumerate(d.coeffs):
                rem[i + j] -= q * dc
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(quot)

    def divide_out_root(self, r: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (x - r); returns (quotient, remainder value)."""
        if self.is_zero:
            raise ValueError("cannot divide the zero polynomial")
        acc = 0
        out = []
        for c in reversed(self.coeffs):
            out.append(acc)
            acc = acc * r + c
        out = out[1:]
        out.reverse()
        return IntPolynomial(out), acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content and normalize the leading coefficient positive."""
        if self.is_zero:
            return self
        g = self.content()
        out = [c // g for c in self.coeffs]
        if out[-1] < 0:
            out = [-c for c in out]
        return IntPolynomial(out)

    def monic_normalized(self) -> "IntPolynomial":
        """Divide by the leading coefficient, which must be +-1."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic normalization")
        if self.lead == 1:
            return self
        if self.lead == -1:
            return -self
        raise ValueError(f"leading coefficient {self.lead} is not a unit")

    def serialize(self) -> list[str]:
        """Coefficients low-to-high as exact decimal strings."""
        return [str(c) for c in self.coeffs]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


X = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


# -- characteristic polynomials ----------------------------------------------


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    mul = operator.mul
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


@lru_cache(maxsize=None)
def char_poly(m: ExactMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M) of an integer matrix.

    Uses the Faddeev-LeVerrier trace iteration: O(n^4) integer work, each
    division exact and asserted, with the final Cayley-Hamilton residual
    checked to vanish.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.nrows
    a = [list(r) for r in m.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = _matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        assert rem == 0, "trace iteration hit a non-exact division"
        coeffs[n - k] = q
        if k < n:
            for i in range(n):
                am[i][i] += q
            mk = am
        else:
            assert all(
                am[i][j] + (q if i == j else 0) == 0 for i in range(n) for j in range(n)
            ), "Cayley-Hamilton residual did not vanish"
    return IntPolynomial(coeffs)


def char_poly_cofactor(m: ExactMatrix) -> IntPolynomial:
    """Reference characteristic polynomial via cofactor expansion of det(xI - M).

    Exponential-time cross-check, intended for small matrices only.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.nrows
    entries = [
        [
            IntPolynomial((-m.rows[i][j], 1)) if i == j else IntPolynomial((-m.rows[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]

    @lru_cache(maxsize=None)
    def minor(cols: int) -> IntPolynomial:
        if cols == 0:
            return ONE
        row = n - cols.bit_count()
        acc = IntPolynomial()
        sign = 1
        rest = cols
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            term = entries[row][j] * minor(cols ^ low)
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
            rest ^= low
        return acc

    result = minor((1 << n) - 1)
    minor.cache_clear()
    return result


def laplacian_matrix(g: Graph) -> ExactMatrix:
    """Degree diagonal minus adjacency; defined for loopless graphs only."""
    if g.loops:
        raise ValueError("the Laplacian is defined here for loopless graphs only")
    rows = []
    for v in range(g.n):
        row = [-(g.adj[v] >> u & 1) for u in range(g.n)]
        row[v] = g.degree(v + 1)
        rows.append(row)
    return ExactMatrix(rows)


# -- integer roots and spectral statistics ------------------------------------


class RootExtraction(NamedTuple):
    """Integer roots with multiplicity plus the root-free remaining factor."""

    integer_roots: tuple[int, ...]
    remainder: IntPolynomial


def _divisors(m: int) -> list[int]:
    assert m >= 1
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i != m // i:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def _iroot(v: int, k: int) -> int:
    """Floor of the k-th root of v >= 0, exact integer arithmetic."""
    if v < 2 or k == 1:
        return v
    hi = 1 << ((v.bit_length() + k - 1) // k + 1)
    lo = 0
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= v:
            lo = mid
        else:
            hi = mid
    return lo


def _root_bound(p: IntPolynomial) -> int:
    """Lagrange-style upper bound on |root| for any root of p (|lead| >= 1)."""
    n = p.degree
    best = 0
    for k in range(1, n + 1):
        c = abs(p.coeffs[n - k])
        if c:
            best = max(best, _iroot(c, k) + 1)
    return 2 * best


def _root_candidates(c0: int, bound: int) -> list[int]:
    """Positive divisors of c0 that are <= bound, ascending."""
    m = abs(c0)
    out = []
    i = 1
    top = min(isqrt(m), bound)
    while i <= top:
        if m % i == 0:
            out.append(i)
            cofactor = m // i
            if cofactor != i and cofactor <= bound:
                out.append(cofactor)
        i += 1
    out.sort()
    return out


def extract_integer_roots(p: IntPolynomial) -> RootExtraction:
    """Strip all integer roots (with multiplicity) from a nonzero polynomial.

    Zero roots are stripped first; the remaining candidates are the divisors
    of the constant term, tried with both signs.  Candidates are capped by an
    exact root-size bound, which keeps the divisor search feasible when the
    constant term is astronomically large (Laplacian spectra).  The remainder
    is certified free of integer roots.
    """
    if p.is_zero:
        raise ValueError("cannot extract roots of the zero polynomial")
    roots = []
    q = p
    while q.degree > 0 and q.coeffs[0] == 0:
        q = IntPolynomial(q.coeffs[1:])
        roots.append(0)
    if q.degree > 0:
        for d in _root_candidates(q.coeffs[0], _root_bound(q)):
            for cand in (d, -d):
                while q.degree > 0:
                    quot, rem = q.divide_out_root(cand)
                    if rem != 0:
                        break
                    q = quot
                    roots.append(cand)
                if q.degree == 0:
                    break
            if q.degree == 0:
                break
    return RootExtraction(tuple(sorted(roots)), q)


def is_integral(p: IntPolynomial) -> bool:
    """True when the polynomial splits completely into integer linear factors."""
    return extract_integer_roots(p).remainder.degree == 0


def distinct_root_count(p: IntPolynomial) -> int:
    """Number of distinct complex roots: the degree of the squarefree part."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no root count")
    if p.degree == 0:
        return 0
    return p.degree - _poly_gcd(p, p.derivative()).degree


def energy_integral(p: IntPolynomial) -> int:
    """Sum of absolute root values for a fully integral spectrum."""
    extraction = extract_integer_roots(p)
    if extraction.remainder.degree != 0:
        raise ValueError("energy is only computed for fully integral spectra")
    return sum(abs(r) for r in extraction.integer_roots)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    lead = b.lead
    rem = a
    while not rem.is_zero and rem.degree >= b.degree:
        shift = rem.degree - b.degree
        rem = rem * lead - IntPolynomial.monomial(shift, rem.lead) * b
    return rem


def _poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z (monomial content handled exactly)."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    return a


# -- join formulas --------------------------------------------------------------


def join_char_poly(
    p_g1: IntPolynomial,
    p_g2: IntPolynomial,
    p_g1_comp: IntPolynomial,
    p_g2_comp: IntPolynomial,
    n1: int,
    n2: int,
) -> IntPolynomial:
    """Characteristic polynomial of a join from the parts and their complements.

    Three-term combination with the complement polynomials evaluated at
    (-x - 1) and signs (-1)^n2, (-1)^n1, -(-1)^(n1+n2); monic-normalized.
    """
    for poly, size in ((p_g1, n1), (p_g2, n2), (p_g1_comp, n1), (p_g2_comp, n2)):
        if poly.degree != size:
            raise ValueError(f"polynomial degree {poly.degree} does not match size {size}")
    a1 = p_g1_comp.compose_linear(-1, -1)
    a2 = p_g2_comp.compose_linear(-1, -1)
    s1 = (-1) ** n2
    s2 = (-1) ** n1
    s3 = (-1) ** (n1 + n2)
    return (s1 * (p_g1 * a2) + s2 * (p_g2 * a1) - s3 * (a1 * a2)).monic_normalized()


def regular_join_char_poly(
    p1: IntPolynomial, p2: IntPolynomial, r1: int, r2: int, n1: int, n2: int
) -> IntPolynomial:
    """Join characteristic polynomial for regular parts.

    p1*p2 / ((x - r1)(x - r2)) * ((x - r1)(x - r2) - n1*n2), all divisions exact.
    """
    q1, rem1 = p1.divide_out_root(r1)
    q2, rem2 = p2.divide_out_root(r2)
    if rem1 != 0 or rem2 != 0:
        raise ValueError("the stated regularity eigenvalue does not divide its polynomial")
    core = IntPolynomial((r1 * r2 - n1 * n2, -(r1 + r2), 1))
    return (q1 * q2 * core).monic_normalized()


def join_char_poly_from_blocks(a1: ExactMatrix, a2: ExactMatrix) -> IntPolynomial:
    """Join characteristic polynomial straight from the two adjacency blocks.

    Valid for 0/1 symmetric blocks with arbitrary diagonals (loops allowed).
    Uses the all-ones complements J - A1 and J - A2 evaluated at -x; the
    result equals the characteristic polynomial of the block matrix
    [[A1, J], [J, A2]].
    """
    if not a1.is_square or not a2.is_square:
        raise ValueError("adjacency blocks must be square")
    m, n = a1.nrows, a2.nrows
    t1 = ExactMatrix([[1 - v for v in row] for row in a1.rows])
    t2 = ExactMatrix([[1 - v for v in row] for row in a2.rows])
    p1 = char_poly(a1)
    p2 = char_poly(a2)
    q1 = char_poly(t1).compose_linear(0, -1)
    q2 = char_poly(t2).compose_linear(0, -1)
    s1 = (-1) ** m
    s2 = (-1) ** n
    s3 = (-1) ** (m + n)
    return (s1 * (q1 * p2) + s2 * (p1 * q2) - s3 * (q1 * q2)).monic_normalized()


# -- closed forms -----------------------------------------------------------------


def complete_char_poly(n: int) -> IntPolynomial:
    """(x - (n-1))(x + 1)^(n-1), the spectrum of a complete graph."""
    _check_positive(n=n)
    return IntPolynomial.from_roots([(n - 1, 1), (-1, n - 1)])


def complete_bipartite_char_poly(m: int, n: int) -> IntPolynomial:
    """x^(m+n-2) (x^2 - mn)."""
    _check_positive(m=m, n=n)
    return IntPolynomial.monomial(m + n - 2) * IntPolynomial((-m * n, 0, 1))


def empty_char_poly(n: int) -> IntPolynomial:
    """x^n."""
    _check_positive(n=n)
    return IntPolynomial.monomial(n)


def two_cliques_char_poly(m: int, n: int) -> IntPolynomial:
    """(x - (m-1))(x - (n-1))(x + 1)^(m+n-2), the union of two complete graphs."""
    _check_positive(m=m, n=n)
    return IntPolynomial.from_roots([(m - 1, 1), (n - 1, 1), (-1, m + n - 2)])


def _check_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def _join_closed_form(n: int, m: int, r: int) -> IntPolynomial:
    """Monic spectrum of (K_n | K_m) joined to an empty graph on r vertices."""
    cubic = IntPolynomial(
        (
            -((m + n) * r - 2 * m * n * r),
            -((m + n) * (r + 1) - m * n - 1),
            -(m + n - 2),
            1,
        )
    )
    p = IntPolynomial.from_roots([(0, r - 1), (-1, m + n - 2)]) * cubic
    if n == m:
        factored = IntPolynomial.from_roots([(0, r - 1), (-1, 2 * (n - 1)), (n - 1, 1)])
        factored = factored * IntPolynomial((-2 * n * r, -(n - 1), 1))
        assert p == factored
    return p


def closed_form_poly(spec: FamilySpec, matrix: str = "adjacency") -> IntPolynomial:
    """The predicted characteristic polynomial for a family member, monic.

    matrix selects "adjacency" or "laplacian"; the Laplacian closed form
    exists only for the loopless triangle family.  For sizes with t = 1 the
    degenerate displayed forms coincide with the general ones (asserted).
    """
    if matrix not in ("adjacency", "laplacian"):
        raise ValueError(f"unknown matrix selector {matrix!r}")
    kind = spec.kind
    if matrix == "laplacian":
        if kind != "noloops":
            raise ValueError("closed Laplacian forms exist only for the loopless family")
        t, residue = _family_params(spec)
        if residue == 0:
            return IntPolynomial.from_roots([(0, 1), (t, 1), (3 * t, 1), (2 * t, 3 * (t - 1))])
        if residue == 1:
            return IntPolynomial.from_roots(
                [(0, 1), (t + 1, 1), (3 * t + 1, 1), (2 * t, t), (2 * t + 1, 2 * (t - 1))]
            )
        return IntPolynomial.from_roots(
            [(0, 1), (t + 1, 1), (3 * t + 2, 1), (2 * (t + 1), t), (2 * t + 1, 2 * t - 1)]
        )
    if kind == "join":
        return _join_closed_form(spec.n, spec.m, spec.r)
    t, residue = _family_params(spec)
    w = spec.w
    if kind == "noloops":
        if residue == 0:
            p = IntPolynomial.from_roots([(0, t - 1), (-1, 2 * (t - 1)), (t - 1, 1)])
            p = p * IntPolynomial((-2 * t * t, -(t - 1), 1))
            if t == 1:
                assert p == X * IntPolynomial((-2, 0, 1))
            return p
        if residue == 1:
            p = IntPolynomial.from_roots(
                [(0, t), (2 * t, 1), (t - 1, 1), (-t - 1, 1), (-1, 2 * (t - 1))]
            )
            if t == 1:
                assert p == IntPolynomial.from_roots([(0, 2), (-2, 1), (2, 1)])
            return p
        cubic = IntPolynomial(
            (
                (2 * t * t - 1) * (t + 1),
                -(t * t + 4 * t + 1),
                1 - 2 * t,
                1,
            )
        )
        p = IntPolynomial.from_roots([(0, t), (-1, 2 * t - 1)]) * cubic
        if t == 1:
            assert p == X * IntPolynomial((1, 1)) * IntPolynomial((2, -6, -1, 1))
        return p
    if kind == "loops":
        if residue == 0:
            core = IntPolynomial((-t * t, 0, 1))
            return IntPolynomial.from_roots([(0, 3 * (t - 1)), (2 * t, 1)]) * core
        if residue == 1:
            core = IntPolynomial((-2 * t * (t + 1), -t, 1))
            return IntPolynomial.from_roots([(0, 3 * t - 2), (t, 1)]) * core
        cubic = IntPolynomial(
            (2 * t * (t + 1) ** 2, -((t + 1) ** 2), -(2 * t + 1), 1)
        )
        return IntPolynomial.monomial(3 * t - 1) * cubic
    if kind == "complement":
        if residue == 0:
            p = IntPolynomial.from_roots([(0, 2 * (t - 1)), (t - 1, 1), (-1, t - 1)])
            return p * IntPolynomial((-t * t, 0, 1))
        if residue == 1:
            return IntPolynomial.from_roots([(0, 2 * (t - 1)), (t, 2), (-t, 1), (-1, t)])
        p = IntPolynomial.from_roots([(0, 2 * t - 1), (t, 1), (-1, t)])
        return p * IntPolynomial((-t * (t + 1), 0, 1))
    if kind == "theta":
        return IntPolynomial.from_roots([(0, w - 1), (2 * t + residue, 1)])
    if kind == "theta-complement":
        rho = w - t
        p = IntPolynomial.from_roots([(0, rho - 1), (-1, t - 1)])
        return p * IntPolynomial((-t * rho, -(t - 1), 1))
    raise ValueError(f"no closed form for kind {kind!r}")


def _family_params(spec: FamilySpec) -> tuple[int, int]:
    if spec.w < 3:
        raise ValueError(f"family spectra need w >= 3, got {spec.w}")
    return spec.t, spec.residue


# -- integrality criteria -----------------------------------------------------------


class IntegralityWitness(NamedTuple):
    """Positive integers with p*q = 2nr and p - q = n - 1."""

    p: int
    q: int


def integrality_witness(n: int, r: int) -> IntegralityWitness | None:
    """Witness (p, q) that the two-equal-cliques join spectrum is integral, if any.

    The witness exists exactly when (n-1)^2 + 8nr is a perfect square; both
    routes (divisor search and square test) are evaluated and must agree.
    """
    _check_positive(n=n, r=r)
    target = 2 * n * r
    found = None
    for q in _divisors(target):
        p = q + n - 1
        if p * q == target:
            found = IntegralityWitness(p, q)
            break
    disc = (n - 1) ** 2 + 8 * n * r
    s = isqrt(disc)
    assert (found is not None) == (s * s == disc), "divisor search and square test disagree"
    if found is not None:
        assert found.p * found.q == target and found.p - found.q == n - 1
    return found


def perfect_square_criterion(r1: int, r2: int, n1: int, n2: int) -> bool:
    """Exact square test of (r1 - r2)^2 + 4 n1 n2."""
    _check_positive(n1=n1, n2=n2)
    v = (r1 - r2) ** 2 + 4 * n1 * n2
    s = isqrt(v)
    return s * s == v


def obstruction_polynomials(t: int) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial]:
    """The four polynomials certifying non-integral spectra; none has integer roots.

    p1 = x^2 + (1-t)x - 2t^2
    p2 = x^3 + (1-2t)x^2 - (t^2+4t+1)x + (2t^2-1)(t+1)
    p3 = x^2 - tx - 2t(t+1)
    p4 = x^3 - (2t+1)x^2 - (t+1)^2 x + 2t(t+1)^2
    """
    _check_positive(t=t)
    p1 = IntPolynomial((-2 * t * t, 1 - t, 1))
    p2 = IntPolynomial(((2 * t * t - 1) * (t + 1), -(t * t + 4 * t + 1), 1 - 2 * t, 1))
    p3 = IntPolynomial((-2 * t * (t + 1), -t, 1))
    p4 = IntPolynomial((2 * t * (t + 1) ** 2, -((t + 1) ** 2), -(2 * t + 1), 1))
    return p1, p2, p3, p4
