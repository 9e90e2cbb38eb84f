"""The discriminant/seminvariant pair and the perfect-square witnesses."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactgeom.binform import BinaryForm, sylvester_resultant
from exactgeom.domains import QQ, PrimeField
from exactgeom.multipoly import MultiPoly
from exactgeom.quartic import (
    BOUNDARY_NON_SQUARE,
    SPURIOUS_NON_SQUARE,
    QuarticCoeffs,
    closure_square_witness,
    disc_delta,
    fuzz_square_criterion,
    is_square_over_closure,
    perfect_square_witness,
    sem_d,
    square_coefficients,
)

F = PrimeField(10007)


def qq(*values):
    return QuarticCoeffs(*(Fraction(v) for v in values))


def test_disc_delta_values():
    # (u^2 + v^2)^2 is a square: the three surviving terms cancel (256 - 512 + 256)
    assert disc_delta(qq(1, 0, 2, 0, 1)) == 0
    # u^4 + v^4 has distinct roots; only the 256 A^3 E^3 term survives
    assert disc_delta(qq(1, 0, 0, 0, 1)) == 256
    # u^2 (u^2 - v^2) has a repeated root
    assert disc_delta(qq(1, 0, -1, 0, 0)) == 0


def test_sem_d_values():
    assert sem_d(qq(1, 0, 2, 0, 1)) == 0  # 64 - 64
    assert sem_d(qq(1, 0, -1, 0, 0)) == -16  # only -16 A^2 C^2 survives
    # the section fiber of the bitangent family, as polynomials in alpha
    (alpha,) = MultiPoly.gens(QQ, ("alpha",))
    one = MultiPoly.constant(QQ, ("alpha",), 1)
    value = sem_d(QuarticCoeffs(one, -2 * one, one - alpha, 2 * alpha, -alpha))
    assert value == -16 * alpha**2 - 32 * alpha


def test_witness_examples():
    # u^2 (u - v)^2 = (u^2 - u v)^2
    assert perfect_square_witness(qq(1, -2, 1, 0, 0), QQ) == (1, -1, 0)
    assert perfect_square_witness(qq(1, 0, 0, 0, 1), QQ) is None
    # v^2 (u^2 + v^2): two distinct roots away from the double one
    assert perfect_square_witness(qq(0, 0, 1, 0, 1), QQ) is None


def test_witness_requires_odd_characteristic():
    class Char2:
        char = 2

    with pytest.raises(ValueError):
        perfect_square_witness(qq(1, 0, 0, 0, 0), Char2())


def test_closure_witness_adjoins_square_root():
    # pick a non-square leading coefficient: (s u^2)^2 has A = s^2... instead
    # take A itself a non-square so sqrt(A) needs the quadratic extension
    a = next(F.elem(n) for n in range(2, 50) if F.sqrt(F.elem(n)) is None)
    coeffs = QuarticCoeffs(a, F.zero(), F.zero(), F.zero(), F.zero())
    witness = closure_square_witness(coeffs, F)
    assert witness is not None
    assert witness.field is not F
    assert witness.reproduces(coeffs)


def test_closure_witness_in_field():
    coeffs = QuarticCoeffs(*(F.elem(c) for c in (1, -2, 1, 0, 0)))
    witness = closure_square_witness(coeffs, F)
    assert witness is not None and witness.field is F
    assert witness.reproduces(coeffs)


def test_boundary_case_joint_vanishing_without_square():
    coeffs = qq(*BOUNDARY_NON_SQUARE)
    assert disc_delta(coeffs) == 0 and sem_d(coeffs) == 0
    assert not is_square_over_closure(coeffs, QQ)
    assert perfect_square_witness(coeffs, QQ) is None


def test_nonsquare_branch_with_nonzero_lead():
    # a point of the second component of the joint vanishing locus:
    # u^4 + 6u^2 + 16u + 9 = (u + 1)^2 (u^2 - 2u + 9) has only one double root
    coeffs = qq(*SPURIOUS_NON_SQUARE)
    assert disc_delta(coeffs) == 0 and sem_d(coeffs) == 0
    assert coeffs.A != 0
    assert not is_square_over_closure(coeffs, QQ)
    assert perfect_square_witness(coeffs, QQ) is None
    over_f = QuarticCoeffs(*(F.elem(int(c)) for c in SPURIOUS_NON_SQUARE))
    assert closure_square_witness(over_f, F) is None


small_fracs = st.fractions(
    min_value=-20, max_value=20, max_denominator=6
)


@settings(max_examples=150)
@given(small_fracs, small_fracs, small_fracs)
def test_squares_vanish_rationals(q0, q1, q2):
    coeffs = square_coefficients(q0, q1, q2)
    assert disc_delta(coeffs) == 0
    assert sem_d(coeffs) == 0
    assert is_square_over_closure(coeffs, QQ) or not any(coeffs)


@settings(max_examples=150)
@given(st.integers(0, 10006), st.integers(0, 10006), st.integers(0, 10006))
def test_squares_vanish_prime_field(a, b, c):
    coeffs = square_coefficients(F.elem(a), F.elem(b), F.elem(c))
    assert not disc_delta(coeffs)
    assert not sem_d(coeffs)


def _shear(coeffs: QuarticCoeffs, lam: Fraction) -> QuarticCoeffs:
    # u -> u + lam v expanded by the binomial theorem
    A, B, C, D, E = coeffs
    return QuarticCoeffs(
        A,
        4 * lam * A + B,
        6 * lam**2 * A + 3 * lam * B + C,
        4 * lam**3 * A + 3 * lam**2 * B + 2 * lam * C + D,
        lam**4 * A + lam**3 * B + lam**2 * C + lam * D + E,
    )


def test_shear_covariance_smoke():
    rng = random.Random(23)
    for _ in range(30):
        q0, q1, q2 = (Fraction(rng.randrange(-9, 10)) for _ in range(3))
        lam = Fraction(rng.randrange(-5, 6))
        square = square_coefficients(q0, q1, q2)
        sheared = _shear(square, lam)
        # the sheared quartic is the square of the sheared quadratic
        assert sheared == square_coefficients(q0, 2 * lam * q0 + q1, lam**2 * q0 + lam * q1 + q2)
        assert disc_delta(sheared) == 0 and sem_d(sheared) == 0
        assert is_square_over_closure(sheared, QQ) or not any(square)


def _delta_via_resultant(coeffs: QuarticCoeffs) -> Fraction:
    """Independent route: Res(f, df/du) / A via the Sylvester determinant."""
    u, v = MultiPoly.gens(QQ, ("u", "v"))
    A, B, C, D, E = coeffs
    f = A * u**4 + B * u**3 * v + C * u**2 * v**2 + D * u * v**3 + E * v**4
    res = sylvester_resultant(BinaryForm(f, ("u", "v")), BinaryForm(f.partial_derivative("u"), ("u", "v")))
    return res.constant_value() / A


def test_delta_matches_resultant_route():
    rng = random.Random(29)
    for _ in range(60):
        coeffs = qq(*(rng.randrange(-9, 10) for _ in range(5)))
        if not coeffs.A:
            continue
        assert disc_delta(coeffs) == _delta_via_resultant(coeffs)


def _normalized_square_table(K):
    """All squares of quadratics over GF(169), scaled so the first nonzero
    coefficient is 1.  A quartic over GF(13) is a square over the closure iff
    it is one over GF(169), because the square root of a quartic is unique up
    to sign and so has coefficients in a quadratic extension."""
    one, zero = K.one(), K.zero()
    elements = list(K._element_iter())
    candidates = [(one, a, b) for a in elements for b in elements]
    candidates += [(zero, one, a) for a in elements]
    candidates.append((zero, zero, one))
    table = set()
    for q in candidates:
        sq = square_coefficients(*q)
        first = next(c for c in sq if c)
        table.add(tuple((c / first).value for c in sq))
    return table


def test_square_predicate_against_exhaustive_oracle():
    from exactgeom.domains import ExtensionField

    base = PrimeField(13)
    K = ExtensionField(base, [-2 % 13, 0, 1], name="z")  # 2 is a non-square mod 13
    table = _normalized_square_table(K)

    def oracle(coeffs):
        lifted = [K.from_base(c) for c in coeffs]
        first = next((c for c in lifted if c), None)
        if first is None:
            return True  # the zero quartic is 0^2
        return tuple((c / first).value for c in lifted) in table

    rng = random.Random(37)
    cases = [
        (0, 0, 1, 0, 1),  # boundary: joint vanishing, not a square
        (1, 0, 0, 0, 1),
        (1, -2, 1, 0, 0),
        (0, 0, 1, 2, 1),  # v^2 (u + v)^2
        (0, 0, 0, 0, 3),  # 3 v^4: square over the closure only
        (2, 0, 0, 0, 0),  # 2 u^4: likewise (2 is a non-square mod 13)
    ]
    cases += [tuple(rng.randrange(13) for _ in range(5)) for _ in range(40)]
    cases += [
        (1, rng.randrange(13), rng.randrange(13), 0, 0) for _ in range(10)
    ]  # more degenerate shapes
    for raw in cases:
        coeffs = QuarticCoeffs(*(base.elem(c) for c in raw))
        assert is_square_over_closure(coeffs, base) == oracle(coeffs), raw


def test_fuzz_square_criterion_smoke():
    report = fuzz_square_criterion(F, 400, random.Random("unit:gf"), 200)
    assert not report["equivalence_discrepancies"]
    assert not report["square_failures"]
    assert report["boundary_joint_vanishing_without_square"]
    report_q = fuzz_square_criterion(QQ, 120, random.Random("unit:qq"), 80)
    assert not report_q["equivalence_discrepancies"]
    assert not report_q["square_failures"]
    assert report_q["boundary_joint_vanishing_without_square"]
