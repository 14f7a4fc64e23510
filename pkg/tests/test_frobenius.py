import pytest

from hecnum import (
    CurveParams,
    Divisible,
    FieldTooLarge,
    GenusZero,
    analyze,
    build_field,
    genus,
    multiplicative_order,
    point_count,
    trace,
)

# Number of points over F_{53^t} of y^13 = x^2 + 44x + 23, t = 1..13
POINTS_53 = [
    81, 2603, 149139, 7895683, 418126881, 22164362483, 1174708903995,
    62259735011555, 3299763597822513, 174887472456640063,
    9269035932800128137, 491258904185947375819, 26036721926414947795674,
]


def curve_53():
    F = build_field(53)
    return CurveParams(13, F, F.scalar(44), F.scalar(23))


def test_multiplicative_order_values():
    assert multiplicative_order(53, 13) == 1
    assert multiplicative_order(11, 199) == 22
    assert multiplicative_order(25, 31) == 3
    with pytest.raises(Divisible):
        multiplicative_order(26, 13)


def test_genus_values():
    assert genus(curve_53()) == 6
    F = build_field(31)
    assert genus(CurveParams(5, F, F.scalar(2), F.scalar(1))) == 0  # (T+1)^2
    F83 = build_field(83)
    assert genus(CurveParams(41, F83, F83.scalar(23), F83.scalar(13))) == 20


def test_divisible_curve_rejected():
    F = build_field(13)
    with pytest.raises(Divisible):
        CurveParams(13, F, F.scalar(1), F.scalar(1))


def test_analyze_profile_53():
    curve = curve_53()
    prof = analyze(curve, curve.base_field.scalar(2))
    assert (prof.m, prof.n, prof.kappa_square) == (1, 4, True)
    assert prof.S_list == (27, -207, 261, 5201, -68613, 1353)


def test_analyze_profile_83():
    F = build_field(83)
    curve = CurveParams(41, F, F.scalar(23), F.scalar(13))
    prof = analyze(curve, F.scalar(5))
    assert (prof.m, prof.n, prof.kappa_square) == (1, 12, False)
    assert prof.S(1) == -83


def test_analyze_profile_extension_base():
    F25 = build_field(5, 2)
    curve = CurveParams(31, F25, F25.exp(14), F25.exp(17))
    prof = analyze(curve)
    assert (prof.m, prof.n, prof.kappa_square) == (3, 31, False)
    assert prof.S(3) == -714
    assert prof.S(6) == -69966
    assert all(prof.S(t) == 0 for t in (1, 2, 4, 5, 7, 8))


def test_trace_values():
    curve = curve_53()
    prof = analyze(curve, curve.base_field.scalar(2))
    expected = [-27, 207, -261, -5201, 68613, -1353, 2235843, -44600193,
                -6020379, -2091127013, -3427936539, 70778778823,
                -808461599700]
    assert [trace(prof, curve, t) for t in range(1, 14)] == expected


def test_trace_zero_off_the_order():
    F7 = build_field(7)
    curve = CurveParams(5, F7, F7.scalar(1), F7.scalar(3))
    prof = analyze(curve)
    assert prof.m == 4
    assert trace(prof, curve, 3) == 0
    assert point_count(prof, curve, 3) == 7**3 + 1


def test_point_counts_match_table():
    curve = curve_53()
    prof = analyze(curve, curve.base_field.scalar(2))
    assert [point_count(prof, curve, t) for t in range(1, 14)] == POINTS_53


def test_genus_zero_rejected():
    F = build_field(31)
    flat = CurveParams(5, F, F.scalar(2), F.scalar(1))
    with pytest.raises(GenusZero):
        analyze(flat)


def test_hasse_bound():
    import math

    for q, ell in ((31, 5), (23, 11), (29, 7), (53, 13)):
        F = build_field(q)
        for code in range(1, q, 7):
            curve = CurveParams(ell, F, F.scalar(0), F.from_code(code))
            if curve.genus == 0:
                continue
            prof = analyze(curve)
            g = curve.genus
            for t in range(1, g + 1):
                assert abs(trace(prof, curve, t)) <= 2 * g * math.isqrt(q**t) + 2 * g


def test_trace_independent_of_n_at_ell_dividing_r():
    from hecnum import frobenius_shift, jacobi_sum, signed_power

    F31 = build_field(31)
    J = jacobi_sum(F31, 5, F31.scalar(3))
    P5 = signed_power(J, 5)
    values = {frobenius_shift(P5, 5, n) for n in range(1, 6)}
    assert values == {9196}


def test_char_base_invariance_exhaustive_f31():
    F31 = build_field(31)
    curve = CurveParams(5, F31, F31.scalar(1), F31.scalar(3))
    reference = None
    for code in range(1, 31):
        base = F31.from_code(code)
        if F31.dlog(base) % 5 == 0:
            continue
        prof = analyze(curve, base)
        values = tuple(trace(prof, curve, t) for t in range(1, 6))
        if reference is None:
            reference = values
        assert values == reference


def test_lazy_profile_never_builds_unreachable_field():
    # m = 5 and q^m is far beyond the cap, but any t not divisible by 5
    # stays on the zero branch
    F49 = build_field(7, 2)
    curve = CurveParams(11, F49, F49.scalar(1), F49.scalar(5))
    prof = analyze(curve)
    assert prof.m == 5
    for t in (1, 2, 3, 4, 6):
        assert trace(prof, curve, t) == 0
        assert point_count(prof, curve, t) == 49**t + 1
    with pytest.raises(FieldTooLarge):
        trace(prof, curve, 5)
    with pytest.raises(FieldTooLarge):
        prof.S_list


def test_f_values_extend_on_demand():
    curve = curve_53()
    prof = analyze(curve, curve.base_field.scalar(2))
    assert prof.F_values == {}
    trace(prof, curve, 2)
    assert set(prof.F_values) == {2}
    trace(prof, curve, 9)
    assert set(prof.F_values) == {2, 9}
