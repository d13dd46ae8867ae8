"""Reference oracles, error reports, convergence tables, and reproductions."""

import cmath
import math

import pytest

from nestrad import (
    DEFAULT_CONFIG,
    FUNCTIONS,
    converge,
    eval_report,
    exp_limit,
    make_report,
    nested_cos,
    ref_acos,
    ref_acosh,
    reproduce_table1,
    reproduce_table2,
    sweep_branches,
)


def test_ref_acos_principal_values():
    assert abs(ref_acos(1.0)) <= 1e-15
    assert ref_acos(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert ref_acos(-1.0) == pytest.approx(math.pi + 0j, rel=1e-15)
    assert ref_acos(2 + 3j) == pytest.approx(
        1.000143542473797 - 1.983387029916535j, rel=1e-14)


def test_ref_acos_stays_on_upper_sheet_past_one():
    # For real y > 1 the literal formula keeps a positive imaginary part,
    # equal to 1j times the principal inverse hyperbolic cosine.
    v = ref_acos(2.0)
    assert v.imag > 0
    assert v == pytest.approx(1j * math.acosh(2.0), rel=1e-14)


def test_ref_acos_matches_library_off_the_cut():
    for z in (0.3, -0.7, 0.5 + 0.5j, -1 - 2j):
        assert abs(ref_acos(z) - cmath.acos(z)) <= 1e-14


def test_ref_acosh_matches_library():
    # The factored radical keeps the left half-plane on the principal
    # sheet, matching the library convention everywhere tried.
    for z in (2.0, 0.5, -0.5, -2 + 3j, -2 - 3j, 1.5 + 0.5j):
        assert abs(ref_acosh(z) - cmath.acosh(z)) <= 1e-14


def test_oracle_inverts_cosine():
    for i in range(31):
        x = 0.05 + (math.pi - 0.1) * i / 30
        assert abs(ref_acos(math.cos(x)) - x) <= 1e-12


def test_report_arithmetic():
    r = make_report(0.0, 0.4, 0.5, 4, 2)
    assert r.abs_error == pytest.approx(0.1, rel=1e-12)
    # Oracle magnitude below 1 scales relative error by 1, not by itself.
    assert r.rel_error == r.abs_error
    r2 = make_report(0.0, 1.5, 2.0, 4, 2)
    assert r2.rel_error == pytest.approx(0.25, rel=1e-12)
    assert r2.depth == 4 and r2.seed_order == 2 and r2.branch == 0


def test_eval_report_forward_defaults():
    r = eval_report("cos", math.pi / 3)
    assert r.depth == 10 and r.seed_order == 2 and r.branch == 0
    assert r.value == pytest.approx(0.499999960463562, rel=1e-10)
    assert r.oracle_value == math.cos(math.pi / 3)
    assert r.abs_error == abs(r.value - r.oracle_value)


def test_eval_report_unknown_function():
    with pytest.raises(ValueError, match="unknown function"):
        eval_report("nope", 1.0)


def test_eval_report_branch_only_for_inverse_cosines():
    with pytest.raises(ValueError, match="branch selection"):
        eval_report("sin", 1.0, branch=2)


def test_eval_report_branch_of_acos():
    r = eval_report("acos", 0.0, branch=3)
    assert r.value == pytest.approx(10.995521462263701, rel=1e-12)
    assert r.oracle_value == pytest.approx(10.995574287564276, rel=1e-12)
    assert r.branch == 3


def test_eval_report_negative_branch_of_acosh():
    r = eval_report("acosh", 0.5, branch=-1)
    assert r.oracle_value == pytest.approx(-1j * math.acos(0.5), rel=1e-12)
    assert r.abs_error <= 1e-6


def test_eval_report_limit_and_shift_routes():
    assert eval_report("exp-limit", 1.0, depth=20).value == \
        exp_limit(1.0, 2 ** 20)
    assert eval_report("sin-shift", 1.0).value == \
        nested_cos(1.0 - math.pi / 2, DEFAULT_CONFIG)


def test_registered_function_names():
    assert set(FUNCTIONS) == {
        "cos", "sin", "tan", "cosh", "sinh", "tanh", "exp",
        "acos", "asin", "atan", "acosh", "asinh", "atanh",
        "log", "exp-limit", "log-limit", "sin-shift",
    }


def test_converge_known_rows():
    rows = converge("cos", math.pi / 3, list(range(4, 11)))
    assert [r.depth for r in rows] == list(range(4, 11))
    assert rows[0].abs_error == pytest.approx(1.619563928688672e-04, rel=1e-12)
    assert rows[0].error_ratio == 0.0
    assert rows[-1].abs_error == pytest.approx(3.9536438234399895e-08, rel=1e-12)
    assert rows[-1].error_ratio == pytest.approx(3.9981610787085455, rel=1e-12)


def test_converge_zero_error_rows():
    # Exact values give zero error and the ratio stays defined as zero.
    rows = converge("cos", 0.0, [4, 7, 9])
    assert [r.abs_error for r in rows] == [0.0, 0.0, 0.0]
    assert [r.error_ratio for r in rows] == [0.0, 0.0, 0.0]


def test_converge_inverse_function():
    rows = converge("acos", 0.0, [10])
    assert rows[0].abs_error == pytest.approx(1.539893581536944e-07, rel=1e-12)


def test_converge_validation():
    with pytest.raises(ValueError, match="nonempty"):
        converge("cos", 1.0, [])
    with pytest.raises(ValueError, match="strictly increasing"):
        converge("cos", 1.0, [5, 5])
    with pytest.raises(ValueError, match="strictly increasing"):
        converge("cos", 1.0, [6, 4])


def test_sweep_known_rows():
    rows = list(sweep_branches(3))
    assert [k for k, _, _ in rows] == [0, 1, 2, 3]
    expected = [
        (-4.9016335046392356e-08, 4.9016335046392356e-08),
        (0.9999986763811592, 1.3236188407539373e-06),
        (1.999993872146315, 6.127853684922968e-06),
        (2.9999831851845866, 1.681481541337959e-05),
    ]
    for (_, ex, dev), (pe, pd) in zip(rows, expected):
        assert ex == pytest.approx(pe, abs=1e-15)
        assert dev == pytest.approx(pd, abs=1e-15)


def test_sweep_deep_endpoint():
    k, extracted, dev = list(sweep_branches(100, 100, 25))[-1]
    assert k == 100
    assert extracted == pytest.approx(100.00001418894557, rel=1e-12)
    assert dev == pytest.approx(1.4188945570481337e-05, rel=1e-9)


def test_sweep_is_deterministic():
    assert list(sweep_branches(20, 3, 12)) == list(sweep_branches(20, 3, 12))


def test_sweep_validation():
    with pytest.raises(ValueError, match="k_max"):
        list(sweep_branches(0))
    with pytest.raises(ValueError, match="k_max"):
        list(sweep_branches(512, 1, 10))
    with pytest.raises(ValueError, match="step"):
        list(sweep_branches(3, 0))


TABLE1_VALUES = [
    1.570796172805538, 4.712384822113464, 7.853962382754363,
    10.995521462263701, 14.137054668250807, 17.278554608371589,
    20.420013890390901, 23.561425122147117,
]
TABLE1_PATTERNS = ["++++", "+++-", "++--", "++-+", "+--+", "+---",
                   "+-+-", "+-++"]


def test_table1_reproduction():
    rows = reproduce_table1(10)
    assert [r.k for r in rows] == list(range(8))
    assert [r.pattern for r in rows] == TABLE1_PATTERNS
    for row, expected in zip(rows, TABLE1_VALUES):
        assert row.value == pytest.approx(expected, rel=1e-12)
        assert row.converging == pytest.approx(
            (2 * row.k + 1) * math.pi / 2, rel=1e-15)


TABLE2_PLUS = [
    0.0, 1.99999686254052, 1.99999686254052, 3.99997490034631,
    3.99997490034631, 5.99991528886506, 5.99991528886506,
    7.99979920389600, 7.99979920389600, 9.99960782177148, 9.99960782177148,
]
TABLE2_MINUS = [
    0.999999607815114, 0.999999607815114, 2.99998941107727,
    2.99998941107727, 4.99995097728807, 4.99995097728807,
    6.99986548205935, 6.99986548205935, 8.99971410143166,
    8.99971410143166, 10.9994780120676,
]


def test_table2_reproduction_depth_10():
    rows = reproduce_table2(10)
    assert len(rows) == 11
    assert rows[0].at_plus_one == 0.0
    for row, pp, pm in zip(rows, TABLE2_PLUS, TABLE2_MINUS):
        if pp:
            assert row.at_plus_one == pytest.approx(pp, rel=1e-12)
        assert row.at_minus_one == pytest.approx(pm, rel=1e-12)


def test_table2_degenerate_pairs_bitwise():
    rows = reproduce_table2(10)
    for j in range(1, 6):
        assert rows[2 * j - 1].at_plus_one == rows[2 * j].at_plus_one
    for j in range(0, 5):
        assert rows[2 * j].at_minus_one == rows[2 * j + 1].at_minus_one


@pytest.mark.parametrize("fn", [reproduce_table1, reproduce_table2])
def test_tables_reject_shallow_depth(fn):
    with pytest.raises(ValueError, match="depth >= 10"):
        fn(9)
