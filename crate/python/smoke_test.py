"""Smoke test for the struve_bounds extension module."""

import math

import struve_bounds as sb


def test_closed_form():
    x = 2.0
    expected = math.sqrt(2.0 / (math.pi * x)) * (math.cosh(x) - 1.0)
    assert abs(sb.evaluate("L", 0.5, x) / expected - 1.0) < 1e-14
    m = sb.evaluate("M", -0.5, 30.0)
    assert abs(m / (-math.sqrt(2.0 / (math.pi * 30.0)) * math.exp(-30.0)) - 1.0) < 1e-12


def test_kernel_range():
    for nu in (-0.5, 0.0, 2.5):
        for x in (0.1, 1.0, 10.0):
            assert 0.0 < sb.b(nu, x) < 0.5


def test_ratio_bracket():
    br = sb.ratio_bracket(2.0, 3.0)
    assert br["lower"] <= br["exact"] <= br["upper"]
    eq = sb.ratio_bracket(0.5, 3.0)
    assert abs(eq["upper"] - math.tanh(1.5)) < 1e-15


def test_cond_and_arg_ratio():
    c = sb.cond_bracket(1.0, 2.0, "eq30")
    assert c["lower"] <= c["exact"] <= c["upper"]
    a = sb.arg_ratio_bracket(1.0, 1.0, 2.0)
    assert 0.0 < a["exact"] < 1.0


def test_table_and_verify():
    nus, xs, values = sb.table(1)
    assert round(values[nus.index(1.0)][xs.index(5.0)], 4) == 0.0186
    _, _, t2 = sb.table(2)
    assert math.isinf(t2[0][0])
    assert sb.certify("eq17_lower")["passed"]
    assert not sb.certify("prior_xminus")["passed"]
    assert abs(sb.crossover("eq20_upper", "eq18_upper", 1.0) - 2.18) < 0.02
    assert "eq46_upper" in sb.bound_ids()


def test_errors():
    try:
        sb.evaluate("Q", 1.0, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown kind accepted")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
    print("python smoke test passed")
