import pytest

from arcticcurve.jet import TaylorJet, cot_jet, coth_jet, sin_cos_jets
from arcticcurve.precision import PrecisionContext

MP = PrecisionContext(192).mp
TOL = MP.mpf(10) ** -50


def taylor_oracle(f, x0, n):
    return MP.taylor(f, x0, n)


def assert_jet(jet, ref):
    assert len(jet) == len(ref)
    for a, b in zip(jet.coeffs, ref):
        assert abs(a - b) <= TOL * (1 + abs(b))


@pytest.mark.parametrize("x0,scale", [("0.3", 1), ("1.7", "-0.5"), ("-2.2", "3")])
def test_coth_jet(x0, scale):
    x0, s = MP.mpf(x0), MP.mpf(scale)
    assert_jet(coth_jet(x0, 6, MP, s), taylor_oracle(lambda h: MP.coth(x0 + s * h), 0, 6))


@pytest.mark.parametrize("x0,scale", [("0.3", 1), ("2.1", "-0.5"), ("-1.2", "2")])
def test_cot_jet(x0, scale):
    x0, s = MP.mpf(x0), MP.mpf(scale)
    assert_jet(cot_jet(x0, 6, MP, s), taylor_oracle(lambda h: MP.cot(x0 + s * h), 0, 6))


def test_sin_cos_jets():
    sj, cj = sin_cos_jets(MP.mpf("0.4"), 5, MP, MP.mpf(2))
    assert_jet(sj, taylor_oracle(lambda h: MP.sin(MP.mpf("0.4") + 2 * h), 0, 5))
    assert_jet(cj, taylor_oracle(lambda h: MP.cos(MP.mpf("0.4") + 2 * h), 0, 5))


def test_ring_operations_match_composite_function():
    x0 = MP.mpf("0.8")
    u = TaylorJet.variable(x0, 7, MP)
    f = (u * u + 3) / (u - 2) - u**3 * 0.5
    g = (u * u * -1).exp(MP)
    ref_f = taylor_oracle(lambda x: (x * x + 3) / (x - 2) - x**3 / 2, x0, 7)
    ref_g = taylor_oracle(lambda x: MP.exp(-x * x), x0, 7)
    assert_jet(f, ref_f)
    assert_jet(g, ref_g)
    assert_jet(1 / u, taylor_oracle(lambda x: 1 / x, x0, 7))


def test_derivative_and_scaling():
    x0 = MP.mpf("0.5")
    j = coth_jet(x0, 5, MP)
    assert j.derivative_value(2) == j[2] * 2
    d = j.derivative()
    assert_jet(d, taylor_oracle(lambda x: 1 - MP.coth(x) ** 2, x0, 4))
    assert_jet(j.scale_argument(2), taylor_oracle(lambda h: MP.coth(x0 + 2 * h), 0, 5))


def test_jet_errors():
    with pytest.raises(ValueError):
        TaylorJet([])
    with pytest.raises(ZeroDivisionError):
        TaylorJet([0, 1]).reciprocal()
    with pytest.raises(ZeroDivisionError):
        coth_jet(0, 3, MP)
    with pytest.raises(ValueError):
        TaylorJet([1]).derivative()
