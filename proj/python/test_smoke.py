"""Smoke tests for the _dgcalc extension module."""

import _dgcalc as dg

KOSZUL = "chart K\nbase x\ngen xi : -1\nd xi = x\n"
DOUBLE = "chart D\nbase x\ngen xi : -1\nd xi = x^2\n"


def test_validate():
    ok, msg = dg.validate_chart(KOSZUL)
    assert ok, msg
    ok, msg = dg.validate_chart("chart B\nbase x\ngen xi : -1\nd xi = xi\n")
    assert not ok and "degree" in msg


def test_classical():
    ambient, gens = dg.classical_ideal(KOSZUL)
    assert ambient == ["x"] and gens == ["x"]
    assert dg.is_classical_point(KOSZUL, {"x": "0"})
    assert not dg.is_classical_point(KOSZUL, {"x": "1"})


def test_tangent_and_cohomology():
    t = dg.tangent(DOUBLE, {"x": "0"})
    assert t["dims"] == [1, 1]
    assert t["h"] == [1, 1]
    assert t["d"][0][0][0] == "0"

    h = dg.cohomology(KOSZUL, max_base_degree=3, window_min=-2)
    assert h[0] == (1, True)
    assert h[-1] == (0, True)


def test_koszul_roundtrip():
    text = dg.koszul("chart A\nbase x y\n", [("x", "s"), ("y", "t")])
    h = dg.cohomology(text, max_base_degree=3, window_min=-2)
    assert h[0] == (1, True) and h[-1] == (0, True) and h[-2] == (0, True)


def test_factorize_and_weq():
    src = "chart B\nbase y\n"
    tgt = "chart A\nbase x\n"
    f = "map sq : B -> A\nsend x = y^2\n"
    out = dg.factorize(src, tgt, f)
    assert "x_bar" in out["middle"]
    ok, witness = dg.is_pointwise_weq(src, tgt, f, [{"y": "0"}])
    assert not ok and "y=0" in witness


def test_decompose_and_linfty():
    stages, rebuilt = dg.decompose(KOSZUL)
    assert len(stages) == 1
    assert "d xi = x" in rebuilt

    constants = dg.chart_to_linfty(KOSZUL)
    assert "bracket xi <= : x" in constants
    chart, ok, arity = dg.linfty_to_chart(constants)
    assert ok and "d xi = x" in chart

    curved = "linfty C\nbase x\nelem e : 1\nelem f : 2\nbracket e <= : x\nbracket f <= e : 1\n"
    chart, ok, arity = dg.linfty_to_chart(curved)
    assert not ok and arity == 0


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
