import pfol


def test_jouanolou_divisor():
    A, B = pfol.family_field("jouanolou:3")
    assert str(A) == "x*y^3 - 1" and str(B) == "y^4 - x^3"
    r = pfol.p_divisor("x*y^3 - 1", "y^4 - x^3", 2)
    assert pfol.Poly(r["divisor"], "F2") == pfol.Poly("x^7*y^2 + x^3*y^3 + y^7 + x^2", "F2")
    assert r["affine_degree"] == 9
    assert not r["p_closed"]


def test_p_power_matches_hand_computation():
    vx, vy = pfol.p_power("y", "x", 2)
    assert str(vx) == "x" and str(vy) == "y"
    vx, vy = pfol.p_power("1", "0", 3)
    assert vx.is_zero() and vy.is_zero()


def test_newton_and_certificates():
    f = "x^7*y^2 + x^3*y^3 + y^7 + x^2"
    assert sorted(pfol.newton_polytope(f)) == [(0, 7), (2, 0), (7, 2)]
    assert pfol.is_indecomposable(f)
    assert pfol.certify_irreducible(f)["status"] == "IrreducibleByPolytope"
    v = pfol.certify_irreducible("x^2 + y^2", backend="factor_search")
    assert v["status"] == "Reducible" and v["witness"]["factor"] == "x + y"


def test_family_and_certificate():
    assert pfol.verify_family("family-f:6,1,1,1")["ok"]
    report = pfol.certify_family("jouanolou:3", assert_nondicritical=True)
    assert report["conclusion"] == "NoAlgebraicSolutions"
    assert pfol.certify("x", "y", assert_nondicritical=True)["conclusion"] == "NotEstablished"


def test_parse_error_is_value_error():
    try:
        pfol.Poly("x +* y")
    except ValueError:
        return
    raise AssertionError("expected a parse error")
