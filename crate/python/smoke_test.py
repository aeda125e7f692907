"""Smoke test for the pga2d_py extension module.

Build and install first:

    pip install --no-build-isolation ./crates/python
"""

import math

import pga2d_py as pga

TOL = 1e-9


def close(a, b, tol=TOL):
    return abs(a - b) <= tol


def main():
    a = pga.Point(0.0, 0.0)
    b = pga.Point(3.0, 4.0)
    assert close(pga.distance(a, b), 5.0)

    m = a.join(b)
    assert close(pga.distance(m, a), 0.0)
    x_axis = pga.Line(0.0, 1.0, 0.0)
    y_axis = pga.Line(1.0, 0.0, 0.0)
    assert pga.Line(1.0, 0.0, 0.0).meet(x_axis).cartesian() == (0.0, 0.0)
    assert close(pga.angle(x_axis, y_axis), math.pi / 2)

    image = pga.reflect(y_axis, pga.Point(2.0, 1.0))
    x, y = image.cartesian()
    assert close(x, -2.0) and close(y, 1.0)

    g = pga.rotator(pga.Point(0.0, 0.0), math.pi / 2)
    x, y = g.apply_point(pga.Point(1.0, 0.0)).cartesian()
    assert close(x, 0.0) and close(y, -1.0)

    t = pga.translation(2.0, 3.0)
    x, y = t.apply_point(a).cartesian()
    assert close(x, 2.0) and close(y, 3.0)

    a2 = pga.Point(0.0, 1.0)
    m1 = pga.Point(1.0, 0.0).join(pga.Point(1.0, 1.0))
    m2 = a2.join(pga.Point(-1.0, 1.0))
    g = pga.solve(pga.Point(1.0, 0.0), m1, a2, m2)
    x, y = g.apply_point(pga.Point(1.0, 0.0)).cartesian()
    assert close(x, 0.0) and close(y, 1.0)
    img = g.apply_line(m1).normalize()
    target = m2.normalize()
    assert all(close(p, q) for p, q in [(img.a, target.a), (img.b, target.b), (img.c, target.c)])

    bx, by, bz = pga.log(pga.exp(0.3, -0.2, 1.1))
    assert close(bx, 0.3) and close(by, -0.2) and close(bz, 1.1)

    r, s = g.factor()
    prod = pga.geometric_product(
        [0.0, s.c, s.a, s.b, 0.0, 0.0, 0.0, 0.0],
        [0.0, r.c, r.a, r.b, 0.0, 0.0, 0.0, 0.0],
    )
    coords = g.normalize().coords()
    sign = 1.0 if prod[0] * coords[0] + prod[6] * coords[3] >= 0 else -1.0
    for got, want in zip([prod[0], prod[4], prod[5], prod[6]], coords):
        assert close(sign * got, want), (prod, coords)

    par, orth = pga.project(pga.Point(3.0, 0.0), pga.Point(0.0, 0.0).join(pga.Point(3.0, 4.0)))
    assert close(par[4] / par[6], 1.08) and close(par[5] / par[6], 1.44)

    half = pga.interpolate(t, 0.5)
    x, y = half.apply_point(a).cartesian()
    assert close(x, 1.0) and close(y, 1.5)

    try:
        pga.Point(1.0, 1.0).join(pga.Point(1.0, 1.0))
    except ValueError:
        pass
    else:
        raise AssertionError("joining a point with itself should fail")

    assert "J(I) = 1" in pga.cayley_table()
    print("pga2d_py smoke test passed")


if __name__ == "__main__":
    main()
