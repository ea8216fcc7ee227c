import math

import numpy as np
import pytest
from scipy import integrate as sint

from mordellkit.errors import DomainError
from mordellkit.quad import Integrand1D
from mordellkit.specfun import SELF_RECIPROCAL_1D, kernel
from mordellkit.transforms import (
    DEFAULT_GRID,
    TransformKind,
    fourier_1d,
    fourier_1d_result,
    fourier_2d,
    partial_transform,
    partial_transform_symmetry_check,
    self_reciprocity_residual,
)

SQPI = math.sqrt(math.pi)
K = math.sqrt(math.pi / 2)


def test_gaussian_cosine():
    assert fourier_1d(kernel("GAUSS"), "cosine", 1.3, 1e-12) == pytest.approx(math.exp(-1.3 ** 2 / 2), abs=1e-12)


def test_src1_and_srs1_points():
    assert fourier_1d(kernel("SRC1"), "cosine", 0.7) == pytest.approx(float(kernel("SRC1")(0.7)), abs=1e-9)
    assert fourier_1d(kernel("SRS1"), "sine", 1.1) == pytest.approx(float(kernel("SRS1")(1.1)), abs=1e-9)


def test_against_scipy_quad():
    # sqrt(2/pi) int exp(-x) cos(tx) dx = sqrt(2/pi)/(1+t^2)
    f = Integrand1D(lambda x: np.exp(-x), 1.0)
    for t in (0.0, 0.5, 3.0):
        assert fourier_1d(f, "cosine", t, 1e-12) == pytest.approx(math.sqrt(2 / math.pi) / (1 + t * t), abs=1e-12)
    ref, _ = sint.quad(lambda x: math.sin(2.0 * x) / math.cosh(SQPI * x), 0, 60, limit=400, epsabs=1e-13)
    assert fourier_1d(kernel("SRS1"), "sine", 0.0) == 0.0
    g = Integrand1D(lambda x: 1 / np.cosh(SQPI * x), SQPI, "exp", 2.0)
    assert fourier_1d(g, "sine", 2.0) == pytest.approx(math.sqrt(2 / math.pi) * ref, abs=1e-11)


@pytest.mark.parametrize("kid", SELF_RECIPROCAL_1D)
def test_catalog_self_reciprocal(kid):
    assert self_reciprocity_residual(kernel(kid)) < 1e-8


def test_residual_grids():
    grid = (0, 0.5, 1, 2, 4)
    assert self_reciprocity_residual(kernel("SRC2"), grid=grid) < 1e-8
    assert self_reciprocity_residual(kernel("SRS4"), grid=grid) < 1e-8
    assert self_reciprocity_residual(kernel("GAUSS")) < 1e-10
    assert DEFAULT_GRID == (0.0, 0.25, 0.5, 1.0, 2.0, 4.0)


def test_non_reciprocal_needs_kind():
    with pytest.raises(DomainError):
        self_reciprocity_residual(kernel("K2D_F1"))
    assert self_reciprocity_residual(kernel("SRC1"), "sine", grid=[1.0]) > 1e-3


def test_involution():
    # sech x -> sqrt(pi/2) sech(pi t/2) -> sech x
    f = Integrand1D(lambda x: 1 / np.cosh(x), 1.0, "exp", 2.0)
    once = Integrand1D(lambda t: np.array([fourier_1d(f, "cosine", float(v), 1e-12) for v in np.atleast_1d(t)]),
                       0.99 * math.pi / 2, "exp", 3.0)
    assert once.eval(np.array([0.8]))[0] == pytest.approx(K / math.cosh(0.4 * math.pi), abs=1e-12)
    tol = 1e-8
    for t in (0.0, 0.3, 1.0, 2.0, 3.5):
        assert fourier_1d(once, "cosine", t, tol) == pytest.approx(1 / math.cosh(t), abs=10 * tol)


@pytest.mark.parametrize("a,b", [(0.4, 0.9), (0.0, 1.2), (1.5, 1.5)])
def test_cos1_2d(a, b):
    expected = 1 / (math.cosh(SQPI * a) + math.cosh(SQPI * b))
    assert fourier_2d(kernel("K2D_COS1"), "cos-cos", a, b) == pytest.approx(expected, abs=1e-7)


def test_f1_transform():
    got = fourier_2d(kernel("K2D_F1"), "cos-cos", 0.5, 0.5)
    assert got == pytest.approx(math.sin(0.25) / math.sinh(K * 0.5) ** 2, abs=1e-7)


def test_sinsin_at_origin_is_kernel_limit():
    # the transform reproduces the kernel, whose value at the origin is 1/pi
    assert fourier_2d(kernel("K2D_SINSIN"), "cos-cos", 0.0, 0.0) == pytest.approx(1 / math.pi, abs=1e-9)


def test_factorizable_2d_is_product():
    f = kernel("K2D_F1")
    # at s = 0 only the x-factor carries the cos(xy) coupling; use a separable probe instead
    from mordellkit.quad import Integrand2D
    g = Integrand2D(lambda x, y: np.exp(-x) / np.cosh(y), 1.0, 1.0, amplitude=2.0)
    one_x = fourier_1d(Integrand1D(lambda x: np.exp(-x), 1.0), "cosine", 0.7)
    one_y = fourier_1d(Integrand1D(lambda y: 1 / np.cosh(y), 1.0, "exp", 2.0), "cosine", 1.2)
    assert fourier_2d(g, "cos-cos", 0.7, 1.2) == pytest.approx(one_x * one_y, abs=1e-8)
    assert f.dim == 2


def test_kind_dimension_checks():
    with pytest.raises(DomainError):
        fourier_1d(kernel("SRC1"), "cos-cos", 1.0)
    with pytest.raises(DomainError):
        fourier_2d(kernel("K2D_COS1"), "cosine", 1.0, 1.0)
    with pytest.raises(DomainError):
        fourier_1d(kernel("SRC1"), "cosine", -1.0)
    with pytest.raises(ValueError):
        TransformKind("fourier")


def test_result_carries_error():
    r = fourier_1d_result(kernel("SRC3"), "cosine", 1.0, 1e-11)
    assert r.abs_error_estimate <= 1e-11
    assert abs(r.value - float(kernel("SRC3")(1.0))) <= 1e-10


def test_partial_transform_symmetry():
    f = kernel("K2D_COS1")
    assert partial_transform_symmetry_check(f, [(0.3, 1.1)]) < 1e-8
    assert partial_transform_symmetry_check(f, [(0.7, 0.7)]) == 0.0


@pytest.mark.parametrize("a,y", [(0.2, 0.9), (1.3, 0.4)])
def test_sinsin_partial_transform_closed_form(a, y):
    f = kernel("K2D_SINSIN")
    # sqrt(2/pi)/sinh(sqrt(pi) y) * (sqrt(pi)/2) sinh(sqrt(pi) y)/(cosh sqrt(pi) y + cosh sqrt(pi) a)
    closed = 1 / (math.sqrt(2) * (math.cosh(SQPI * y) + math.cosh(SQPI * a)))
    assert partial_transform(f, a, y) == pytest.approx(closed, abs=1e-11)
    assert partial_transform_symmetry_check(f, [(a, y)]) < 1e-8
