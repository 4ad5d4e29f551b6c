import math

import numpy as np
import pytest

from eqdist.construct import (SearchConfig, cross_polytope, distance_profile,
                              euclidean_simplex, lp_simplex,
                              product_construction, search_equilateral,
                              simplex_lambda)
from eqdist.errors import DegenerateDistanceError, InputError
from eqdist.space import PointSet, Space, distance_matrix


def _profile_is_unit(ps, tol):
    prof = distance_profile(ps, 1e-7)
    return len(prof) == 1 and abs(prof[0] - 1.0) <= tol


def test_cross_polytope():
    ps = cross_polytope(1)
    assert np.array_equal(ps.points, [[0.5], [-0.5]])
    for n in (2, 7, 20):
        ps = cross_polytope(n)
        assert ps.m == 2 * n and ps.space == Space(1.0, (1,) * n)
        assert _profile_is_unit(ps, 1e-12)
    with pytest.raises(InputError):
        cross_polytope(0)


def test_simplex_lambda_analytic():
    assert abs(simplex_lambda(3, 2) - 1.0) < 1e-12
    assert abs(simplex_lambda(2, 2) - (1 + math.sqrt(3)) / 2) < 1e-12
    assert abs(simplex_lambda(4, 2) - (1 + math.sqrt(5)) / 4) < 1e-12


def test_simplex_lambda_residual():
    for n in (2, 3, 5, 12, 30):
        for p in (1.2, 1.5, 2, 3, 7.5):
            lam = simplex_lambda(n, p)
            assert abs(abs(1 - lam) ** p + (n - 1) * lam ** p - 2) <= 1e-12


def test_simplex_lambda_validation():
    with pytest.raises(InputError):
        simplex_lambda(1, 2)
    with pytest.raises(InputError):
        simplex_lambda(3, 1.0)
    with pytest.raises(InputError):
        simplex_lambda(3, math.inf)


def test_lp_simplex_profiles():
    for n, p in [(3, 2), (2, 3), (5, 1.5), (30, 1.2), (30, 7.5)]:
        ps = lp_simplex(n, p)
        assert ps.m == n + 1
        assert _profile_is_unit(ps, 1e-10)


def test_euclidean_simplex():
    ps = euclidean_simplex(1)
    assert np.array_equal(ps.points, [[0.0], [1.0]])
    assert _profile_is_unit(euclidean_simplex(2), 1e-12)
    assert _profile_is_unit(euclidean_simplex(3), 1e-12)


def test_product_construction():
    tri_seg = product_construction(euclidean_simplex(2), euclidean_simplex(1))
    assert tri_seg.m == 6 and tri_seg.space == Space(math.inf, (2, 1))
    assert _profile_is_unit(tri_seg, 1e-12)
    for a, b in [(2, 2), (3, 3), (4, 4)]:
        ps = product_construction(euclidean_simplex(a), euclidean_simplex(b))
        assert ps.m == (a + 1) * (b + 1)
        assert _profile_is_unit(ps, 1e-12)


def test_product_single_point_copy():
    one = PointSet(Space(2.0, (1,)), np.array([[0.25]]))
    seg = euclidean_simplex(1)
    ps = product_construction(one, seg)
    assert ps.m == 2
    assert np.array_equal(ps.points[:, 1:], seg.points)


def test_product_rejects_non_equilateral():
    bad = PointSet(Space(2.0, (1, 1)), np.array([[0, 0], [1, 0], [3, 0.0]]))
    with pytest.raises(InputError):
        product_construction(bad, euclidean_simplex(1))
    non_euclid = cross_polytope(2)
    with pytest.raises(InputError):
        product_construction(non_euclid, euclidean_simplex(1))


def test_distance_profile():
    assert distance_profile(cross_polytope(3)) == [1.0]
    square = PointSet(Space(2.0, (1, 1)),
                      np.array([[0, 0], [1, 0], [1, 1], [0, 1.0]]))
    prof = distance_profile(square)
    assert len(prof) == 2
    assert abs(prof[0] - math.sqrt(2)) < 1e-12 and abs(prof[1] - 1.0) < 1e-12
    dup = PointSet(Space(2.0, (1, 1)), np.array([[0, 0], [0, 0.0]]))
    with pytest.raises(DegenerateDistanceError):
        distance_profile(dup)
    with pytest.raises(InputError):
        distance_profile(PointSet(Space(2.0, (1,)), np.array([[1.0]])))


def test_profile_clusters_nearby_distances():
    pts = PointSet(Space(2.0, (1, 1)),
                   np.array([[0, 0], [1, 0], [0, 1 + 2e-9]]))
    prof = distance_profile(pts, tol=1e-7)
    assert len(prof) == 2  # the two unit-ish sides merge, the diagonal stays


def test_search_triangle_converges():
    res = search_equilateral(Space(2.0, (1, 1)), 3, SearchConfig(seed=5))
    assert res.converged and res.residual < 1e-10
    dm = distance_matrix(res.points)
    assert np.max(np.abs(dm[~np.eye(3, dtype=bool)] - 1)) < 1e-9


def test_search_impossible_case_stalls():
    res = search_equilateral(Space(2.0, (1, 1)), 4,
                             SearchConfig(seed=3, restarts=6))
    assert not res.converged and res.residual > 1e-3


def test_search_reproducible():
    cfg = SearchConfig(restarts=3, seed=42, max_iters=500)
    a = search_equilateral(Space(1.5, (1, 1)), 3, cfg)
    b = search_equilateral(Space(1.5, (1, 1)), 3, cfg)
    assert a.residual == b.residual and a.restart_index == b.restart_index
    assert np.array_equal(a.points.points, b.points.points)


def test_search_block_space():
    res = search_equilateral(Space(math.inf, (2, 1)), 4,
                             SearchConfig(seed=9, restarts=8, residual_target=1e-8))
    assert res.converged


def test_search_config_validation():
    with pytest.raises(InputError):
        SearchConfig(restarts=0)
    with pytest.raises(InputError):
        SearchConfig(residual_target=0.0)
    with pytest.raises(InputError):
        search_equilateral(Space(2.0, (1,)), 1)
