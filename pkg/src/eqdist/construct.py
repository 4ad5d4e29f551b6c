"""Explicit equilateral configurations and numerical witness search.

All constructions are normalized so every pairwise distance is exactly 1.
The search minimizes the squared deviation of all pairwise distances from 1
by multi-restart adaptive-step gradient descent; restarts are seeded
independently from (seed, restart_index) so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDistanceError, InputError, NumericalError
from .space import PointSet, Space, distance_matrix


def cross_polytope(n: int) -> PointSet:
    """The 2n points {+-e_i/2} in l1^n; all pairwise l1 distances are 1."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    pts = np.zeros((2 * n, n))
    for i in range(n):
        pts[2 * i, i] = 0.5
        pts[2 * i + 1, i] = -0.5
    return PointSet(Space(1.0, (1,) * n), pts)


def simplex_lambda(n: int, p: float, tol: float = 1e-13) -> float:
    """Root of |1-lam|^p + (n-1) lam^p = 2, so {e_1..e_n, lam*(1,..,1)} is
    equilateral in lp^n.

    Bisection prefers the bracket (0, 1]; it extends to (1, 2] when the
    equation has no root at or below 1 (this happens only for n = 2).
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    if not (1.0 < p < math.inf):
        raise InputError(f"need 1 < p < inf, got {p}")

    def g(lam: float) -> float:
        return abs(1.0 - lam) ** p + (n - 1) * lam ** p - 2.0

    lo, hi = 1e-16, 1.0
    if g(hi) < 0.0:
        lo, hi = 1.0, 2.0
    if g(lo) >= 0.0 or g(hi) < 0.0:
        raise NumericalError(f"failed to bracket the root for n={n}, p={p}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lp_simplex(n: int, p: float) -> PointSet:
    """n+1 points {e_i, lam*(1,..,1)} in lp^n, scaled to unit distances."""
    lam = simplex_lambda(n, p)
    scale = 2.0 ** (-1.0 / p)
    pts = np.vstack([np.eye(n), np.full((1, n), lam)]) * scale
    return PointSet(Space(float(p), (1,) * n), pts)


def euclidean_simplex(n: int) -> PointSet:
    """Regular unit simplex: n+1 points in E^n at pairwise distance 1."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n == 1:
        return PointSet(Space(2.0, (1,)), np.array([[0.0], [1.0]]))
    return lp_simplex(n, 2.0)


def product_construction(S: PointSet, T: PointSet, tol: float = 1e-8) -> PointSet:
    """Cartesian product of two Euclidean unit-equilateral sets in the
    sup-sum of their spaces: |S|*|T| points, all pairwise distances 1."""
    for name, ps in (("S", S), ("T", T)):
        if not ps.space.is_euclidean:
            raise InputError(f"{name} must live in a Euclidean space")
        if ps.m >= 2:
            prof = distance_profile(ps, tol)
            if len(prof) != 1 or abs(prof[0] - 1.0) > tol:
                raise InputError(f"{name} is not unit-equilateral (profile {prof})")
    a, b = S.space.ambient_dim, T.space.ambient_dim
    pts = np.empty((S.m * T.m, a + b))
    for i, srow in enumerate(S.points):
        for j, trow in enumerate(T.points):
            pts[i * T.m + j, :a] = srow
            pts[i * T.m + j, a:] = trow
    return PointSet(Space(math.inf, (a, b)), pts)


def distance_profile(points: PointSet, tol: float = 1e-7) -> list[float]:
    """Distinct pairwise distances, clustered with single linkage at gap tol,
    sorted descending.  A (near-)zero distance is an error: zero is not
    counted as a distance."""
    if points.m < 2:
        raise InputError("distance profile needs at least 2 points")
    if tol <= 0:
        raise InputError(f"tol must be positive, got {tol}")
    dm = distance_matrix(points)
    dists = np.sort(dm[np.triu_indices(points.m, 1)])
    if dists[0] < tol:
        raise DegenerateDistanceError("zero distance present")
    clusters: list[list[float]] = [[dists[0]]]
    for d in dists[1:]:
        if d - clusters[-1][-1] > tol:
            clusters.append([d])
        else:
            clusters[-1].append(d)
    return sorted((float(np.mean(c)) for c in clusters), reverse=True)


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 8
    max_iters: int = 4000
    seed: int = 0
    step_init: float = 0.1
    residual_target: float = 1e-10
    smoothing_eps: float = 1e-9

    def __post_init__(self):
        if self.restarts < 1:
            raise InputError(f"restarts must be >= 1, got {self.restarts}")
        if self.residual_target <= 0:
            raise InputError(f"residual_target must be positive, got {self.residual_target}")


@dataclass(frozen=True)
class SearchResult:
    points: PointSet
    residual: float      # max over pairs of |d_ij - 1|, true norm
    converged: bool
    restart_index: int


def _pair_energy_grad(Q: np.ndarray, space: Space, eps: float, want_grad: bool):
    """Energy sum_{i<j} (d_ij - 1)^2 with softened block norms, and gradient."""
    m = Q.shape[0]
    delta = Q[:, None, :] - Q[None, :, :]
    slices = space.block_slices()
    nb = len(slices)
    sq = np.empty((m, m, nb))
    for b, sl in enumerate(slices):
        sq[:, :, b] = np.sum(delta[:, :, sl] ** 2, axis=2)
    soften = space.p < 2.0 and math.isfinite(space.p)
    r = np.sqrt(sq + eps * eps) if soften else np.sqrt(sq)
    eye = np.eye(m, dtype=bool)
    if math.isinf(space.p):
        d = r.max(axis=2)
    else:
        rp = r ** space.p
        ssum = rp.sum(axis=2)
        ssum[eye] = 1.0
        d = ssum ** (1.0 / space.p)
    d[eye] = 1.0
    resid = d - 1.0
    resid[eye] = 0.0
    energy = 0.5 * float(np.sum(resid ** 2))  # each pair counted twice
    if not want_grad:
        return energy, None
    grad = np.zeros_like(Q)
    d_safe = np.maximum(d, 1e-12)
    if math.isinf(space.p):
        amax = r.argmax(axis=2)
        for b, sl in enumerate(slices):
            w = 2.0 * resid * (amax == b) / np.maximum(r[:, :, b], 1e-12)
            w[eye] = 0.0
            grad[:, sl] += np.sum(w[:, :, None] * delta[:, :, sl], axis=1)
    else:
        base = 2.0 * resid * d_safe ** (1.0 - space.p)
        for b, sl in enumerate(slices):
            w = base * r[:, :, b] ** (space.p - 2.0)
            w[eye] = 0.0
            grad[:, sl] += np.sum(w[:, :, None] * delta[:, :, sl], axis=1)
    return energy, grad


def _true_residual(Q: np.ndarray, space: Space) -> float:
    ps = PointSet(space, Q)
    dm = distance_matrix(ps)
    off = dm[np.triu_indices(ps.m, 1)]
    return float(np.max(np.abs(off - 1.0))) if off.size else 0.0


def search_equilateral(space: Space, m: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Multi-restart descent toward an m-point unit-equilateral set in space.

    Restarts are merged by lowest residual, ties broken by lowest restart
    index; non-convergence is a reported state, not an error.
    """
    if m < 2:
        raise InputError(f"m must be >= 2, got {m}")
    cfg = cfg or SearchConfig()
    dim = space.ambient_dim
    best: tuple[float, int, np.ndarray] | None = None
    for restart in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, restart])
        Q = rng.uniform(-1.0, 1.0, size=(m, dim))
        step = cfg.step_init
        energy, grad = _pair_energy_grad(Q, space, cfg.smoothing_eps, True)
        for _ in range(cfg.max_iters):
            moved = False
            for _ in range(60):
                Qn = Q - step * grad
                en, _ = _pair_energy_grad(Qn, space, cfg.smoothing_eps, False)
                if en < energy:
                    Q, energy = Qn, en
                    step *= 1.3
                    moved = True
                    break
                step *= 0.5
                if step < 1e-18:
                    break
            if not moved:
                break
            if math.sqrt(max(energy, 0.0)) <= 0.25 * cfg.residual_target:
                break
            grad = _pair_energy_grad(Q, space, cfg.smoothing_eps, True)[1]
        resid = _true_residual(Q, space)
        if best is None or resid < best[0]:
            best = (resid, restart, Q)
    resid, restart, Q = best
    return SearchResult(PointSet(space, Q), resid, resid <= cfg.residual_target, restart)
