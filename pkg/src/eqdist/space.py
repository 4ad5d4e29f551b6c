"""lp spaces and lp sums of Euclidean spaces: norms, distances, point sets.

A ``Space`` is a product of Euclidean blocks E^{a_1} x ... x E^{a_n} with the
outer lp norm applied to the vector of block Euclidean norms.  A plain lp^n
space is the special case where every block has dimension 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InputError

# A point is a plain 1-d coordinate array covering all blocks in order.
Point = np.ndarray

_TOL_REL = 1e-12
_TOL_ABS = 1e-14


@dataclass(frozen=True)
class Space:
    """An lp sum of Euclidean blocks; p may be math.inf."""

    p: float
    blocks: tuple[int, ...]

    def __post_init__(self):
        p = float(self.p)
        if not (p >= 1.0):  # also rejects NaN
            raise InputError(f"p must satisfy p >= 1 or p = inf, got {self.p}")
        object.__setattr__(self, "p", p)
        blocks = tuple(int(a) for a in self.blocks)
        if not blocks or any(a < 1 for a in blocks):
            raise InputError(f"blocks must be a nonempty tuple of positive ints, got {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def ambient_dim(self) -> int:
        return sum(self.blocks)

    @property
    def is_lp(self) -> bool:
        """True when every block is 1-dimensional (a plain lp^n space)."""
        return all(a == 1 for a in self.blocks)

    @property
    def is_euclidean(self) -> bool:
        """True when the norm coincides with the Euclidean norm on R^dim.

        This holds for p = 2 (an l2 sum of Euclidean blocks is Euclidean) and
        for a single block (the outer norm is then irrelevant).
        """
        return self.p == 2.0 or self.n_blocks == 1

    def block_slices(self) -> list[slice]:
        out, start = [], 0
        for a in self.blocks:
            out.append(slice(start, start + a))
            start += a
        return out

    def to_string(self) -> str:
        p_str = "inf" if math.isinf(self.p) else (
            str(int(self.p)) if self.p.is_integer() else repr(self.p))
        if self.is_lp:
            return f"lp:n={self.n_blocks},p={p_str}"
        return f"lpsum:blocks={','.join(str(a) for a in self.blocks)},p={p_str}"

    @staticmethod
    def from_string(s: str) -> "Space":
        m = re.fullmatch(r"lp:n=(\d+),p=([^,]+)", s.strip())
        if m:
            return Space(_parse_p(m.group(2)), (1,) * int(m.group(1)))
        m = re.fullmatch(r"lpsum:blocks=([\d,]+),p=([^,]+)", s.strip())
        if m:
            blocks = tuple(int(a) for a in m.group(1).split(","))
            return Space(_parse_p(m.group(2)), blocks)
        raise InputError(f"unparseable space string: {s!r}")


def _parse_p(tok: str) -> float:
    tok = tok.strip().lower()
    if tok in ("inf", "infinity", "oo"):
        return math.inf
    try:
        return float(tok)
    except ValueError as e:
        raise InputError(f"unparseable p value: {tok!r}") from e


@dataclass(frozen=True)
class PointSet:
    """An ordered list of points in a Space (rows of a read-only array)."""

    space: Space
    points: np.ndarray = field(repr=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(1, -1)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise InputError("points must be a nonempty m x dim array")
        if pts.shape[1] != self.space.ambient_dim:
            raise InputError(
                f"points have dimension {pts.shape[1]}, space has ambient dimension "
                f"{self.space.ambient_dim}")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def m(self) -> int:
        return self.points.shape[0]

    def to_jsonable(self) -> dict:
        return {"space": self.space.to_string(), "points": self.points.tolist()}

    @staticmethod
    def from_jsonable(obj: dict) -> "PointSet":
        try:
            space = Space.from_string(obj["space"])
            points = obj["points"]
        except (KeyError, TypeError) as e:
            raise InputError(f"point-set JSON must have 'space' and 'points': {e}") from e
        return PointSet(space, np.asarray(points, dtype=float))


def _check_dim(space: Space, x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (space.ambient_dim,):
        raise InputError(
            f"point has shape {arr.shape}, expected ({space.ambient_dim},)")
    return arr


def block_norms(space: Space, x: Sequence[float]) -> np.ndarray:
    """Euclidean norm of each block component of x."""
    arr = _check_dim(space, x)
    if space.is_lp:
        return np.abs(arr)
    return np.array([np.linalg.norm(arr[sl]) for sl in space.block_slices()])


def norm(space: Space, x: Sequence[float]) -> float:
    """The lp-sum norm of x: outer lp norm of the block Euclidean norms.

    Rescales by the largest block norm before exponentiating so large p does
    not overflow or underflow.
    """
    r = block_norms(space, x)
    if math.isinf(space.p):
        return float(r.max())
    top = float(r.max())
    if top == 0.0:
        return 0.0
    return top * float(np.sum((r / top) ** space.p)) ** (1.0 / space.p)


def distance(space: Space, x: Sequence[float], y: Sequence[float]) -> float:
    return norm(space, _check_dim(space, x) - _check_dim(space, y))


def distance_matrix(pointset: PointSet) -> np.ndarray:
    """Symmetric m x m matrix of pairwise distances (zero diagonal)."""
    pts, m = pointset.points, pointset.m
    out = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            out[i, j] = out[j, i] = norm(pointset.space, pts[i] - pts[j])
    return out


def lp_norm(x: Sequence[float], p: float) -> float:
    """Plain lp norm of a coordinate vector (blocks all 1)."""
    if not p >= 1.0:
        raise InputError(f"p must satisfy p >= 1 or p = inf, got {p}")
    r = np.abs(np.asarray(x, dtype=float))
    top = float(r.max()) if r.size else 0.0
    if math.isinf(p) or top == 0.0:
        return top
    return top * float(np.sum((r / top) ** p)) ** (1.0 / p)


def norm_sandwich_check(x: Sequence[float], p: float, q: float,
                        rel_tol: float = _TOL_REL) -> tuple[bool, tuple[float, float, float]]:
    """Check ||x||_q <= ||x||_p <= n^(1/p-1/q) ||x||_q for 1 <= p <= q.

    Returns (holds, (||x||_q, ||x||_p, n^(1/p-1/q)*||x||_q)).
    """
    if not (1.0 <= p):
        raise InputError(f"need p >= 1, got {p}")
    if p > q:
        raise InputError(f"need p <= q, got p={p}, q={q}")
    arr = np.asarray(x, dtype=float)
    n = arr.size
    nq = lp_norm(arr, q)
    np_ = lp_norm(arr, p)
    inv_q = 0.0 if math.isinf(q) else 1.0 / q
    factor = n ** (1.0 / p - inv_q)
    upper = factor * nq
    slack = rel_tol * max(nq, np_, upper) + _TOL_ABS
    holds = (nq <= np_ + slack) and (np_ <= upper + slack)
    return holds, (nq, np_, upper)
