"""Seeded point-set generators: random and structured/adversarial.

Every generator is deterministic in (q, s, spec): the random kinds run
on a counter-based Philox stream keyed by spec.seed, so identical specs
reproduce identical sets with no global state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .distance import PointSet
from .errors import BadGenerator, FieldMismatch, SizeTooLarge
from .field import FieldContext, sqrt_mod
from .spectral import enumerate_sphere
from . import setio

KINDS = (
    "uniform_random",
    "isotropic_line",
    "sphere_set",
    "subspace",
    "product_interval",
    "from_file",
)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    size: Optional[int] = None
    seed: int = 0
    params: dict[str, Any] = field(default_factory=dict)


def _decode(flat: np.ndarray, q: int, s: int) -> np.ndarray:
    return np.stack(np.unravel_index(flat, (q,) * s), axis=1).astype(np.int64)


def _sorted_set(q: int, s: int, pts: np.ndarray) -> PointSet:
    idx = np.ravel_multi_index(pts.T, (q,) * s)
    return PointSet(q=q, s=s, points=pts[np.argsort(idx, kind="stable")])


def generate(ctx: FieldContext, s: int, spec: GeneratorSpec) -> PointSet:
    """Materialize a point set in F_q^s from a generator spec."""
    q = ctx.q
    if spec.kind == "uniform_random":
        if spec.size is None or spec.size < 1:
            raise BadGenerator("uniform_random needs a positive size")
        if spec.size > q ** s:
            raise SizeTooLarge(f"size {spec.size} exceeds q**s = {q ** s}")
        rng = np.random.Generator(np.random.Philox(key=spec.seed))
        flat = rng.choice(q ** s, size=spec.size, replace=False)
        return _sorted_set(q, s, _decode(flat, q, s))

    if spec.kind == "isotropic_line":
        if s != 2:
            raise BadGenerator("isotropic_line lives in dimension 2")
        if q % 4 != 1:
            raise BadGenerator(f"q = {q} = 3 mod 4 has no square root of -1")
        i = sqrt_mod(ctx, q - 1)
        assert i is not None
        x = np.arange(q, dtype=np.int64)
        return _sorted_set(q, s, np.stack([x, (i * x) % q], axis=1))

    if spec.kind == "sphere_set":
        r = int(spec.params.get("radius", 1))
        sphere = enumerate_sphere(ctx, s, r)
        if sphere.count == 0:
            raise BadGenerator(f"sphere r = {r} is empty at q = {q}, s = {s}")
        pts = sphere.points
        if spec.size is not None:
            if spec.size > sphere.count:
                raise SizeTooLarge(
                    f"size {spec.size} exceeds |S_{r}| = {sphere.count}"
                )
            rng = np.random.Generator(np.random.Philox(key=spec.seed))
            pick = rng.choice(sphere.count, size=spec.size, replace=False)
            pts = pts[np.sort(pick)]
        return _sorted_set(q, s, pts.copy())

    if spec.kind == "subspace":
        k = int(spec.params.get("dim", 1))
        if not 1 <= k <= s:
            raise BadGenerator(f"subspace dim {k} outside [1, {s}]")
        flat = np.arange(q ** k, dtype=np.int64)
        pts = np.zeros((q ** k, s), dtype=np.int64)
        pts[:, :k] = _decode(flat, q, k)
        return _sorted_set(q, s, pts)

    if spec.kind == "product_interval":
        lengths = [int(v) for v in spec.params.get("lengths", [])]
        if len(lengths) != s or any(not 1 <= v <= q for v in lengths):
            raise BadGenerator(
                f"product_interval needs {s} side lengths in [1, {q}]"
            )
        grids = np.meshgrid(*[np.arange(v, dtype=np.int64) for v in lengths],
                            indexing="ij")
        pts = np.stack([g.ravel() for g in grids], axis=1)
        return _sorted_set(q, s, pts)

    if spec.kind == "from_file":
        path = spec.params.get("path")
        if not path:
            raise BadGenerator("from_file needs params['path']")
        E = setio.read_pointset(path)
        if E.q != q or E.s != s:
            raise FieldMismatch(
                f"file declares (q={E.q}, s={E.s}), expected (q={q}, s={s})"
            )
        return E

    raise BadGenerator(f"unknown generator kind {spec.kind!r}")
