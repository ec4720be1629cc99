"""Edge crossings and the quarter-stub partial edge drawing."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..drawing import Drawing, check
from ..geometry import EPS, KIND_CODES, CrossingKind, Point, Segment, classify_segment_pairs

_PAIR_CHUNK = 250_000
PROPER = KIND_CODES[CrossingKind.PROPER]
OVERLAP = KIND_CODES[CrossingKind.COLLINEAR_OVERLAP]


def _pair_codes(starts: np.ndarray, ends: np.ndarray, exclude_group=None):
    """Yield ``(i, j, codes)`` chunks over all segment pairs ``i < j``.

    Pairs whose segments carry the same ``exclude_group`` label are skipped.
    """
    m = len(starts)
    if m < 2:
        return
    lo = np.minimum(starts, ends)
    hi = np.maximum(starts, ends)
    slack = EPS * (hi - lo).max(axis=1)
    i_all, j_all = np.triu_indices(m, 1)
    for s in range(0, len(i_all), _PAIR_CHUNK):
        i, j = i_all[s:s + _PAIR_CHUNK], j_all[s:s + _PAIR_CHUNK]
        # bounding boxes that miss each other cannot touch
        tol = np.maximum(slack[i], slack[j])[:, None]
        hit = (lo[i] <= hi[j] + tol).all(axis=1) & (lo[j] <= hi[i] + tol).all(axis=1)
        if exclude_group is not None:
            hit &= exclude_group[i] != exclude_group[j]
        i, j = i[hit], j[hit]
        if len(i):
            yield i, j, classify_segment_pairs(starts[i], ends[i], starts[j], ends[j])


def _edge_segments(drawing: Drawing):
    e = drawing.graph.edge_array()
    return drawing.positions[e[:, 0]], drawing.positions[e[:, 1]]


def crossing_pairs(drawing: Drawing) -> dict[str, list[tuple[int, int]]]:
    """Edge-index pairs in ``proper`` and ``collinear_overlap`` relation."""
    check(drawing)
    a, b = _edge_segments(drawing)
    proper, overlap = [], []
    for i, j, codes in _pair_codes(a, b):
        proper.extend(zip(i[codes == PROPER].tolist(), j[codes == PROPER].tolist()))
        overlap.extend(zip(i[codes == OVERLAP].tolist(), j[codes == OVERLAP].tolist()))
    return {"proper": proper, "collinear_overlap": overlap}


def count_crossings(drawing: Drawing) -> int:
    """Number of unordered edge pairs that cross properly.

    Collinear overlaps are not crossings; see :func:`crossing_pairs`.
    """
    check(drawing)
    a, b = _edge_segments(drawing)
    return int(sum((codes == PROPER).sum() for _, _, codes in _pair_codes(a, b)))


def count_overlaps(drawing: Drawing) -> int:
    check(drawing)
    a, b = _edge_segments(drawing)
    return int(sum((codes == OVERLAP).sum() for _, _, codes in _pair_codes(a, b)))


@dataclass(frozen=True, eq=False)
class StubSet:
    """Two quarter-length stubs per edge, anchored at the endpoints.

    ``starts[k]``/``ends[k]`` hold stub ``k``; stubs ``2e`` and ``2e + 1``
    belong to edge ``e`` (at its first and second endpoint).
    """

    starts: np.ndarray
    ends: np.ndarray

    def __len__(self):
        return len(self.starts)

    def segments(self) -> list[Segment]:
        return [Segment(Point(*s), Point(*t)) for s, t in zip(self.starts, self.ends)]

    def edge_of(self, k: int) -> int:
        return k // 2


def quarter_stubs(drawing: Drawing) -> StubSet:
    a, b = _edge_segments(drawing)
    q = (b - a) / 4
    starts = np.empty((2 * len(a), 2))
    ends = np.empty_like(starts)
    starts[0::2], ends[0::2] = a, a + q
    starts[1::2], ends[1::2] = b, b - q
    return StubSet(starts, ends)


def quarter_shped(drawing: Drawing) -> tuple[StubSet, int]:
    """Quarter-length stubs of every edge and the proper crossings among them.

    Only stubs of different edges are compared.
    """
    check(drawing)
    stubs = quarter_stubs(drawing)
    group = np.arange(len(stubs)) // 2
    crossings = sum(
        int((codes == PROPER).sum())
        for _, _, codes in _pair_codes(stubs.starts, stubs.ends, exclude_group=group)
    )
    return stubs, crossings
