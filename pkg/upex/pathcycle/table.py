"""
Four-index table of the path dynamic program.

Positions ``0..N-1`` index the vertices along a path. Entry
``t(i, j, m, M)`` with ``i <= m, M <= j`` and ``m != M`` is true iff the
subpath between positions ``i`` and ``j`` has an upward planar drawing
extending its pins in which position ``m`` is strictly lowest and
position ``M`` strictly highest.

Entries are filled by increasing span. A monotone subpath only admits its
two ends as extremes. Otherwise the entry is split at the extremes:

* neither extreme is an end: three pieces meeting at ``m`` and ``M``
* one extreme is an end: two pieces meeting at the other extreme
* both extremes are ends: three pieces meeting at an inner sink and an
  inner source whose embedding lists agree in orientation

The split checks only need the four projections in which one end of a
piece is lowest or highest and the other extreme is free. Those and the
two end-to-end entries are kept as ``N x N`` arrays; the full entry set is
kept as one ``L x L`` block per subpath. All subpaths of one span only
depend on shorter ones, so a span is filled as a single batch.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

RULE_MONOTONE = "monotone"
RULE_INTERIOR = "interior-extremes"
RULE_ONE_END = "one-end-extreme"
RULE_BOTH_ENDS = "both-ends-extreme"

_NO_PIN = np.iinfo(np.int64).max


class DpTable:
    """
    Args:
        ranks: Rank of the pinned y-coordinate per position, -1 if unpinned
        forward: ``forward[k]`` is True when the edge between positions
            ``k`` and ``k + 1`` points to ``k + 1``
        orient: Per position, 1 if the embedding lists the lower-position
            neighbour first, 0 if it lists the higher one first, -1 where
            the position is not an inner source or sink
        max_span: Largest ``j - i`` to fill; defaults to the whole path
    """

    def __init__(
        self,
        ranks: Sequence[int],
        forward: Sequence[bool],
        orient: Sequence[int],
        max_span: Optional[int] = None,
    ):
        size = len(ranks)
        if len(forward) != size - 1 or len(orient) != size:
            raise ValueError("ranks, forward and orient must describe the same path")
        self.size = size
        self.ranks = np.asarray(ranks, dtype=np.int64)
        self.forward = np.asarray(forward, dtype=bool)
        self.orient = np.asarray(orient, dtype=np.int8)
        self.max_span = size - 1 if max_span is None else min(max_span, size - 1)

        self._forward_prefix = np.concatenate(([0], np.cumsum(self.forward, dtype=np.int64)))
        self._same_side = (self.orient[:, None] == self.orient[None, :]) & (self.orient[:, None] >= 0)

        # span -> (size - span) x L x L array, row i holding the block of (i, i + span)
        self.spans: Dict[int, np.ndarray] = {}
        self.lowest = np.full((size, size), -1, dtype=np.int64)
        self.highest = np.full((size, size), -1, dtype=np.int64)
        # t(i, j, i, j) and t(i, j, j, i)
        self.low_high = np.zeros((size, size), dtype=bool)
        self.high_low = np.zeros((size, size), dtype=bool)
        # t(i, j, j, .), t(i, j, ., j), t(i, j, i, .), t(i, j, ., i)
        self._low_right = np.zeros((size, size), dtype=bool)
        self._high_right = np.zeros((size, size), dtype=bool)
        self._low_left = np.zeros((size, size), dtype=bool)
        self._high_left = np.zeros((size, size), dtype=bool)
        self.filled = False

    def direction(self, i: int, j: int) -> int:
        """1 if the subpath is directed from i to j, -1 if from j to i, else 0"""
        count = int(self._forward_prefix[j] - self._forward_prefix[i])
        if count == j - i:
            return 1
        if count == 0:
            return -1
        return 0

    def fill(self) -> "DpTable":
        for span in range(1, self.max_span + 1):
            self._fill_span(span)
        self.filled = True
        return self

    def _fill_span(self, span: int):
        """All entries of the subpaths with ``span`` edges, one batch per span"""
        L = span + 1
        count = self.size - span
        I = np.arange(count)
        J = I + span
        pins = self.ranks[I[:, None] + np.arange(L)[None, :]]
        pinned = pins >= 0
        any_pin = pinned.any(axis=1)
        low = np.where(pinned, pins, _NO_PIN).min(axis=1)
        high = np.where(pinned, pins, -1).max(axis=1)
        self.lowest[I[any_pin], J[any_pin]] = low[any_pin]
        self.highest[I[any_pin], J[any_pin]] = high[any_pin]

        block = np.zeros((count, L, L), dtype=bool)
        forward = self._forward_prefix[J] - self._forward_prefix[I]
        up, down = forward == span, forward == 0

        # each pin beyond every earlier one (up) or below every earlier one (down)
        seen_max = np.maximum.accumulate(np.where(pinned, pins, -1), axis=1)
        seen_min = np.minimum.accumulate(np.where(pinned, pins, _NO_PIN), axis=1)
        before_max = np.concatenate((np.full((count, 1), -1), seen_max[:, :-1]), axis=1)
        before_min = np.concatenate((np.full((count, 1), _NO_PIN), seen_min[:, :-1]), axis=1)
        block[up, 0, -1] = np.all(~pinned | (pins > before_max), axis=1)[up]
        block[down, -1, 0] = np.all(~pinned | (pins < before_min), axis=1)[down]

        mixed = ~(up | down)
        if mixed.any():
            block[mixed] = self._split_blocks(I[mixed], span, pins[mixed], low[mixed], high[mixed])

        self.spans[span] = block
        self.low_high[I, J], self.high_low[I, J] = block[:, 0, -1], block[:, -1, 0]
        self._low_right[I, J] = block[:, -1, :].any(axis=1)
        self._high_right[I, J] = block[:, :, -1].any(axis=1)
        self._low_left[I, J] = block[:, 0, :].any(axis=1)
        self._high_left[I, J] = block[:, :, 0].any(axis=1)

    def _split_blocks(self, I: np.ndarray, span: int, pins: np.ndarray, low: np.ndarray, high: np.ndarray) -> np.ndarray:
        L = span + 1
        J = I + span
        i, j = I[:, None], J[:, None]
        inner = i + 1 + np.arange(L - 2)[None, :]
        rows, cols = inner[:, :, None], inner[:, None, :]
        min_ok = (pins < 0) | (pins == low[:, None])
        max_ok = (pins < 0) | (pins == high[:, None])
        lr, hr = self._low_right[i, inner], self._high_right[i, inner]
        ll, hl = self._low_left[inner, j], self._high_left[inner, j]
        inner_min, inner_max = min_ok[:, 1:-1], max_ok[:, 1:-1]
        low_high, high_low = self.low_high[rows, cols], self.high_low[rows, cols]

        block = np.zeros((len(I), L, L), dtype=bool)
        # axis 1 is m, axis 2 is M
        block[:, 1:-1, 1:-1] = (
            ((lr & inner_min)[:, :, None] & low_high & (hl & inner_max)[:, None, :])
            | ((ll & inner_min)[:, :, None] & self.high_low[cols, rows] & (hr & inner_max)[:, None, :])
        )
        block[:, 0, 1:-1] = min_ok[:, :1] & self.low_high[i, inner] & hl
        block[:, -1, 1:-1] = min_ok[:, -1:] & self.high_low[inner, j] & hr
        block[:, 1:-1, 0] = max_ok[:, :1] & self.high_low[i, inner] & ll
        block[:, 1:-1, -1] = max_ok[:, -1:] & self.low_high[inner, j] & lr

        same = self._same_side[rows, cols]
        block[:, 0, -1] = min_ok[:, 0] & max_ok[:, -1] & np.any(
            self.low_high[i, inner][:, :, None] & high_low & self.low_high[inner, j][:, None, :] & same,
            axis=(1, 2),
        )
        block[:, -1, 0] = min_ok[:, -1] & max_ok[:, 0] & np.any(
            self.high_low[i, inner][:, :, None] & low_high & self.high_low[inner, j][:, None, :] & same,
            axis=(1, 2),
        )
        return block

    @property
    def blocks(self) -> Dict[Tuple[int, int], np.ndarray]:
        """The ``L x L`` block of every filled subpath, keyed by ``(i, j)``"""
        return {(i, i + span): block[i] for span, block in self.spans.items() for i in range(len(block))}

    def _block(self, i: int, j: int) -> Optional[np.ndarray]:
        batch = self.spans.get(j - i)
        if batch is None or not 0 <= i < len(batch):
            return None
        return batch[i]

    def entry(self, i: int, j: int, m: int, M: int) -> bool:
        block = self._block(i, j)
        if block is None or m == M or not (i <= m <= j and i <= M <= j):
            return False
        return bool(block[m - i, M - i])

    def low_at_right(self, i: int, j: int) -> bool:
        """t(i, j, j, .)"""
        return bool(self._low_right[i, j])

    def high_at_right(self, i: int, j: int) -> bool:
        """t(i, j, ., j)"""
        return bool(self._high_right[i, j])

    def low_at_left(self, i: int, j: int) -> bool:
        """t(i, j, i, .)"""
        return bool(self._low_left[i, j])

    def high_at_left(self, i: int, j: int) -> bool:
        """t(i, j, ., i)"""
        return bool(self._high_left[i, j])

    def true_entries(self, i: int, j: int) -> List[Tuple[int, int]]:
        """All (m, M) with t(i, j, m, M) true, in lexicographic order"""
        block = self._block(i, j)
        if block is None:
            return []
        return [(i + int(a), i + int(b)) for a, b in np.argwhere(block)]

    def _some_high(self, i: int, j: int, m: int) -> int:
        return next(M for M in range(i, j + 1) if self.entry(i, j, m, M))

    def _some_low(self, i: int, j: int, M: int) -> int:
        return next(m for m in range(i, j + 1) if self.entry(i, j, m, M))

    def explain(self, i: int, j: int, m: int, M: int) -> Dict[str, Any]:
        """
        The decomposition behind a true entry, as nested
        ``{"entry", "rule", "splits"}`` dictionaries.

        Raises:
            KeyError: the entry is false
        """
        if not self.entry(i, j, m, M):
            raise KeyError((i, j, m, M))
        node: Dict[str, Any] = {"entry": [i, j, m, M], "rule": RULE_MONOTONE, "splits": []}
        if self.direction(i, j):
            return node

        if (m, M) == (i, j) or (m, M) == (j, i):
            node["rule"] = RULE_BOTH_ENDS
            node["splits"] = [self.explain(*e) for e in self._both_ends_split(i, j, m == i)]
        elif i < m < j and i < M < j:
            node["rule"] = RULE_INTERIOR
            if m < M:
                parts = [(i, m, m, self._some_high(i, m, m)), (m, M, m, M), (M, j, self._some_low(M, j, M), M)]
            else:
                parts = [(i, M, self._some_low(i, M, M), M), (M, m, m, M), (m, j, m, self._some_high(m, j, m))]
            node["splits"] = [self.explain(*e) for e in parts]
        else:
            node["rule"] = RULE_ONE_END
            if m == i:
                parts = [(i, M, i, M), (M, j, self._some_low(M, j, M), M)]
            elif m == j:
                parts = [(i, M, self._some_low(i, M, M), M), (M, j, j, M)]
            elif M == i:
                parts = [(i, m, m, i), (m, j, m, self._some_high(m, j, m))]
            else:
                parts = [(i, m, m, self._some_high(i, m, m)), (m, j, m, j)]
            node["splits"] = [self.explain(*e) for e in parts]
        return node

    def _both_ends_split(self, i: int, j: int, low_first: bool) -> List[Tuple[int, int, int, int]]:
        same = self._same_side
        for a in range(i + 1, j - 1):
            for b in range(a + 1, j):
                if not same[a, b]:
                    continue
                if low_first and self.low_high[i, a] and self.high_low[a, b] and self.low_high[b, j]:
                    return [(i, a, i, a), (a, b, b, a), (b, j, b, j)]
                if not low_first and self.high_low[i, a] and self.low_high[a, b] and self.high_low[b, j]:
                    return [(i, a, a, i), (a, b, a, b), (b, j, j, b)]
        raise KeyError((i, j))
