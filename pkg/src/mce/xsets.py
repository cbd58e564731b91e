"""Compact per-traversal representation of the excluded set.

The excluded set X splits into two parts. X_P holds excluded vertices
that came from the root's candidate set P: it can grow and shrink, is
bounded by |P|, and is kept as one bit mask per level. X_X holds
excluded vertices inherited from the root's X: it only ever shrinks, so
a single array serves every level, with a per-level end pointer marking
how much of the prefix is still live. Descending partitions the live
prefix (kept members first, stably); backtracking just drops the level
pointer, since the restored level's members all sit before its pointer.
"""

from __future__ import annotations

from typing import Sequence

from mce.bitset import round_up_capacity


class XState:
    """Per-worker excluded-set state for one subtree traversal.

    ``xx`` stores caller-chosen tokens (global ids or row positions);
    this class only shuffles them. Levels run 0..max_levels-1 where
    max_levels covers the deepest node the candidate-set size allows.
    """

    __slots__ = ("xp_entry", "xp_work", "xx", "lpx", "depth", "capacity_bits")

    def __init__(self, root_p_size: int, root_x: Sequence[int],
                 capacity_bits: int | None = None) -> None:
        levels = root_p_size + 2
        self.xp_entry = [0] * levels
        self.xp_work = [0] * levels
        self.xx = list(root_x)
        self.lpx = [0] * levels
        self.lpx[0] = len(self.xx)
        self.depth = 0
        self.capacity_bits = (capacity_bits if capacity_bits is not None
                              else round_up_capacity(root_p_size))

    @property
    def levels(self) -> int:
        return len(self.lpx)

    def seed_level0(self, xp_bits: int) -> None:
        """Install a nonempty X_P at the root (used when resuming a donated branch)."""
        self.xp_entry[0] = xp_bits
        self.xp_work[0] = xp_bits

    def prefix(self) -> list[int]:
        """The live X_X tokens at the current level (a copy)."""
        return self.xx[: self.lpx[self.depth]]

    def descend(self, xp_next: int, keep: Sequence[bool]) -> None:
        """Enter the next level.

        ``xp_next`` is the child's X_P mask, computed by the caller with
        bitset algebra. ``keep`` flags, per live prefix slot, whether that
        X_X member is adjacent to the branch vertex. The live prefix is
        stably partitioned: kept members move to the front.
        """
        level = self.depth
        if level + 1 >= len(self.lpx):
            raise ValueError("descend past the deepest level")
        end = self.lpx[level]
        if len(keep) != end:
            raise ValueError("keep mask length does not match live prefix")
        kept = []
        dropped = []
        for token, flag in zip(self.xx[:end], keep):
            (kept if flag else dropped).append(token)
        self.xx[:end] = kept + dropped
        self.depth = level + 1
        self.lpx[self.depth] = len(kept)
        self.xp_entry[self.depth] = xp_next
        self.xp_work[self.depth] = xp_next

    def backtrack(self) -> None:
        if self.depth == 0:
            raise ValueError("backtrack below the root level")
        self.depth -= 1

    def move_branch_vertex(self, v: int) -> None:
        """Record that branch vertex ``v`` (a P-local id) is now excluded."""
        self.xp_work[self.depth] |= 1 << v

    def x_empty(self) -> bool:
        return self.xp_work[self.depth] == 0 and self.lpx[self.depth] == 0

    def allocation_words(self) -> int:
        """Nominal allocation in 64-bit words across every level.

        Two bit masks per level at the word-rounded capacity, the shared
        X_X array plus an equal-sized partition scratch allowance, and
        one level pointer per level.
        """
        xp_words = 2 * self.levels * (round_up_capacity(self.capacity_bits) // 64)
        xx_words = 2 * len(self.xx)
        return xp_words + xx_words + self.levels
