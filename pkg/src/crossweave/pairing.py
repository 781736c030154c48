"""Deterministic construction of a dense pair sequence with singleton sections.

The sequence (x_0, y_0), (x_1, y_1), ... is built greedily so that

* no x-coordinate and no y-coordinate is ever used twice (each vertical and
  horizontal line meets the set at most once),
* every rational eventually appears on each axis,
* every open rational box eventually receives a pair strictly inside it.

A fixed round-robin of three tasks delivers all three at once, with
least-enumeration-index tie-breaking everywhere, so the sequence is a pure
function of its length.  Task 2 walks a canonical enumeration of open boxes
with rational corners (a countable base of the plane's topology), which is
what makes the sequence dense.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .rationals import Rational, enumerate_rational, index_of

Point = tuple[Rational, Rational]


@dataclass(frozen=True)
class Box:
    """Open axis-aligned rectangle with rational corners."""

    x_lo: Rational
    x_hi: Rational
    y_lo: Rational
    y_hi: Rational

    def __post_init__(self) -> None:
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise ValueError("box sides must be nonempty open intervals")

    def strictly_inside(self, x: Rational, y: Rational) -> bool:
        return self.x_lo < x < self.x_hi and self.y_lo < y < self.y_hi


def _index_tuples() -> Iterator[tuple[int, int, int, int]]:
    """All 4-tuples of enumeration indices, by increasing sum, ties lexicographic."""
    total = 0
    while True:
        for i in range(total + 1):
            for j in range(total + 1 - i):
                for k in range(total + 1 - i - j):
                    yield i, j, k, total - i - j - k
        total += 1


_box_cache: list[Box] = []
_box_source = _index_tuples()


def enumerate_box(ordinal: int) -> Box:
    """The ordinal-th open box in the fixed enumeration of the countable base.

    A 4-tuple (i, j, k, l) of enumeration indices denotes the candidate box
    (e(i), e(j)) x (e(k), e(l)); tuples whose intervals come out empty are
    skipped, and the survivors are numbered in order.

    >>> enumerate_box(0)
    Box(x_lo=Fraction(0, 1), x_hi=Fraction(1, 1), y_lo=Fraction(0, 1), y_hi=Fraction(1, 1))
    """
    if ordinal < 0:
        raise ValueError("box ordinal must be nonnegative")
    while len(_box_cache) <= ordinal:
        i, j, k, l = next(_box_source)
        x_lo, x_hi = enumerate_rational(i), enumerate_rational(j)
        y_lo, y_hi = enumerate_rational(k), enumerate_rational(l)
        if x_lo < x_hi and y_lo < y_hi:
            _box_cache.append(Box(x_lo, x_hi, y_lo, y_hi))
    return _box_cache[ordinal]


class Pairing:
    """The growing pair sequence, its coordinate indexes, and its box-coverage log.

    Step n runs task n mod 3:

    * task 0: take the least-index unused rational on each axis (x first),
    * task 1: the same with y first (the picks are independent, but the
      schedule keeps both axes covered at a known rate),
    * task 2: take the next unprocessed box and the least-index unused
      rationals strictly inside its two sides, and log the new pair as that
      box's density witness.

    Because tasks 0 and 1 consume the least unused index outright, every
    index below `_next_x` / `_next_y` is already used; scans may start there.
    """

    def __init__(self) -> None:
        self.pairs: list[Point] = []
        self.level_of_x: dict[Rational, int] = {}
        self.level_of_y: dict[Rational, int] = {}
        self.box_witness: list[int] = []  # box ordinal -> level of its witness pair
        self._next_x = 0
        self._next_y = 0
        self._frozen = False

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> None:
        """Forbid further extension; a frozen prefix is safe to share."""
        self._frozen = True

    def x_coordinate(self, level: int) -> Rational:
        return self.pairs[level][0]

    def y_coordinate(self, level: int) -> Rational:
        return self.pairs[level][1]

    # -- construction ---------------------------------------------------

    def _take_least_unused_x(self) -> Rational:
        while enumerate_rational(self._next_x) in self.level_of_x:
            self._next_x += 1
        value = enumerate_rational(self._next_x)
        self._next_x += 1
        return value

    def _take_least_unused_y(self) -> Rational:
        while enumerate_rational(self._next_y) in self.level_of_y:
            self._next_y += 1
        value = enumerate_rational(self._next_y)
        self._next_y += 1
        return value

    def _take_least_unused_x_inside(self, lo: Rational, hi: Rational) -> Rational:
        index = self._next_x
        while True:
            value = enumerate_rational(index)
            if lo < value < hi and value not in self.level_of_x:
                return value
            index += 1

    def _take_least_unused_y_inside(self, lo: Rational, hi: Rational) -> Rational:
        index = self._next_y
        while True:
            value = enumerate_rational(index)
            if lo < value < hi and value not in self.level_of_y:
                return value
            index += 1

    def extend(self, steps: int) -> None:
        """Append `steps` pairs by the round-robin schedule."""
        if self._frozen:
            raise RuntimeError("pairing is frozen; no further extension")
        for _ in range(steps):
            step = len(self.pairs)
            task = step % 3
            if task == 0:
                x = self._take_least_unused_x()
                y = self._take_least_unused_y()
            elif task == 1:
                y = self._take_least_unused_y()
                x = self._take_least_unused_x()
            else:
                box = enumerate_box(len(self.box_witness))
                x = self._take_least_unused_x_inside(box.x_lo, box.x_hi)
                y = self._take_least_unused_y_inside(box.y_lo, box.y_hi)
                self.box_witness.append(step)
            self.level_of_x[x] = step
            self.level_of_y[y] = step
            self.pairs.append((x, y))

    def ensure_length(self, count: int) -> None:
        if len(self.pairs) < count:
            self.extend(count - len(self.pairs))

    # -- coordinate lookup ----------------------------------------------

    def x_level(self, value: Rational, max_level: int | None = None) -> int:
        """The level whose x-coordinate is `value`, extending as needed.

        A rational of enumeration index i is consumed as an x-coordinate no
        later than step 3*(i+1), because every third step takes the least
        unused index; so the lookup always terminates.  With `max_level`
        set, any answer above it becomes a refusal instead, whether the
        level is already known or would require extension to find.
        """
        level = self.level_of_x.get(value)
        if level is not None:
            if max_level is not None and level > max_level:
                raise RuntimeError(
                    f"level of x-coordinate is {level}, above the cap {max_level}"
                )
            return level
        bound = 3 * (index_of(value) + 1)
        if max_level is not None:
            bound = min(bound, max_level + 1)
        while value not in self.level_of_x and len(self.pairs) < bound:
            self.extend(1)
        level = self.level_of_x.get(value)
        if level is None:
            raise RuntimeError(
                f"level of x-coordinate would exceed max_level={max_level}"
            )
        return level

    def y_level(self, value: Rational, max_level: int | None = None) -> int:
        """Symmetric to `x_level`, for y-coordinates."""
        level = self.level_of_y.get(value)
        if level is not None:
            if max_level is not None and level > max_level:
                raise RuntimeError(
                    f"level of y-coordinate is {level}, above the cap {max_level}"
                )
            return level
        bound = 3 * (index_of(value) + 1)
        if max_level is not None:
            bound = min(bound, max_level + 1)
        while value not in self.level_of_y and len(self.pairs) < bound:
            self.extend(1)
        level = self.level_of_y.get(value)
        if level is None:
            raise RuntimeError(
                f"level of y-coordinate would exceed max_level={max_level}"
            )
        return level
