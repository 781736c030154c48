"""Continuous interpolants on a cross of lines, with prescribed anchor values.

A level-n cross is the vertical line through x_n together with the
horizontal line through y_n.  The level-n function must take the value 1 at
(x_n, y_n) and prescribed values in [0, 1) at the finitely many points where
the cross meets the earlier lines.  We realize it as the product of

* a hat: max(0, 1 - distance to the nearest anchor), and
* a tent interpolant: one tent of radius r per anchor, scaled by the
  prescribed value, with r small enough that the tents' supports are
  pairwise disjoint.

All distances are L-infinity (max of coordinate distances), which keeps
every computed value rational.  The product is 1 exactly at (x_n, y_n),
matches every prescribed anchor value exactly, stays within [0, 1], and is
(1 + 1/r)-Lipschitz on the whole plane.

Level 0 has a single anchor and is special: its function is the bare hat
(multiplying by the tent would square the slope), which is 1-Lipschitz.

Evaluation comes in two flavors kept deliberately separate: `hat_value` and
`tent_sum` are direct transcriptions of the definitions (linear scans, used
as the reference path in tests), while `CrossFunction.value_at` exploits the
disjoint supports: anchors on each line of the cross are sorted, so the
nearest anchor and the at-most-one tent covering a point are found by
bisection.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .pairing import Point
from .rationals import Rational

ZERO = Fraction(0)
ONE = Fraction(1)


def linf(a: Point, b: Point) -> Rational:
    """L-infinity distance between two points of the rational plane."""
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


@dataclass(frozen=True)
class AnchorSet:
    """Finitely many distinct points, each carrying a value in [0, 1]."""

    points: tuple[Point, ...]
    values: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.values):
            raise ValueError("one value per anchor point required")
        if len(set(self.points)) != len(self.points):
            raise ValueError("anchor points must be pairwise distinct")
        if any(not (ZERO <= v <= ONE) for v in self.values):
            raise ValueError("anchor values must lie in [0, 1]")

    def __len__(self) -> int:
        return len(self.points)

    def items(self) -> tuple[tuple[Point, Rational], ...]:
        return tuple(zip(self.points, self.values))


def min_pairwise_distance(points: tuple[Point, ...]) -> Rational | None:
    """Smallest L-infinity distance over all pairs; None if fewer than two points.

    Quadratic on purpose: this is the reference implementation against which
    the sorted-gap shortcut used by `build_cross` is tested.
    """
    best: Rational | None = None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = linf(points[i], points[j])
            if best is None or d < best:
                best = d
    return best


def hat_value(point: Point, anchor_points: tuple[Point, ...]) -> Rational:
    """max(0, 1 - distance to the nearest anchor); reference implementation."""
    if not anchor_points:
        raise ValueError("hat needs at least one anchor")
    nearest = min(linf(point, a) for a in anchor_points)
    return max(ZERO, ONE - nearest)


def tent_sum(point: Point, anchors: AnchorSet, radius: Rational) -> Rational:
    """Sum of disjoint-support tents, one per anchor; reference implementation.

    Each tent is value * max(0, 1 - distance/radius).  The radius must keep
    the supports disjoint (at most half the minimum pairwise anchor
    distance), so at most one summand is nonzero and the sum interpolates
    the anchor values exactly.
    """
    if radius <= 0:
        raise ValueError("tent radius must be positive")
    separation = min_pairwise_distance(anchors.points)
    if separation is not None and 2 * radius > separation:
        raise ValueError("tent radius too large: supports would overlap")
    total = ZERO
    for anchor, value in zip(anchors.points, anchors.values):
        d = linf(point, anchor)
        if d < radius:
            total += value * (ONE - d / radius)
    return total


def base_value(x0: Rational, y0: Rational, point: Point) -> Rational:
    """The level-0 function: a bare unit hat centered at (x0, y0).

    On the vertical line this is max(0, 1 - |y - y0|), on the horizontal
    line max(0, 1 - |x - x0|); both agree with the L-infinity hat there.
    """
    px, py = point
    if px != x0 and py != y0:
        raise ValueError("point lies off the level-0 cross")
    return max(ZERO, ONE - linf(point, (x0, y0)))


def _nearest(sorted_values: tuple[Rational, ...], value: Rational) -> tuple[int, Rational]:
    """Index and distance of the entry of `sorted_values` closest to `value`."""
    pos = bisect_left(sorted_values, value)
    if pos == 0:
        return 0, sorted_values[0] - value
    if pos == len(sorted_values):
        return pos - 1, value - sorted_values[-1]
    left_gap = value - sorted_values[pos - 1]
    right_gap = sorted_values[pos] - value
    if left_gap <= right_gap:
        return pos - 1, left_gap
    return pos, right_gap


class CrossFunction:
    """One level's interpolant, with precomputed data for fast exact evaluation.

    Immutable after construction; build instances through `build_cross`.
    """

    def __init__(
        self,
        level: int,
        column_x: Rational,
        row_y: Rational,
        anchor_set: AnchorSet,
        radius: Rational,
        lipschitz_bound: Rational,
        column_line: tuple[tuple[Rational, ...], tuple[Rational, ...]],
        row_line: tuple[tuple[Rational, ...], tuple[Rational, ...]],
    ) -> None:
        self.level = level
        self.column_x = column_x
        self.row_y = row_y
        self.anchor_set = anchor_set
        self.radius = radius
        self.lipschitz_bound = lipschitz_bound
        # anchors on the vertical line, sorted by y, with parallel values
        self._column_ys, self._column_values = column_line
        # anchors on the horizontal line (excluding the center), sorted by x
        self._row_xs, self._row_values = row_line

    def on_cross(self, point: Point) -> bool:
        return point[0] == self.column_x or point[1] == self.row_y

    def value_at(self, point: Point) -> Rational:
        """Exact value at a point of the cross.

        The hat factor needs only the distance to the nearest anchor, and
        anchors live on two axis-parallel lines, so per line the minimum is
        max(line offset, nearest coordinate gap) with the gap found by
        bisection.  The tent factor needs the at-most-one anchor within the
        tent radius; disjointness of supports means only the nearest anchor
        of each line can qualify.
        """
        if not self.on_cross(point):
            raise ValueError(f"point lies off the level-{self.level} cross")
        if self.level == 0:
            return base_value(self.column_x, self.row_y, point)
        px, py = point
        column_offset = abs(px - self.column_x)
        row_offset = abs(py - self.row_y)
        near_column_index, near_column_gap = _nearest(self._column_ys, py)
        near_row_index, near_row_gap = _nearest(self._row_xs, px)
        nearest = min(
            max(column_offset, near_column_gap), max(row_offset, near_row_gap)
        )
        if nearest >= 1:
            return ZERO
        hat = ONE - nearest
        radius = self.radius
        tent = ZERO
        if column_offset < radius:
            d = max(column_offset, near_column_gap)
            if d < radius:
                tent = self._column_values[near_column_index] * (ONE - d / radius)
        if tent == ZERO and row_offset < radius:
            d = max(row_offset, near_row_gap)
            if d < radius:
                tent = self._row_values[near_row_index] * (ONE - d / radius)
        return hat * tent


def reference_value(cross: CrossFunction, point: Point) -> Rational:
    """hat * tent computed by the linear-scan reference ops; for cross-checks."""
    if not cross.on_cross(point):
        raise ValueError(f"point lies off the level-{cross.level} cross")
    if cross.level == 0:
        return base_value(cross.column_x, cross.row_y, point)
    return hat_value(point, cross.anchor_set.points) * tent_sum(
        point, cross.anchor_set, cross.radius
    )


def _min_anchor_distance(
    xs: tuple[Rational, ...], ys: tuple[Rational, ...]
) -> Rational:
    """Minimum pairwise L-infinity distance among a level's anchors, by sorting.

    With anchors (x_n, y_i) for i <= n and (x_i, y_n) for i < n, every pair
    on a shared line is separated by a coordinate gap, so those minima are
    adjacent gaps of the sorted coordinate lists (the center (x_n, y_n) lies
    on both lines).  A vertical-line anchor and a horizontal-line anchor not
    sharing a line are separated by max(|x_n - x_j|, |y_n - y_i|), minimized
    coordinatewise.  Requires level >= 1.
    """
    center_x, center_y = xs[-1], ys[-1]
    sorted_xs = sorted(xs)
    sorted_ys = sorted(ys)
    gap_x = min(b - a for a, b in zip(sorted_xs, sorted_xs[1:]))
    gap_y = min(b - a for a, b in zip(sorted_ys, sorted_ys[1:]))
    center_to_x = min(abs(center_x - x) for x in xs[:-1])
    center_to_y = min(abs(center_y - y) for y in ys[:-1])
    return min(gap_x, gap_y, max(center_to_x, center_to_y))


def build_cross(
    level: int,
    xs: tuple[Rational, ...],
    ys: tuple[Rational, ...],
    column_params: tuple[Rational, ...],
    row_params: tuple[Rational, ...],
) -> CrossFunction:
    """Build the level-n interpolant from coordinates x_0..x_n, y_0..y_n.

    `column_params[i]` is the prescribed value at (x_n, y_i) and
    `row_params[i]` the one at (x_i, y_n), both required to lie in [0, 1);
    the center (x_n, y_n) always gets value 1.  The tent radius is
    min(1, half the minimum pairwise anchor distance) and the recorded
    Lipschitz bound is 1 + 1/radius (1 for the bare hat at level 0).
    """
    if len(xs) != level + 1 or len(ys) != level + 1:
        raise ValueError("need exactly level + 1 coordinates per axis")
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("coordinates must be pairwise distinct per axis")
    if len(column_params) != level or len(row_params) != level:
        raise ValueError("need exactly one parameter per earlier level")
    for value in (*column_params, *row_params):
        if not (ZERO <= value < ONE):
            raise ValueError("prescribed values must lie in [0, 1)")

    center_x, center_y = xs[-1], ys[-1]
    points = tuple((center_x, y) for y in ys) + tuple((x, center_y) for x in xs[:-1])
    values = (*column_params, ONE, *row_params)
    anchor_set = AnchorSet(points, values)

    if level == 0:
        radius = ONE
        lipschitz = ONE
        column_line: tuple[tuple[Rational, ...], tuple[Rational, ...]] = (
            (center_y,),
            (ONE,),
        )
        row_line: tuple[tuple[Rational, ...], tuple[Rational, ...]] = ((), ())
    else:
        radius = min(ONE, _min_anchor_distance(xs, ys) / 2)
        lipschitz = ONE + ONE / radius
        column_sorted = sorted(zip(ys, (*column_params, ONE)))
        row_sorted = sorted(zip(xs[:-1], row_params))
        column_line = (
            tuple(y for y, _ in column_sorted),
            tuple(v for _, v in column_sorted),
        )
        row_line = (
            tuple(x for x, _ in row_sorted),
            tuple(v for _, v in row_sorted),
        )
    return CrossFunction(
        level,
        center_x,
        center_y,
        anchor_set,
        radius,
        lipschitz,
        column_line,
        row_line,
    )
