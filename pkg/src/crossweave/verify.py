"""Desk-scale certification of every property the construction promises.

Each check returns a `Report` whose equalities are exact rational
equalities; the only tolerance anywhere is the explicit eps of the image
density search.  A failing report always carries a concrete counter-witness
(points, levels, and values, serialized as "p/q").

The checks deliberately re-derive what they test through independent routes:

* `oracle_eval` recomputes the function by direct recursion with no memo
  table, linear-scan hats and tents, and brute-force tent radii, so it
  shares no evaluation code with the fast path it checks.  Its cost grows
  exponentially with the level, so it refuses above `MAX_ORACLE_LEVEL`.
* `check_welldefined` compares the defining column route against the row
  route that the construction must make equivalent.
* `section_continuity_check` certifies each section against the recorded
  per-level Lipschitz bound.
* `nonfeeble_witness` certifies that a value interval strictly between the
  diagonal value 1 and some attained value pulls back to a set with empty
  interior at box scale K: every basic box holds a diagonal point mapping
  exactly to 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .pairing import Pairing, enumerate_box
from .rationals import Rational, format_rational
from .weave import WovenFunction

DEFAULT_SEED = 1729
MAX_ORACLE_LEVEL = 12

ZERO = Fraction(0)
ONE = Fraction(1)

_DENOMINATOR_POOL = (1, 2, 3, 4, 8, 16, 64)


def random_rational(rng: random.Random) -> Rational:
    """A small random rational in [-8, 8] with a mixed denominator."""
    denominator = rng.choice(_DENOMINATOR_POOL)
    numerator = rng.randint(-8 * denominator, 8 * denominator)
    return Fraction(numerator, denominator)


def _plain(value: object) -> object:
    """Recursively turn rationals into 'p/q' strings for serialization."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


@dataclass
class Report:
    """Outcome of one check: name, verdict, the bounds used, and witnesses."""

    name: str
    passed: bool
    bounds: dict[str, object] = field(default_factory=dict)
    witnesses: list[dict[str, object]] = field(default_factory=list)

    def to_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "passed": self.passed,
            "bounds": _plain(self.bounds),
            "witnesses": _plain(self.witnesses),
        }

    def text_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        parts = [f"{verdict} {self.name}"]
        parts.extend(f"{k}={_plain(v)}" for k, v in self.bounds.items())
        for witness in self.witnesses[:3]:
            inner = " ".join(f"{k}={_plain(v)}" for k, v in witness.items())
            parts.append(f"[{inner}]")
        return "  ".join(parts)


# -- independent oracle ----------------------------------------------------


def _oracle_cross_value(pairing: Pairing, level: int, point: tuple) -> Rational:
    """Level-`level` value by direct recursion; everything recomputed in place.

    Parameters of earlier levels are re-derived at every use (no sharing
    with the memoized tower), the tent radius is half the brute-force
    minimum pairwise anchor distance capped at 1, and hat and tent are
    linear scans over the anchor list.
    """
    center_x = pairing.x_coordinate(level)
    center_y = pairing.y_coordinate(level)
    px, py = point
    if px != center_x and py != center_y:
        raise ValueError(f"point lies off the level-{level} cross")
    if level == 0:
        return max(ZERO, ONE - max(abs(px - center_x), abs(py - center_y)))

    anchors: list[tuple[Rational, Rational]] = []
    values: list[Rational] = []
    for i in range(level + 1):
        y_i = pairing.y_coordinate(i)
        anchors.append((center_x, y_i))
        if i == level:
            values.append(ONE)
        else:
            values.append(_oracle_cross_value(pairing, i, (center_x, y_i)))
    for i in range(level):
        x_i = pairing.x_coordinate(i)
        anchors.append((x_i, center_y))
        values.append(_oracle_cross_value(pairing, i, (x_i, center_y)))

    separation = min(
        max(abs(ax - bx), abs(ay - by))
        for i, (ax, ay) in enumerate(anchors)
        for bx, by in anchors[i + 1 :]
    )
    radius = min(ONE, separation / 2)
    distances = [max(abs(px - ax), abs(py - ay)) for ax, ay in anchors]
    hat = max(ZERO, ONE - min(distances))
    tent = sum(
        (value * (ONE - d / radius) for value, d in zip(values, distances) if d < radius),
        ZERO,
    )
    return hat * tent


def oracle_eval(
    pairing: Pairing,
    x: Rational,
    y: Rational,
    max_level: int = MAX_ORACLE_LEVEL,
) -> Rational:
    """Value at (x, y) by the exponential direct recursion.

    Refuses when the level of x exceeds `max_level`; the recursion visits
    on the order of 3^level nodes, so there is no honest way to go deep.
    """
    if max_level > MAX_ORACLE_LEVEL:
        raise ValueError(f"oracle is exponential; max_level capped at {MAX_ORACLE_LEVEL}")
    level = pairing.x_level(x, max_level=max_level)
    return _oracle_cross_value(pairing, level, (x, y))


# -- checks ----------------------------------------------------------------


def check_singleton_image(woven: WovenFunction, levels: int = 512) -> Report:
    """Every diagonal pair must evaluate to exactly 1."""
    woven.build_to(levels - 1)
    failures = []
    for n in range(levels):
        x, y = woven.pairing.pairs[n]
        value = woven.value(x, y)
        if value != ONE:
            failures.append({"level": n, "x": x, "y": y, "value": value})
    last = levels - 1
    witnesses = failures or [
        {
            "level": last,
            "x": woven.pairing.x_coordinate(last),
            "y": woven.pairing.y_coordinate(last),
            "value": ONE,
        }
    ]
    return Report(
        name="singleton_image",
        passed=not failures,
        bounds={"levels": levels},
        witnesses=witnesses,
    )


def check_welldefined(woven: WovenFunction, columns: int = 128, rows: int = 128) -> Report:
    """Column-route and row-route evaluation must agree on the pair grid."""
    woven.build_to(max(columns, rows) - 1)
    failures = []
    for m in range(columns):
        x = woven.pairing.x_coordinate(m)
        for n in range(rows):
            y = woven.pairing.y_coordinate(n)
            by_column = woven.value(x, y)
            by_row = woven.value_via_row(x, y)
            if by_column != by_row:
                failures.append(
                    {
                        "column_level": m,
                        "row_level": n,
                        "x": x,
                        "y": y,
                        "by_column": by_column,
                        "by_row": by_row,
                    }
                )
    return Report(
        name="well_defined",
        passed=not failures,
        bounds={"columns": columns, "rows": rows},
        witnesses=failures[:5],
    )


def check_parameter_range(woven: WovenFunction, levels: int = 256) -> Report:
    """Every memoized prescribed value must lie in [0, 1) exactly."""
    woven.build_to(levels - 1)
    failures = []
    for k in range(levels):
        for table_name, table in (
            ("column", woven.column_params[k]),
            ("row", woven.row_params[k]),
        ):
            for i, value in enumerate(table):
                if not (ZERO <= value < ONE):
                    failures.append(
                        {"level": k, "table": table_name, "index": i, "value": value}
                    )
    return Report(
        name="parameter_range",
        passed=not failures,
        bounds={"levels": levels},
        witnesses=failures[:5],
    )


def image_density_search(
    woven: WovenFunction, target: Rational, eps: Rational
) -> Rational:
    """A rational y with |value(x_0, y) - target| <= eps, by exact bisection.

    The level-0 column runs linearly from value 1 at y_0 down to value 0 at
    y_0 + 1, so bisection on that segment closes in on any target in [0, 1].
    The endpoints are returned exactly for the extreme targets.
    """
    if not (ZERO <= target <= ONE):
        raise ValueError("density targets live in [0, 1]")
    if eps <= 0:
        raise ValueError("eps must be positive")
    woven.build_to(0)
    x0 = woven.pairing.x_coordinate(0)
    y0 = woven.pairing.y_coordinate(0)
    if target == ONE:
        return y0
    if target == ZERO:
        return y0 + 1
    lo, hi = y0, y0 + 1  # value 1 at lo, value 0 at hi
    for _ in range(200):
        mid = (lo + hi) / 2
        value = woven.value(x0, mid)
        if abs(value - target) <= eps:
            return mid
        if value > target:
            lo = mid
        else:
            hi = mid
    raise RuntimeError("bisection failed to converge; eps too small to represent?")


def check_image_density(
    woven: WovenFunction, pitch: int = 20, eps: Rational = Fraction(1, 40)
) -> Report:
    """Sweep targets k/pitch over [0, 1]; each must be hit within eps."""
    failures = []
    witnesses = []
    woven.build_to(0)
    x0 = woven.pairing.x_coordinate(0)
    for k in range(pitch + 1):
        target = Fraction(k, pitch)
        y = image_density_search(woven, target, eps)
        value = woven.value(x0, y)
        entry = {"target": target, "y": y, "value": value}
        if abs(value - target) > eps:
            failures.append(entry)
        elif k in (0, pitch // 2, pitch):
            witnesses.append(entry)
    return Report(
        name="image_density",
        passed=not failures,
        bounds={"pitch": pitch, "eps": eps},
        witnesses=failures[:5] or witnesses,
    )


def nonfeeble_witness(
    woven: WovenFunction,
    boxes: int = 50,
    u_lo: Rational = Fraction(1, 4),
    u_hi: Rational = Fraction(3, 4),
) -> Report:
    """Certify that the preimage of (u_lo, u_hi) has empty interior at box scale.

    Passes iff (a) some point provably maps into the interval, so the
    preimage is nonempty, and (b) each of the first `boxes` basic boxes
    contains a diagonal pair mapping exactly to 1, which lies outside the
    interval; so no basic box fits inside the preimage.
    """
    if not (ZERO <= u_lo < u_hi <= ONE):
        raise ValueError("need 0 <= u_lo < u_hi <= 1")
    if u_lo < ONE < u_hi:
        raise ValueError("interval must not contain the diagonal value 1")
    failures = []
    witnesses = []

    mid = (u_lo + u_hi) / 2
    quarter = (u_hi - u_lo) / 4
    y = image_density_search(woven, mid, quarter)
    x0 = woven.pairing.x_coordinate(0)
    member_value = woven.value(x0, y)
    member = {"kind": "member", "x": x0, "y": y, "value": member_value}
    if not (u_lo < member_value < u_hi):
        failures.append(member)
    else:
        witnesses.append(member)

    # box k is processed by the density task at step 3k + 2
    woven.build_to(3 * boxes - 1)
    for k in range(boxes):
        box = enumerate_box(k)
        level = woven.pairing.box_witness[k]
        x, y = woven.pairing.pairs[level]
        value = woven.value(x, y)
        entry = {"kind": "box", "box": k, "level": level, "x": x, "y": y, "value": value}
        if not box.strictly_inside(x, y) or value != ONE:
            failures.append(entry)
        elif k == 0:
            witnesses.append(entry)
    return Report(
        name="nonfeeble_witness",
        passed=not failures,
        bounds={"boxes": boxes, "u_lo": u_lo, "u_hi": u_hi},
        witnesses=failures[:5] or witnesses,
    )


def section_continuity_check(
    woven: WovenFunction,
    kind: str,
    level: int,
    samples: int,
    rng: random.Random,
) -> Report:
    """Random point pairs on one section must respect the level's Lipschitz bound.

    A column section is the definition's own route, so it is sampled through
    the public evaluator.  A row section is sampled through the level's
    interpolant after spot checks that the public evaluator agrees with it
    on built columns (the compatibility that makes the section continuous).
    """
    if kind not in ("column", "row"):
        raise ValueError("kind must be 'column' or 'row'")
    woven.build_to(level)
    cross = woven.cross(level)
    bound = cross.lipschitz_bound
    failures = []

    if kind == "column":
        x = woven.pairing.x_coordinate(level)
        for _ in range(samples):
            y_a, y_b = random_rational(rng), random_rational(rng)
            value_a = woven.value(x, y_a)
            value_b = woven.value(x, y_b)
            if abs(value_a - value_b) > bound * abs(y_a - y_b):
                failures.append(
                    {"x": x, "y_a": y_a, "y_b": y_b, "value_a": value_a, "value_b": value_b}
                )
    else:
        y = woven.pairing.y_coordinate(level)
        built = woven.built_levels
        for m in rng.sample(range(built), min(5, built)):
            x_m = woven.pairing.x_coordinate(m)
            via_public = woven.value(x_m, y)
            via_cross = cross.value_at((x_m, y))
            if via_public != via_cross:
                failures.append(
                    {
                        "spot_level": m,
                        "x": x_m,
                        "y": y,
                        "public": via_public,
                        "cross": via_cross,
                    }
                )
        for _ in range(samples):
            x_a, x_b = random_rational(rng), random_rational(rng)
            value_a = cross.value_at((x_a, y))
            value_b = cross.value_at((x_b, y))
            if abs(value_a - value_b) > bound * abs(x_a - x_b):
                failures.append(
                    {"y": y, "x_a": x_a, "x_b": x_b, "value_a": value_a, "value_b": value_b}
                )
    return Report(
        name=f"section_lipschitz_{kind}",
        passed=not failures,
        bounds={"level": level, "samples": samples, "lipschitz": bound},
        witnesses=failures[:5],
    )


def check_sections(
    woven: WovenFunction,
    levels: int = 64,
    samples_per_kind: int = 500,
    seed: int = DEFAULT_SEED,
) -> Report:
    """Run both section checks for every level below `levels`."""
    rng = random.Random(seed)
    failures = []
    worst_bound = ONE
    for level in range(levels):
        for kind in ("column", "row"):
            report = section_continuity_check(woven, kind, level, samples_per_kind, rng)
            worst_bound = max(worst_bound, report.bounds["lipschitz"])
            if not report.passed:
                failures.extend(
                    {**w, "level": level, "kind": kind} for w in report.witnesses
                )
    return Report(
        name="section_lipschitz",
        passed=not failures,
        bounds={
            "levels": levels,
            "samples_per_kind": samples_per_kind,
            "seed": seed,
            "largest_lipschitz": worst_bound,
        },
        witnesses=failures[:5],
    )


def check_oracle_equivalence(
    woven: WovenFunction,
    max_level: int = 10,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
) -> Report:
    """The memoized evaluator must match the exponential oracle exactly.

    Samples are column points (x_m, q) with the level m uniform over
    0..max_level and q a random small rational.
    """
    if max_level > MAX_ORACLE_LEVEL:
        raise ValueError(f"oracle is exponential; max_level capped at {MAX_ORACLE_LEVEL}")
    woven.build_to(max_level)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        level = rng.randint(0, max_level)
        x = woven.pairing.x_coordinate(level)
        y = random_rational(rng)
        fast = woven.value(x, y)
        slow = oracle_eval(woven.pairing, x, y, max_level)
        if fast != slow:
            failures.append({"level": level, "x": x, "y": y, "fast": fast, "oracle": slow})
    return Report(
        name="oracle_equivalence",
        passed=not failures,
        bounds={"max_level": max_level, "samples": samples, "seed": seed},
        witnesses=failures[:5],
    )


# -- suite driver ------------------------------------------------------------

SUITE_DEFAULT_DEPTH = {
    "singleton": 512,
    "welldef": 128,
    "density": 20,
    "witness": 50,
    "lipschitz": 64,
    "oracle": 10,
}

SUITE_NAMES = ("all", *SUITE_DEFAULT_DEPTH)


def _run_one(
    woven: WovenFunction, suite: str, depth: int, seed: int
) -> Report:
    if suite == "singleton":
        return check_singleton_image(woven, depth)
    if suite == "welldef":
        return check_welldefined(woven, depth, depth)
    if suite == "density":
        return check_image_density(woven, pitch=depth, eps=Fraction(1, 2 * depth))
    if suite == "witness":
        return nonfeeble_witness(woven, boxes=depth)
    if suite == "lipschitz":
        return check_sections(woven, levels=depth, seed=seed)
    if suite == "oracle":
        return check_oracle_equivalence(woven, max_level=depth, seed=seed)
    raise ValueError(f"unknown suite: {suite}")


def run_suite(
    suite: str, depth: int | None = None, seed: int = DEFAULT_SEED
) -> list[Report]:
    """Run one named suite, or all of them at their canonical depths.

    `depth` overrides the canonical scale when a single suite is selected;
    its meaning is suite-specific (levels, grid side, pitch, boxes, or
    oracle level cap).
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite: {suite}")
    woven = WovenFunction()
    if suite == "all":
        return [
            _run_one(woven, name, SUITE_DEFAULT_DEPTH[name], seed)
            for name in SUITE_DEFAULT_DEPTH
        ]
    return [_run_one(woven, suite, depth or SUITE_DEFAULT_DEPTH[suite], seed)]
