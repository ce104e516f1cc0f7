"""
Exact rational geometry.

Every predicate works on ``fractions.Fraction`` coordinates; nothing here
ever rounds. Points are frozen and hashable so they can key dictionaries.
"""

from dataclasses import dataclass
from functools import total_ordering
from fractions import Fraction
from operator import itemgetter
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

Number = Union[int, Fraction]
T = TypeVar("T")


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction, numeric string or (num, den) pair to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (tuple, list)):
        num, den = value
        return Fraction(int(num), int(den))
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use Fraction or (num, den) pairs")
    return Fraction(value)


@total_ordering
@dataclass(frozen=True)
class Point:
    """A point with exact rational coordinates (ordered by y, then x)"""
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(as_fraction(x), as_fraction(y))

    def __lt__(self, other: "Point") -> bool:
        return (self.y, self.x) < (other.y, other.x)

    def __iter__(self):
        yield self.x
        yield self.y

    def __sub__(self, other: "Point") -> Tuple[Fraction, Fraction]:
        return (self.x - other.x, self.y - other.y)

    def scaled(self, factor: Number) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """z-component of (a - o) x (b - o)"""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(o: Point, a: Point, b: Point) -> int:
    """+1 for a counter-clockwise turn o->a->b, -1 for clockwise, 0 for collinear"""
    c = cross(o, a, b)
    return (c > 0) - (c < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab"""
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segment_contact(a: Point, b: Point, c: Point, d: Point) -> Optional[Tuple[str, Optional[Point]]]:
    """
    Describe how closed segments ab and cd meet.

    Returns None when they are disjoint, ``("point", p)`` when they share
    exactly one point, and ``("overlap", None)`` when they share a segment
    of positive length.
    """
    if max(a.y, b.y) < min(c.y, d.y) or max(c.y, d.y) < min(a.y, b.y):
        return None
    if max(a.x, b.x) < min(c.x, d.x) or max(c.x, d.x) < min(a.x, b.x):
        return None

    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)

    if o1 == 0 and o2 == 0:
        # collinear: intersect the parameter intervals along the common line
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return None
        if lo == hi:
            return ("point", lo)
        return ("overlap", None)

    if o1 * o2 > 0 or o3 * o4 > 0:
        return None

    if o1 == 0:
        return ("point", c)
    if o2 == 0:
        return ("point", d)
    if o3 == 0:
        return ("point", a)
    if o4 == 0:
        return ("point", b)

    # proper crossing: solve a + t(b - a) on cd
    denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x)
    t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom
    return ("point", Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))


def x_at(a: Point, b: Point, y: Fraction) -> Fraction:
    """x-coordinate of segment ab at height y (requires a.y != b.y)"""
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y)


def route_x_at(route: Sequence[Point], y: Fraction) -> Optional[Fraction]:
    """x-coordinate where a strictly y-increasing polyline meets height y, or None"""
    if not route or y < route[0].y or y > route[-1].y:
        return None
    lo, hi = 0, len(route) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if route[mid].y <= y:
            lo = mid
        else:
            hi = mid
    if route[lo].y == y:
        return route[lo].x
    if route[hi].y == y:
        return route[hi].x
    return x_at(route[lo], route[hi], y)


def slope_key(direction: Tuple[Fraction, Fraction]) -> Fraction:
    """Left-to-right key of a direction leaving a vertex vertically: dx / |dy|"""
    dx, dy = direction
    return dx / abs(dy)


def sorted_exactly(items: Iterable[T], key: Callable[[T], Fraction]) -> List[T]:
    """
    Sort by a rational key without comparing Fractions pairwise.

    Correctly rounded floats never invert a strict order, so a float sort is
    exact except inside runs of equal floats; only those runs are re-sorted
    on the exact key. The sort is stable.
    """
    items = list(items)
    try:
        keyed = sorted(((float(key(item)), i, item) for i, item in enumerate(items)), key=itemgetter(0, 1))
    except OverflowError:
        return sorted(items, key=key)
    out: List[T] = []
    start = 0
    while start < len(keyed):
        end = start + 1
        while end < len(keyed) and keyed[end][0] == keyed[start][0]:
            end += 1
        run = [item for _, _, item in keyed[start:end]]
        if len(run) > 1:
            first = key(run[0])
            if any(key(item) != first for item in run):
                run.sort(key=key)
        out.extend(run)
        start = end
    return out
