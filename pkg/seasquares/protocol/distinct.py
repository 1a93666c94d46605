# The seasquares project
#   Copyright (c) 2026 The seasquares developers
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
#     * Redistributions of source code must retain the above copyright
#       notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above copyright
#       notice, this list of conditions and the following disclaimer in the
#       documentation and/or other materials provided with the distribution.
#     * Neither the name of the copyright holder nor the
#       names of its contributors may be used to endorse or promote products
#       derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

"""
Recognition of forbidden patterns in the responsibility zone of a macrotile
of the distinct-square shift.

A forbidden pattern is enumerated in many annotated versions, each naming a
completion (a size and a location, or :data:`LARGE` and :data:`FAR`) for
every partial square it shows. A macrotile whose tape lists the squares,
corners and partial sides of its zone finds an annotated pattern in two
passes: the first looks up the component that fixes the only place the
pattern can be, the second checks that exactly the components the
annotation expects meet that place.

.. autoclass:: AnnotatedPattern

.. autofunction:: responsibility_zone

.. autofunction:: zone_tape

.. autofunction:: match_annotated

.. autofunction:: expand_annotations
"""

import logging
from collections import namedtuple
from itertools import product

from ..squares import (
    Corner,
    Side,
    Square,
    MalformedPattern,
    bands,
    detect_inventory,
    zoom,
)
from .records import ParameterTape
from .validation import square_at


logger = logging.getLogger(__name__)

FOUND = 'found'
ABSENT = 'absent'
DEFERRED = 'deferred'

LARGE = 'large'
FAR = 'far'


class Completion(namedtuple('Completion', ('item', 'size', 'location'))):
    """
    The completion of one component *item* of a pattern: a square of side
    *size* with lower-left cell *location* relative to the pattern, or
    :data:`LARGE` at :data:`FAR`.
    """
    __slots__ = ()

    @property
    def finite(self):
        return self.size != LARGE

    def square(self, dx=0, dy=0):
        x, y = self.location
        return Square(self.size, x + dx, y + dy)


class AnnotatedPattern(namedtuple('AnnotatedPattern', (
        'pattern', 'completions', 'context', 'far'))):
    """
    A forbidden *pattern* with a :class:`Completion` per component. Patterns
    made only of large partial sides carry either one *context* square
    outside the window, or *far* to say no finite square or corner is near.
    """
    __slots__ = ()

    def __new__(cls, pattern, completions, context=(), far=False):
        return super().__new__(
            cls, pattern, tuple(completions), tuple(context), far)


class Zone(namedtuple('Zone', ('x', 'y', 'side'))):
    "A square responsibility zone with lower-left pixel (*x*, *y*)"
    __slots__ = ()

    def contains(self, x0, y0, x1, y1):
        return (
            self.x <= x0 and self.y <= y0 and
            x1 < self.x + self.side and y1 < self.y + self.side)


def responsibility_zone(scale, schedule=None):
    """
    Returns the :class:`Zone` of a tile at *scale*, relative to its
    lower-left pixel: the tile grown by the width of one child on every side.
    """
    if scale.i > scale.i0:
        child = scale.M // zoom(scale.i - 1, schedule)
    else:
        child = 1
    return Zone(-child, -child, scale.M + 2 * child)


def shift_side(side, dx, dy):
    "Returns *side* moved by (*dx*, *dy*)"
    if side.axis == 'V':
        return side._replace(
            offset=side.offset + dx, start=side.start + dy, stop=side.stop + dy)
    return side._replace(
        offset=side.offset + dy, start=side.start + dx, stop=side.stop + dx)


def zone_tape(pattern, zone, i0=0, i=0):
    """
    Returns the distinct-mode :class:`~seasquares.protocol.records.ParameterTape`
    describing the binary *pattern* drawn over *zone*: squares with a whole
    side in the zone are listed with their locations, the rest by their
    corners and partial sides.
    """
    if (pattern.width, pattern.height) != (zone.side, zone.side):
        raise ValueError('the pattern does not cover the zone')
    inventory = detect_inventory(pattern)
    squares = [
        Square(sq.side, sq.x + zone.x, sq.y + zone.y)
        for sq in inventory.full_squares + inventory.clipped_squares
    ]
    return ParameterTape(
        i0, i,
        corners=sorted(
            Corner(c.x + zone.x, c.y + zone.y, c.orientation)
            for c in inventory.partial_corners),
        sizes=sorted({sq.side for sq in squares}),
        locations=sorted((sq.side, sq.x, sq.y) for sq in squares),
        partial_sides=sorted(
            shift_side(s, zone.x, zone.y) for s in inventory.partial_sides))


def _square_meets(sq, region):
    x0, y0, x1, y1 = region
    return sq.x <= x1 and sq.x1 >= x0 and sq.y <= y1 and sq.y1 >= y0


def _corner_meets(corner, region):
    x0, y0, x1, y1 = region
    across = x1 >= corner.x if corner.orientation[1] == 'L' else x0 <= corner.x
    up = y1 >= corner.y if corner.orientation[0] == 'L' else y0 <= corner.y
    return across and up


def _side_meets(side, region):
    # only the line of the side matters; a region inside the body would be
    # all 1s
    x0, y0, x1, y1 = region
    if side.axis == 'V':
        return x0 <= side.offset <= x1 and side.start <= y1 and side.stop > y0
    return y0 <= side.offset <= y1 and side.start <= x1 and side.stop > x0


def _side_matches(zone_side, side, ox, oy):
    across, along = (ox, oy) if side.axis == 'V' else (oy, ox)
    return (
        (zone_side.axis, zone_side.fill) == (side.axis, side.fill) and
        zone_side.offset == side.offset + across and
        zone_side.start <= side.start + along and
        side.stop + along <= zone_side.stop)


def _finite(ap):
    return [c.square() for c in ap.completions if c.finite] + list(ap.context)


def _region(ap, ox, oy):
    return ox, oy, ox + ap.pattern.width - 1, oy + ap.pattern.height - 1


def _deferred(ap, zone, ox, oy):
    if not zone.contains(*_region(ap, ox, oy)):
        return True
    return any(
        not Square(sq.side, sq.x + ox, sq.y + oy).full_side_in(
            zone.x, zone.y, zone.side, zone.side)
        for sq in _finite(ap))


def _check_candidate(tape, ap, ox, oy):
    region = _region(ap, ox, oy)
    squares = {Square(*location) for location in tape.locations}
    expected = {Square(sq.side, sq.x + ox, sq.y + oy) for sq in _finite(ap)}
    corners = set()
    matched = set()
    for c in ap.completions:
        if c.finite:
            continue
        if isinstance(c.item, Corner):
            corners.add(Corner(c.item.x + ox, c.item.y + oy, c.item.orientation))
        else:
            hits = [
                z for z in tape.partial_sides
                if _side_matches(z, c.item, ox, oy)]
            if not hits:
                return False
            matched.update(hits)
    if not expected <= squares or not corners <= set(tape.corners):
        return False
    if any(_square_meets(sq, region) and sq not in expected for sq in squares):
        return False
    if any(_corner_meets(c, region) and c not in corners for c in tape.corners):
        return False
    if any(_side_meets(z, region) and z not in matched for z in tape.partial_sides):
        return False
    return True


def _candidates(tape, ap):
    finite = _finite(ap)
    if finite:
        fix = finite[0]
        return [
            (x - fix.x, y - fix.y)
            for size, x, y in tape.locations
            if size == fix.side
        ]
    corners = [
        c.item for c in ap.completions
        if isinstance(c.item, Corner)
    ]
    if corners:
        fix = corners[0]
        return [
            (c.x - fix.x, c.y - fix.y)
            for c in tape.corners
            if c.orientation == fix.orientation
        ]
    return None


def _locate_far(tape, ap, zone):
    width, height = ap.pattern.width, ap.pattern.height
    if not ap.far or not ap.completions or zone.side < max(width, height):
        return DEFERRED, None
    if tape.locations or tape.corners:
        return ABSENT, None
    first = ap.completions[0].item
    for z in tape.partial_sides:
        if (z.axis, z.fill) != (first.axis, first.fill):
            continue
        across = z.offset - first.offset
        if first.axis == 'V':
            offsets = [
                (across, oy)
                for oy in range(zone.y, zone.y + zone.side - height + 1)]
        else:
            offsets = [
                (ox, across)
                for ox in range(zone.x, zone.x + zone.side - width + 1)]
        for ox, oy in offsets:
            if (zone.contains(*_region(ap, ox, oy)) and
                    _check_candidate(tape, ap, ox, oy)):
                return FOUND, (ox, oy)
    return ABSENT, None


def locate_annotated(tape, ap, zone):
    """
    Returns the verdict of :func:`match_annotated` together with the
    location of the pattern's lower-left cell when it is found.
    """
    candidates = _candidates(tape, ap)
    if candidates is None:
        return _locate_far(tape, ap, zone)
    live = [
        offset for offset in sorted(set(candidates))
        if not _deferred(ap, zone, *offset)]
    if not live:
        return DEFERRED, None
    for offset in live:
        if _check_candidate(tape, ap, *offset):
            return FOUND, offset
    return ABSENT, None


def match_annotated(tape, ap, zone):
    """
    Returns :data:`FOUND` if the annotated pattern *ap* appears in the
    *zone* described by the distinct-mode *tape*, :data:`ABSENT` if the
    place its fixing component implies holds something else, and
    :data:`DEFERRED` if this tile cannot tell: the fixing component is
    missing, the place leaves the zone, or a finite completion has no whole
    side in the zone.
    """
    return locate_annotated(tape, ap, zone)[0]


def _corner_extent(corner, width, height):
    w = width - corner.x if corner.orientation[1] == 'L' else corner.x + 1
    h = height - corner.y if corner.orientation[0] == 'L' else corner.y + 1
    return w, h


def _alongs(side, size, location_bound):
    return range(max(side.stop - size, -location_bound), side.start + 1)


def _side_square(side, size, along):
    across = side.offset if side.fill == 1 else side.offset - size + 1
    if side.axis == 'V':
        return Square(size, across, along)
    return Square(size, along, across)


def _clear_of(sq, side):
    # a large side's square is taken to fill the half-plane behind its line
    lo, hi = (sq.x, sq.x1) if side.axis == 'V' else (sq.y, sq.y1)
    if side.fill == 1:
        return hi < side.offset - 1
    return lo > side.offset + 1


def _split(fp, combo, size_bound, location_bound):
    width, height = fp.width, fp.height
    result = []
    for size in range(1, size_bound + 1):
        for y in range(-location_bound, height + location_bound - size + 1):
            for x in range(-location_bound, width + location_bound - size + 1):
                sq = Square(size, x, y)
                if not sq.meets(width, height) and all(
                        _clear_of(sq, c.item) for c in combo):
                    result.append(AnnotatedPattern(fp, combo, (sq,)))
    result.append(AnnotatedPattern(fp, combo, far=True))
    return result


def expand_annotations(fp, size_bound, location_bound):
    """
    Returns the annotated versions of the forbidden binary pattern *fp*:
    every completion of its partial squares with sides up to *size_bound*
    and along-side offsets down to *-location_bound*, plus the large ones.
    A version made only of large partial sides is split into one version
    per context square within *location_bound* of the window and one far
    version. Raises :exc:`~seasquares.squares.MalformedPattern` if *fp* is
    not a fragment of a sea of squares with both symbols present.
    """
    ones = fp.ones()
    if not ones or len(ones) == fp.width * fp.height:
        raise MalformedPattern('a forbidden pattern needs both 0s and 1s')
    inventory = detect_inventory(fp)
    width, height = fp.width, fp.height
    options = [
        [Completion(sq, sq.side, (sq.x, sq.y))]
        for sq in inventory.full_squares + inventory.clipped_squares
    ]
    for corner in inventory.partial_corners:
        least = max(_corner_extent(corner, width, height))
        choices = []
        for size in range(least, size_bound + 1):
            sq = square_at(corner, size)
            choices.append(Completion(corner, size, (sq.x, sq.y)))
        choices.append(Completion(corner, LARGE, FAR))
        options.append(choices)
    paired = set()
    for a, b in bands(inventory.partial_sides):
        paired |= {a, b}
        choices = []
        for along in _alongs(a, a.depth, location_bound):
            sq = _side_square(a, a.depth, along)
            choices.append(Completion(a, a.depth, (sq.x, sq.y)))
        options.append(choices)
    for side in inventory.partial_sides:
        if side in paired:
            continue
        choices = []
        for size in range(max(len(side.span), side.depth), size_bound + 1):
            for along in _alongs(side, size, location_bound):
                sq = _side_square(side, size, along)
                choices.append(Completion(side, size, (sq.x, sq.y)))
        choices.append(Completion(side, LARGE, FAR))
        options.append(choices)

    result = []
    for combo in product(*options):
        finite = [c.square() for c in combo if c.finite]
        if any(a.conflicts(b) for i, a in enumerate(finite) for b in finite[i + 1:]):
            continue
        if not finite and all(isinstance(c.item, Side) for c in combo):
            result.extend(_split(fp, combo, size_bound, location_bound))
        else:
            result.append(AnnotatedPattern(fp, combo))
    logger.debug('Expanded a %dx%d pattern into %d annotations', width, height, len(result))
    return result
