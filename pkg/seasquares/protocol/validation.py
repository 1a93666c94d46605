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
The checks a macrotile runs on its parameter tape and the four macrocolors
around it. :func:`validate_witness` performs them in a fixed order of
numbered steps and raises :exc:`WitnessRejected` naming the first that
fails:

1. the levels on the tape match the scale being validated
2. the scale has a zoom factor at this level
3. the tape holds at most four corners inside the tile and a size list within
   its length limit (clauses *a* to *c*)
4. each macrocolor part is well formed and within its length limit (clauses
   *a* to *g*)
5. the location parts of the four colors belong to one tile
6. the inner corner copies agree and the outward colors are neutral
7. every corner sends its primary messages and any size they resolve is
   listed
8. the same for secondary messages of corners leaving the parent at a corner
9. corners with no answer appear in the corner copy
10. unmatched primary messages are passed on and no message is unexplained
11. the parent size reading agrees with what the tile can see of its parent
12. all size lists are sorted
13. sizes sent with counter 0 are read off the parent tape
14. a merge sweep of the five size lists checks the counters (*a*) and that
    every tape size is listed (*b*)

.. autoclass:: WitnessRejected

.. autofunction:: validate_witness

.. autofunction:: resolve
"""

import logging
from collections import namedtuple

from .. import const
from ..layout import block_position, location_part
from ..squares import ORIENTATIONS, Corner, Square
from .records import (
    SIDES,
    OPPOSITE,
    STEP,
    ARMS,
    NEUTRAL,
    CornerMessage,
    outward,
    partner_size,
)
from .serial import list_size_limit, tape_size_limit


logger = logging.getLogger(__name__)

# the location part index of each side: (left, bottom, top, right)
LOCATION_INDEX = {'W': 0, 'S': 1, 'N': 2, 'E': 3}


class WitnessRejected(ValueError):
    """
    Raised by :func:`validate_witness`; *step* is the number of the failing
    check and *clause* its sub-clause or rule name.
    """
    def __init__(self, step, clause, detail):
        if len(clause) == 1:
            msg = 'step %d%s: %s' % (step, clause, detail)
        else:
            msg = 'step %d (%s): %s' % (step, clause, detail)
        super().__init__(msg)
        self.step = step
        self.clause = clause
        self.detail = detail


class Validated(namedtuple('Validated', ('demands', 'steps'))):
    """
    The outcome of a successful validation: the sizes the tile *demands*
    from the parent size lists and the number of *steps* the merge sweep
    took.
    """
    __slots__ = ()


class Match(namedtuple('Match', ('via', 'corner', 'side', 'size', 'square'))):
    """
    A corner of the tile answered through *side* by the far corner of its
    square. *corner* and *square* are relative to the parent; *via* is
    ``primary`` or ``secondary``.
    """
    __slots__ = ()


class Resolution(namedtuple('Resolution', ('matches', 'unanswered', 'absorbed'))):
    __slots__ = ()


def child_offset(position, scale):
    "Returns the parent pixel of the lower-left pixel of the child"
    return position[0] * scale.M, position[1] * scale.M


def square_at(corner, size):
    "Returns the square of side *size* having *corner* as one of its corners"
    x = corner.x if corner.orientation[1] == 'L' else corner.x - size + 1
    y = corner.y if corner.orientation[0] == 'L' else corner.y - size + 1
    return Square(size, x, y)


def parent_corner(corner, position, scale):
    bx, by = child_offset(position, scale)
    return Corner(corner.x + bx, corner.y + by, corner.orientation)


def leaves_at_corner(corner, position, N):
    """
    Returns ``True`` if the child at *position* sits in a corner of its
    parent and both arms of *corner* leave the parent.
    """
    out = outward(position, N)
    return len(out) == 2 and set(ARMS[corner.orientation]) <= out


def resolve(w, scale, position):
    """
    Matches the corners on the tape of witness *w* at *position* against the
    incoming corner messages. Returns the :class:`Match` records found, the
    corners no message answers (relative to the parent) and the set of
    (side, message) pairs absorbed by a corner.
    """
    out = outward(position, scale.N)
    matches = []
    unanswered = []
    absorbed = set()
    for corner in w.tape.corners:
        if corner.orientation not in ARMS:
            continue
        pc = parent_corner(corner, position, scale)
        secondary = leaves_at_corner(corner, position, scale.N)
        answered = False
        for side in ARMS[corner.orientation]:
            if side not in out:
                for m in w.color(side).primary:
                    size = partner_size(pc, m.corner, side) if m.incoming else None
                    if size is not None:
                        matches.append(
                            Match('primary', pc, side, size, square_at(pc, size)))
                        absorbed.add((side, m))
                        answered = True
                        break
            elif secondary:
                dx, dy = STEP[side]
                for m in w.color(side).secondary:
                    if not m.incoming:
                        continue
                    other = Corner(
                        m.x + dx * scale.M, m.y + dy * scale.M, m.orientation)
                    size = partner_size(corner, other, side)
                    if size is not None:
                        matches.append(
                            Match('secondary', pc, side, size, square_at(pc, size)))
                        answered = True
                        break
        if not answered:
            unanswered.append(pc)
    return Resolution(tuple(matches), tuple(unanswered), frozenset(absorbed))


def _bounded(corners, bound):
    return all(abs(c.x) < bound and abs(c.y) < bound for c in corners)


def _check_tape(tape, scale, constant):
    if len(tape.corners) > 4:
        raise WitnessRejected(3, 'a', '%d corners on the tape' % len(tape.corners))
    for c in tape.corners:
        if c.orientation not in ORIENTATIONS:
            raise WitnessRejected(3, 'a', 'bad orientation %r' % (c.orientation,))
        if not (0 <= c.x < scale.M and 0 <= c.y < scale.M):
            raise WitnessRejected(3, 'a', 'corner %r outside the tile' % (c,))
    if not _bounded(tape.corners, scale.L):
        raise WitnessRejected(3, 'a', 'corner coordinates exceed %d' % scale.L)
    if any(not isinstance(n, int) or n < 1 for n in tape.sizes):
        raise WitnessRejected(3, 'b', 'sizes must be positive integers')
    limit = tape_size_limit(scale, constant)
    if len(tape.sizes) > limit:
        raise WitnessRejected(
            3, 'b', '%d sizes exceed the limit of %d' % (len(tape.sizes), limit))
    seen = set()
    for location in tape.locations:
        size = location[0] if len(location) == 3 else None
        if size is None or size not in tape.sizes or size in seen:
            raise WitnessRejected(
                3, 'c', 'location %r does not annotate a tape size' % (location,))
        seen.add(size)


def _check_color(side, color, scale, layout, constant):
    for part in (color.machine, color.wire):
        if not isinstance(part, str) or set(part) - set('01'):
            raise WitnessRejected(4, 'a', '%s: machine and wire parts are bits' % side)
    if layout is not None and len(color.machine) + len(color.wire) > layout.spec.s:
        raise WitnessRejected(
            4, 'a', '%s: machine and wire parts exceed %d bits' % (side, layout.spec.s))
    coords = color.coords
    if not (len(coords) == 2 and all(
            isinstance(v, int) and 0 <= v < scale.N for v in coords)):
        raise WitnessRejected(4, 'b', '%s: bad coordinates %r' % (side, coords))
    bound = scale.parent_bound
    if color.corner_copy is not NEUTRAL:
        if len(color.corner_copy) > 4 or not _bounded(color.corner_copy, bound) or any(
                c.orientation not in ORIENTATIONS for c in color.corner_copy):
            raise WitnessRejected(4, 'c', '%s: bad corner copy' % side)
    for part, clause, total, each, limit in (
            (color.primary, 'd', 4, 2, bound),
            (color.secondary, 'e', 2, 1, scale.L)):
        incoming = sum(1 for m in part if m.incoming)
        if (len(part) > total or incoming > each or len(part) - incoming > each or
                not _bounded(part, limit) or
                any(m.orientation not in ORIENTATIONS for m in part)):
            raise WitnessRejected(
                4, clause, '%s: bad %s message part' % (
                    side, 'primary' if clause == 'd' else 'secondary'))
    if color.reading is not None and not (
            isinstance(color.reading, int) and 1 <= color.reading <= bound):
        raise WitnessRejected(4, 'f', '%s: bad size reading %r' % (side, color.reading))
    limit = list_size_limit(scale, constant)
    if len(color.sizes) > limit:
        raise WitnessRejected(
            4, 'g', '%s: %d sizes exceed the limit of %d' % (
                side, len(color.sizes), limit))
    for entry in color.sizes:
        if not (1 <= entry.size <= bound and 0 <= entry.counter < scale.N ** 2):
            raise WitnessRejected(4, 'g', '%s: bad size entry %r' % (side, entry))


def _check_location(w, scale, layout):
    if layout is not None and layout.spec.N != scale.N:
        raise WitnessRejected(5, 'coords', 'layout zoom differs from the scale')
    expected = location_part(*w.W.coords, scale.N)
    for side in SIDES:
        if w.color(side).coords != expected[LOCATION_INDEX[side]]:
            raise WitnessRejected(
                5, 'coords', '%s shows %r, expected %r' % (
                    side, w.color(side).coords, expected[LOCATION_INDEX[side]]))
    return block_position(*w.W.coords, scale.N)


def _check_copies(w, out):
    copies = set()
    for side in SIDES:
        color = w.color(side)
        if side in out:
            if (color.corner_copy is not NEUTRAL or color.primary or
                    color.reading is not None or color.sizes):
                raise WitnessRejected(6, 'neutral', '%s faces out of the parent' % side)
        elif color.corner_copy is NEUTRAL:
            raise WitnessRejected(6, 'corner-copy', '%s has no corner copy' % side)
        else:
            copies.add(tuple(sorted(color.corner_copy)))
    if len(copies) > 1:
        raise WitnessRejected(6, 'corner-copy', 'the corner copies differ')
    return set(copies.pop()) if copies else set()


def _listed(w):
    listed = {e.size for side in SIDES for e in w.color(side).sizes}
    listed |= _readings(w)
    return listed


def _readings(w):
    return {w.color(side).reading for side in SIDES} - {None}


def _check_corners(w, scale, position, out, copy, resolution):
    listed = _listed(w)
    for corner in w.tape.corners:
        pc = parent_corner(corner, position, scale)
        for side in ARMS[corner.orientation]:
            if side not in out:
                sent = CornerMessage(pc.x, pc.y, pc.orientation, False)
                if sent not in w.color(side).primary:
                    raise WitnessRejected(
                        7, 'outgoing', 'corner %r is not sent %s' % (pc, side))
    for match in resolution.matches:
        if match.via == 'primary' and match.size not in listed:
            raise WitnessRejected(7, 'unreassured', 'size %d is not listed' % match.size)
    for corner in w.tape.corners:
        if leaves_at_corner(corner, position, scale.N):
            for side in ARMS[corner.orientation]:
                sent = CornerMessage(corner.x, corner.y, corner.orientation, False)
                if sent not in w.color(side).secondary:
                    raise WitnessRejected(
                        8, 'outgoing', 'corner %r is not sent %s' % (corner, side))
    for match in resolution.matches:
        if match.via == 'secondary' and match.size not in listed:
            raise WitnessRejected(8, 'unreassured', 'size %d is not listed' % match.size)
    for pc in resolution.unanswered:
        if pc not in copy:
            raise WitnessRejected(
                9, 'corner-copy', 'unanswered corner %r is not copied' % (pc,))


def _check_messages(w, scale, position, out, resolution):
    expected = {side: set() for side in SIDES}
    secondary = {side: set() for side in SIDES}
    for corner in w.tape.corners:
        pc = parent_corner(corner, position, scale)
        for side in ARMS[corner.orientation]:
            if side not in out:
                expected[side].add(CornerMessage(pc.x, pc.y, pc.orientation, False))
        if leaves_at_corner(corner, position, scale.N):
            for side in ARMS[corner.orientation]:
                secondary[side].add(
                    CornerMessage(corner.x, corner.y, corner.orientation, False))
    for side in SIDES:
        for m in w.color(side).primary:
            if not m.incoming or (side, m) in resolution.absorbed:
                continue
            ahead = OPPOSITE[side]
            if ahead in out:
                continue
            passed = m._replace(incoming=False)
            if passed not in w.color(ahead).primary:
                raise WitnessRejected(
                    10, 'pass-on', 'message %r entering %s is not passed on' % (
                        m.corner, side))
            expected[ahead].add(passed)
    for side in SIDES:
        for m in w.color(side).primary:
            if not m.incoming and m not in expected[side]:
                raise WitnessRejected(
                    10, 'unexplained', 'primary message %r leaving %s' % (m.corner, side))
        for m in w.color(side).secondary:
            if not m.incoming and m not in secondary[side]:
                raise WitnessRejected(
                    10, 'unexplained', 'secondary message %r leaving %s' % (
                        m.corner, side))


def _check_reading(w, view):
    readings = {side: w.color(side).reading for side in SIDES}
    if readings['N'] is not None or readings['S'] is not None:
        raise WitnessRejected(11, 'reading', 'sizes are read on the east and west only')
    if view is None:
        if None not in (readings['W'], readings['E']) and readings['W'] != readings['E']:
            raise WitnessRejected(11, 'reading', 'west and east readings differ')
        return
    if view.size is None:
        expected = {'W': None, 'E': None}
    else:
        expected = {
            'W': None if view.first else view.size,
            'E': None if view.last else view.size,
        }
    for side, value in expected.items():
        if readings[side] != value:
            raise WitnessRejected(
                11, 'reading', '%s reads %r, expected %r' % (side, readings[side], value))


def _check_sorted(w):
    sizes = list(w.tape.sizes)
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise WitnessRejected(12, 'sorted', 'tape sizes %r are not sorted' % (sizes,))
    for side in SIDES:
        sizes = [e.size for e in w.color(side).sizes]
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise WitnessRejected(
                12, 'sorted', '%s sizes %r are not sorted' % (side, sizes))


def _check_counters(w):
    readings = _readings(w)
    for side in SIDES:
        for entry in w.color(side).sizes:
            if not entry.incoming and entry.counter == 0 and entry.size not in readings:
                raise WitnessRejected(
                    13, 'counter', 'size %d leaves %s with counter 0 but is not '
                    'read off the parent tape' % (entry.size, side))


def _sweep(w):
    tape = w.tape.sizes
    lists = [w.color(side).sizes for side in SIDES]
    readings = _readings(w)
    heads = [0] * len(lists)
    t = steps = 0
    while True:
        candidates = [
            entries[head].size
            for entries, head in zip(lists, heads)
            if head < len(entries)
        ]
        if t < len(tape):
            candidates.append(tape[t])
        if not candidates:
            return steps
        size = min(candidates)
        steps += 1
        found = []
        for k, entries in enumerate(lists):
            if heads[k] < len(entries) and entries[heads[k]].size == size:
                found.append(entries[heads[k]])
                heads[k] += 1
        incoming = [e.counter for e in found if e.incoming]
        outgoing = [e.counter for e in found if not e.incoming]
        if len(incoming) > 1:
            raise WitnessRejected(
                14, 'a', 'size %d arrives on %d sides' % (size, len(incoming)))
        expected = incoming[0] + 1 if incoming else 0
        if any(counter != expected for counter in outgoing):
            raise WitnessRejected(
                14, 'a', 'size %d leaves with counters %r, expected %d' % (
                    size, outgoing, expected))
        if t < len(tape) and tape[t] == size:
            t += 1
            if not found and size not in readings:
                raise WitnessRejected(14, 'b', 'tape size %d is not listed' % size)


def validate_witness(w, scale, layout=None, view=None,
                     constant=const.SIZE_LIST_CONSTANT):
    """
    Runs the checks of a level ``scale.i`` macrotile on the witness *w*
    (a :class:`~seasquares.protocol.records.MacrotileWitness`) and returns a
    :class:`Validated` record, or raises :exc:`WitnessRejected` at the first
    failing step.

    *layout* (a :class:`~seasquares.layout.Layout`) bounds the machine and
    wire parts. *view* is the :class:`~seasquares.protocol.records.ParentView`
    of the parent tape this tile can see; when omitted the reading parts are
    only checked for consistency with each other. *constant* is the size list
    length constant.
    """
    tape = w.tape
    if not 0 <= tape.i0 <= tape.i or (tape.i0, tape.i) != (scale.i0, scale.i):
        raise WitnessRejected(
            1, 'levels', 'tape levels %r do not match %r' % (
                (tape.i0, tape.i), (scale.i0, scale.i)))
    if scale.N is None or scale.N < 2:
        raise WitnessRejected(2, 'scale', 'no zoom factor at level %d' % scale.i)
    _check_tape(tape, scale, constant)
    for side in SIDES:
        _check_color(side, w.color(side), scale, layout, constant)
    position = _check_location(w, scale, layout)
    out = outward(position, scale.N)
    copy = _check_copies(w, out)
    resolution = resolve(w, scale, position)
    _check_corners(w, scale, position, out, copy, resolution)
    _check_messages(w, scale, position, out, resolution)
    _check_reading(w, view)
    _check_sorted(w)
    _check_counters(w)
    steps = _sweep(w)
    demands = set(tape.sizes) | {match.size for match in resolution.matches}
    logger.debug('Validated child at %r in %d sweep steps', position, steps)
    return Validated(tuple(sorted(demands)), steps)
