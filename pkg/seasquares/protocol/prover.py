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
An honest prover: given the squares of a sea in parent pixel coordinates it
writes the witness every child of the parent displays, so that the children
pass validation and assemble into the parent tape the sea calls for.

.. autoexception:: ParentOverflow

.. autofunction:: prove_children
"""

import logging
from itertools import product
from collections import defaultdict

from .. import const
from ..layout import location_at, location_part
from ..plaid import (
    FILLER,
    DemandGrid,
    edge_nodes,
    build_plaid,
    connect_sources,
    assign_counters,
)
from ..squares import Corner, MalformedPattern
from .records import (
    SIDES,
    OPPOSITE,
    STEP,
    ARMS,
    NEUTRAL,
    CornerMessage,
    SizeEntry,
    ParameterTape,
    Macrocolor,
    MacrotileWitness,
    outward,
    partner_size,
    parent_view,
    slot_readers,
)
from .validation import LOCATION_INDEX, leaves_at_corner, parent_corner, resolve


logger = logging.getLogger(__name__)


class ParentOverflow(ValueError):
    "Raised when a parent cannot hold the sizes or corners its children find"


def _box(position, M):
    x, y = position
    return x * M, y * M, x * M + M - 1, y * M + M - 1


def _exits(square, orientation, box):
    x0, y0, x1, y1 = box
    leaves = {
        'E': square.x1 > x1,
        'W': square.x < x0,
        'N': square.y1 > y1,
        'S': square.y < y0,
    }
    return all(leaves[side] for side in ARMS[orientation])


def recorded_corners(squares, box):
    """
    Yields (square, corner) for every corner cell of *squares* inside the
    pixel *box* (x0, y0, x1, y1) whose two arms both leave the box.
    """
    x0, y0, x1, y1 = box
    for sq in squares:
        cells = {
            'LL': (sq.x, sq.y), 'LR': (sq.x1, sq.y),
            'UL': (sq.x, sq.y1), 'UR': (sq.x1, sq.y1),
        }
        for orientation, (x, y) in sorted(cells.items()):
            if x0 <= x <= x1 and y0 <= y <= y1 and _exits(sq, orientation, box):
                yield sq, Corner(x, y, orientation)


def child_tape(squares, scale, position, distinct=False):
    "Returns the parameter tape of the child at *position*"
    box = _box(position, scale.M)
    bx, by = box[:2]
    full = [sq for sq in squares if sq.full_side_in(bx, by, scale.M, scale.M)]
    corners = sorted(
        Corner(c.x - bx, c.y - by, c.orientation)
        for sq, c in recorded_corners(squares, box))
    locations = ()
    if distinct:
        locations = sorted((sq.side, sq.x - bx, sq.y - by) for sq in full)
    return ParameterTape(
        scale.i0, scale.i, corners, sorted({sq.side for sq in full}), locations)


def _send(primary, tapes, scale, position, pc, side):
    dx, dy = STEP[side]
    while True:
        primary[position, side].add(
            CornerMessage(pc.x, pc.y, pc.orientation, False))
        position = position[0] + dx, position[1] + dy
        primary[position, OPPOSITE[side]].add(
            CornerMessage(pc.x, pc.y, pc.orientation, True))
        if any(
                partner_size(pc, parent_corner(c, position, scale), side)
                for c in tapes[position].corners):
            return
        if side in outward(position, scale.N):
            return


def _neighbour_message(squares, scale, position, side):
    # the corner the child across *side* shows on its facing side, in that
    # child's own frame
    dx, dy = STEP[side]
    M, P = scale.M, scale.parent
    x0, y0, x1, y1 = _box(position, M)
    box = (x0 + dx * M, y0 + dy * M, x1 + dx * M, y1 + dy * M)
    parent = (dx * P, dy * P, dx * P + P - 1, dy * P + P - 1)
    for sq, c in recorded_corners(squares, box):
        if OPPOSITE[side] in ARMS[c.orientation] and _exits(sq, c.orientation, parent):
            return CornerMessage(c.x - box[0], c.y - box[1], c.orientation, True)
    return None


def size_entries(el):
    """
    Converts the counted plaid labeling *el* into the parent size list
    parts of the children, keyed by (position, side).
    """
    found = defaultdict(list)
    for edge, entries in el.items():
        a, b = edge_nodes(edge)
        ahead, behind = ('E', 'W') if edge[2] == 'H' else ('N', 'S')
        for e in entries:
            if e.label is FILLER:
                continue
            found[a, ahead].append(SizeEntry(e.label, e.counter, not e.forward))
            found[b, behind].append(SizeEntry(e.label, e.counter, e.forward))
    return {key: tuple(sorted(entries)) for key, entries in found.items()}


def _reading(view, side):
    if view.size is None:
        return None
    if side == 'W':
        return None if view.first else view.size
    if side == 'E':
        return None if view.last else view.size
    return None


def prove_children(squares, scale, layout=None, distinct=False,
                   group=const.READING_GROUP):
    """
    Returns a mapping of child position to the
    :class:`~seasquares.protocol.records.MacrotileWitness` of every child of
    a parent at *scale*, for the sea made of *squares* (given relative to the
    parent's lower-left pixel; squares may extend past the parent).

    Raises :exc:`~seasquares.squares.MalformedPattern` if the squares
    collide (or repeat a size in *distinct* mode) and :exc:`ParentOverflow`
    if the parent cannot hold what its children find.
    """
    squares = sorted(set(squares))
    for i, a in enumerate(squares):
        for b in squares[i + 1:]:
            if a.conflicts(b):
                raise MalformedPattern('squares %r and %r collide' % (a, b))
    if distinct and len({sq.side for sq in squares}) < len(squares):
        raise MalformedPattern('a size repeats in a distinct sea')
    N, M = scale.N, scale.M
    if layout is not None and layout.spec.N != N:
        raise ValueError('layout zoom %d differs from %d' % (layout.spec.N, N))
    positions = sorted(product(range(N), repeat=2))
    tapes = {
        pos: child_tape(squares, scale, pos, distinct)
        for pos in positions
    }

    primary = defaultdict(set)
    secondary = defaultdict(set)
    for pos in positions:
        out = outward(pos, N)
        for corner in tapes[pos].corners:
            pc = parent_corner(corner, pos, scale)
            for side in ARMS[corner.orientation]:
                if side not in out:
                    _send(primary, tapes, scale, pos, pc, side)
            if leaves_at_corner(corner, pos, N):
                for side in ARMS[corner.orientation]:
                    secondary[pos, side].add(CornerMessage(
                        corner.x, corner.y, corner.orientation, False))
        if len(out) == 2:
            for side in out:
                message = _neighbour_message(squares, scale, pos, side)
                if message is not None:
                    secondary[pos, side].add(message)

    drafts = {
        pos: MacrotileWitness(tapes[pos], **{
            side: Macrocolor(
                primary=sorted(primary[pos, side]),
                secondary=sorted(secondary[pos, side]))
            for side in SIDES
        })
        for pos in positions
    }
    demands = {}
    unanswered = set()
    for pos in positions:
        resolution = resolve(drafts[pos], scale, pos)
        demands[pos] = set(tapes[pos].sizes) | {m.size for m in resolution.matches}
        unanswered.update(resolution.unanswered)
    corners = sorted(unanswered)
    if len(corners) > 4:
        raise ParentOverflow('%d corners leave the parent' % len(corners))
    sizes = sorted(set().union(*demands.values()))
    if len(sizes) > N * N // group:
        raise ParentOverflow(
            '%d parent sizes exceed the %d reading slots' % (
                len(sizes), N * N // group))
    sources = {
        size: {slot_readers(slot, N, group)[0]}
        for slot, size in enumerate(sizes)
    }
    d = DemandGrid(
        N, demands,
        K=max([const.PLAID_LABELS_PER_LIST] + [len(v) for v in demands.values()]),
        unit=M)
    el = assign_counters(d, connect_sources(d, build_plaid(d), sources), sources)
    entries = size_entries(el)

    result = {}
    for pos in positions:
        out = outward(pos, N)
        view = parent_view(pos, sizes, N, group)
        location = location_part(*location_at(*pos, N), N)
        result[pos] = MacrotileWitness(tapes[pos], **{
            side: Macrocolor(
                coords=location[LOCATION_INDEX[side]],
                corner_copy=NEUTRAL if side in out else corners,
                primary=drafts[pos].color(side).primary,
                secondary=drafts[pos].color(side).secondary,
                reading=None if side in out else _reading(view, side),
                sizes=entries.get((pos, side), ()))
            for side in SIDES
        })
    logger.info(
        'Proved %d children holding %d parent sizes and %d parent corners',
        len(result), len(sizes), len(corners))
    return result
