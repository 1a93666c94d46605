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
The anatomy of an N x N macrotile: the location part carried by every tile,
four wire bundles bringing the macrocolors in from the edges, and a
computation region whose lower-left corner shows the anchor tile.

Every bundle enters across the middle of its edge, on the *b* cells starting
at ``N // 2 - b // 2`` where *b* is the wire width. Reading the bottom row
of the computation region from the left, the first *b* tape cells are fed by
the west bundle, the next *b* by the south bundle, then the east bundle and
finally the north bundle. The west and east bundles run along their entry
rows and turn up once, and the south bundle goes straight up; the region sits
above their lanes. The north bundle cannot reach the bottom row from the top
midpoint without crossing the region, so it passes the region on the right
and comes up from below.

.. autoclass:: LayoutSpec

.. autofunction:: layout

.. autofunction:: render

.. autofunction:: block_position

.. autofunction:: location_at
"""

import math
import logging
from collections import namedtuple

from . import wang


logger = logging.getLogger(__name__)

PLAIN = 'plain'
WIRE = 'wire'
MACHINE = 'machine'
ANCHOR = 'anchor'

EDGES = ('W', 'S', 'E', 'N')


class LayoutInfeasible(ValueError):
    "Raised when the computation region or the wires do not fit the block"


def macrocolor_bits(N, s):
    """
    Returns the width in bits of a macrocolor's machine, wire and location
    parts for zoom *N* and machine part width *s*.
    """
    if N < 2:
        raise ValueError('zoom must be at least 2')
    return s + 2 + 2 * math.ceil(math.log2(N))


class LayoutSpec(namedtuple('LayoutSpec', (
        'N', 's', 'comp_width', 'comp_height', 'wire_width'))):
    """
    The parameters of a macrotile layout: zoom *N*, machine part width *s*,
    the computation region's size and the number of tiles across each wire
    bundle. *wire_width* defaults to :func:`macrocolor_bits`.
    """
    __slots__ = ()

    def __new__(cls, N, s, comp_width, comp_height, wire_width=None):
        if wire_width is None:
            wire_width = macrocolor_bits(N, s)
        return super().__new__(cls, N, s, comp_width, comp_height, wire_width)

    @property
    def macrocolor_bits(self):
        return macrocolor_bits(self.N, self.s)

    @property
    def origin(self):
        """
        The lower-left cell of the computation region: centred across the
        block, with its bottom row just above the lanes of the side bundles
        and the turns of the north bundle.
        """
        b = self.wire_width
        return (self.N - self.comp_width) // 2, self.N // 2 - b // 2 + 2 * b + 1


class CellRole(namedtuple('CellRole', ('location', 'role', 'detail'))):
    """
    The part a tile plays in the block. *location* is its location part as
    (left, bottom, top, right) coordinate pairs and *role* one of ``plain``,
    ``wire``, ``machine`` or ``anchor``. For wires *detail* is the channel
    (edge, index) and the glyph drawn for the cell; for machine cells it is
    the position relative to the region.
    """
    __slots__ = ()


class Layout(namedtuple('Layout', ('spec', 'roles', 'channels', 'feeds'))):
    """
    A generated layout: *roles* maps every (x, y) of the block to its
    :class:`CellRole`, *channels* maps each channel to its path of cells
    from the block edge inwards, and *feeds* maps each channel to the tape
    cell of the region it ends beneath.
    """
    __slots__ = ()

    def __getitem__(self, key):
        if isinstance(key, tuple):
            return self.roles[key]
        return super().__getitem__(key)


def location_part(x, y, N):
    "Returns the location part of the tile with location (*x*, *y*)"
    if not (0 <= x < N and 0 <= y < N):
        raise ValueError('location (%d, %d) outside a block of %d' % (x, y, N))
    return wang.location_label(x, y, N)


def location_at(X, Y, N):
    """
    Returns the location shown by the tile at block position (*X*, *Y*).
    Matching location parts shift the second coordinate by one per column,
    so the block is sheared.
    """
    return X, (X + Y) % N


def block_position(x, y, N):
    "The inverse of :func:`location_at`"
    return x, (y - x) % N


def _polyline(points):
    cells = []
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        dx = (x1 > x0) - (x1 < x0)
        dy = (y1 > y0) - (y1 < y0)
        x, y = x0, y0
        if cells:
            cells.pop()
        while True:
            cells.append(((x, y), '-' if dx else '|'))
            if (x, y) == (x1, y1):
                break
            x, y = x + dx, y + dy
    # every interior bend is a turn
    corners = set(points[1:-1])
    return [(cell, '+' if cell in corners else glyph) for cell, glyph in cells]


def _lanes(spec):
    "The cells across the middle of an edge where a bundle enters"
    b = spec.wire_width
    first = spec.N // 2 - b // 2
    return range(first, first + b)


def _routes(spec):
    N, b = spec.N, spec.wire_width
    rx, ry = spec.origin
    lanes = _lanes(spec)
    first = lanes[0]
    below = ry - 1
    above = ry + spec.comp_height - 1
    beside = rx + spec.comp_width
    for j, lane in enumerate(lanes):
        # lower lanes turn further out so that no two wires cross
        yield ('W', j), [(0, lane), (first - 1 - j, lane), (first - 1 - j, below)]
        yield ('S', j), [(lane, 0), (lane, below)]
        yield ('E', j), [(N - 1, lane), (first + b + j, lane), (first + b + j, below)]
        # the region covers the top midpoint, so the north bundle goes round
        # it on the right and comes up from under the other three
        col = beside + b - 1 - j
        under = lanes[-1] + 1 + j
        feed = first + 2 * b + j
        yield ('N', j), [
            (lane, N - 1), (lane, above + 1 + j), (col, above + 1 + j),
            (col, under), (feed, under), (feed, below)]


def _check(spec):
    N, b = spec.N, spec.wire_width
    cw, ch = spec.comp_width, spec.comp_height
    if min(cw, ch, b) < 1:
        raise LayoutInfeasible('region and wires need positive sizes')
    if cw > N or ch > N:
        raise LayoutInfeasible(
            'a %dx%d region does not fit a block of %d' % (cw, ch, N))
    if 2 * ch >= N:
        raise LayoutInfeasible(
            'the region must use fewer than %d rows, not %d' % ((N + 1) // 2, ch))
    rx, ry = spec.origin
    first = _lanes(spec)[0]
    if first - b < max(rx, 1) or first + 3 * b > rx + cw:
        raise LayoutInfeasible(
            'the region is too narrow for four bundles of %d wires' % b)
    if rx + cw + b > N:
        raise LayoutInfeasible('no room beside the region for the north bundle')
    if ry + ch + b > N - 1:
        raise LayoutInfeasible('no room above the region for the north bundle')


def layout(spec):
    """
    Generates the :class:`Layout` of *spec*, raising
    :exc:`LayoutInfeasible` if the region or the wires do not fit. Every
    cell receives exactly one role.
    """
    _check(spec)
    N = spec.N
    rx, ry = spec.origin
    roles = {}
    channels = {}
    feeds = {}
    for y in range(ry, ry + spec.comp_height):
        for x in range(rx, rx + spec.comp_width):
            roles[x, y] = (MACHINE, (x - rx, y - ry))
    roles[rx, ry] = (ANCHOR, (0, 0))
    for channel, points in _routes(spec):
        path = _polyline(points)
        for cell, glyph in path:
            if cell in roles:
                raise LayoutInfeasible(
                    'wire %s%d runs into %s at %r' % (
                        channel + (roles[cell][0], cell)))
            roles[cell] = (WIRE, (channel, glyph))
        channels[channel] = tuple(cell for cell, glyph in path)
        end_x, end_y = path[-1][0]
        feeds[channel] = (end_x, end_y + 1)
    result = {}
    for X in range(N):
        for Y in range(N):
            role, detail = roles.get((X, Y), (PLAIN, None))
            result[X, Y] = CellRole(
                location_part(*location_at(X, Y, N), N=N), role, detail)
    logger.debug(
        'Laid out %d wires in a block of %d around a %dx%d region',
        len(channels), N, spec.comp_width, spec.comp_height)
    return Layout(spec, result, channels, feeds)


_GLYPHS = {PLAIN: '.', MACHINE: 'M', ANCHOR: '@'}


def render(lay):
    """
    Returns the ASCII role map of *lay*, top row first: ``.`` for plain
    tiles, ``|``, ``-`` and ``+`` for wires, ``M`` for the computation
    region and ``@`` for the anchor.
    """
    N = lay.spec.N
    lines = []
    for y in reversed(range(N)):
        line = []
        for x in range(N):
            cell = lay.roles[x, y]
            if cell.role == WIRE:
                line.append(cell.detail[1])
            else:
                line.append(_GLYPHS[cell.role])
        lines.append(''.join(line))
    return '\n'.join(lines) + '\n'
