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
The records exchanged by macrotiles: the :class:`ParameterTape` written on a
macrotile, the four :class:`Macrocolor` values it shows its neighbours, and
the small message types they are built from.

Sides are named ``N``, ``E``, ``S`` and ``W``. Deep coordinates on a tape
are pixels relative to the lower-left pixel of the tile; those in the corner
copy and primary message parts are relative to the parent.

.. autoclass:: ParameterTape

.. autoclass:: Macrocolor
    :members:

.. autoclass:: MacrotileWitness
    :members:
"""

from collections import namedtuple

from .. import const
from ..squares import Corner


SIDES = 'NESW'
OPPOSITE = {'N': 'S', 'S': 'N', 'E': 'W', 'W': 'E'}
STEP = {'N': (0, 1), 'S': (0, -1), 'E': (1, 0), 'W': (-1, 0)}

# the two sides a corner's arms leave by
ARMS = {'UL': ('E', 'S'), 'UR': ('W', 'S'), 'LL': ('E', 'N'), 'LR': ('W', 'N')}
# the corner met at the far end of an arm
PARTNER = {
    ('UL', 'E'): 'UR', ('LL', 'E'): 'LR',
    ('UR', 'W'): 'UL', ('LR', 'W'): 'LL',
    ('LL', 'N'): 'UL', ('LR', 'N'): 'UR',
    ('UL', 'S'): 'LL', ('UR', 'S'): 'LR',
}

NEUTRAL = None


class CornerMessage(namedtuple('CornerMessage', (
        'x', 'y', 'orientation', 'incoming'))):
    """
    A corner travelling between tiles: its deep coordinates, orientation and
    whether it enters (*incoming*) or leaves the tile through this side.
    """
    __slots__ = ()

    @property
    def corner(self):
        return Corner(self.x, self.y, self.orientation)


class SizeEntry(namedtuple('SizeEntry', ('size', 'counter', 'incoming'))):
    """
    One parent size passed between siblings, with its hop *counter* and
    direction.
    """
    __slots__ = ()


class ParentView(namedtuple('ParentView', ('size', 'first', 'last'))):
    """
    What a child sees of the size list on its parent's tape: the *size* of
    the group it sits in (``None`` when it sees none) and whether it is the
    *first* or *last* child of that group.
    """
    __slots__ = ()

    def __new__(cls, size=None, first=False, last=False):
        return super().__new__(cls, size, first, last)


class ParameterTape(namedtuple('ParameterTape', (
        'i0', 'i', 'corners', 'sizes', 'locations', 'partial_sides'))):
    """
    The parameter tape of a level *i* macrotile in a hierarchy rooted at
    level *i0*: up to four *corners* (:class:`~seasquares.squares.Corner`
    records relative to the tile) and the list of *sizes* seen in its
    responsibility zone. For the distinct-square shift *locations* holds a
    (size, x, y) lower-left corner per size and *partial_sides* the
    :class:`~seasquares.squares.Side` records of the zone.
    """
    __slots__ = ()

    def __new__(cls, i0, i, corners=(), sizes=(), locations=(),
                partial_sides=()):
        return super().__new__(
            cls, i0, i, tuple(Corner(*c) for c in corners), tuple(sizes),
            tuple(tuple(l) for l in locations), tuple(partial_sides))


class Macrocolor(namedtuple('Macrocolor', (
        'machine', 'wire', 'coords', 'corner_copy', 'primary', 'secondary',
        'reading', 'sizes'))):
    """
    The protocol parts of one side of a macrotile. *coords* is the location
    label of the side, *corner_copy* the copy of the parent's tape corners
    (:data:`NEUTRAL` on the outside of the parent), *primary* and
    *secondary* the corner messages, *reading* the parent size read off the
    parent tape (or ``None``) and *sizes* the parent size list.
    """
    __slots__ = ()

    def __new__(cls, machine='', wire='', coords=(0, 0), corner_copy=(),
                primary=(), secondary=(), reading=None, sizes=()):
        if corner_copy is not NEUTRAL:
            corner_copy = tuple(Corner(*c) for c in corner_copy)
        return super().__new__(
            cls, machine, wire, tuple(coords), corner_copy,
            tuple(CornerMessage(*m) for m in primary),
            tuple(CornerMessage(*m) for m in secondary),
            reading, tuple(SizeEntry(*e) for e in sizes))

    def mirrored(self):
        """
        Returns the color as the tile across the side sees it: every message
        and size entry changes direction.
        """
        return self._replace(
            primary=tuple(m._replace(incoming=not m.incoming) for m in self.primary),
            secondary=tuple(m._replace(incoming=not m.incoming) for m in self.secondary),
            sizes=tuple(e._replace(incoming=not e.incoming) for e in self.sizes))


class MacrotileWitness(namedtuple('MacrotileWitness', ('tape', 'N', 'E', 'S', 'W'))):
    """
    A parameter tape with the four macrocolors shown around the tile.
    """
    __slots__ = ()

    def color(self, side):
        return getattr(self, side)

    @property
    def colors(self):
        "The colors keyed by side"
        return {side: getattr(self, side) for side in SIDES}

    def with_color(self, side, color):
        return self._replace(**{side: color})


def outward(position, N):
    "Returns the sides of the child at *position* facing out of its parent"
    x, y = position
    result = set()
    if x == 0:
        result.add('W')
    if x == N - 1:
        result.add('E')
    if y == 0:
        result.add('S')
    if y == N - 1:
        result.add('N')
    return result


def partner_size(corner, other, side):
    """
    Returns the side of the square whose *corner* meets the *other* corner at
    the end of its arm leaving by *side*, or ``None`` if they are not two
    corners of one square.
    """
    if PARTNER.get((corner.orientation, side)) != other.orientation:
        return None
    dx, dy = STEP[side]
    if dx:
        if other.y != corner.y:
            return None
        distance = (other.x - corner.x) * dx
    else:
        if other.x != corner.x:
            return None
        distance = (other.y - corner.y) * dy
    return distance + 1 if distance > 0 else None


def slot_readers(slot, N, group=const.READING_GROUP):
    """
    Returns the positions of the children reading size *slot* of the parent
    tape, left to right: *group* consecutive children in row-major order
    from the lower-left child.
    """
    if N % group:
        raise ValueError('zoom %d is not a multiple of the reading group' % N)
    return [(n % N, n // N) for n in range(slot * group, slot * group + group)]


def parent_view(position, sizes, N, group=const.READING_GROUP):
    "Returns the :class:`ParentView` of the child at *position*"
    x, y = position
    n = y * N + x
    slot = n // group
    if slot >= len(sizes):
        return ParentView()
    return ParentView(sizes[slot], n % group == 0, n % group == group - 1)
