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
Geometry of seas of squares: the :class:`Pattern` window type, extraction of a
:class:`SquareInventory` from a binary window, rendering inventories back into
windows, and the scale arithmetic of the macrotile hierarchy.

Coordinates have their origin at the lower-left cell of a window, with *x*
increasing rightward and *y* upward. Coordinates of squares may lie outside
the window when a square is clipped by it.

.. autoclass:: Pattern
    :members:

.. autoclass:: SquareInventory

.. autofunction:: detect_inventory

.. autofunction:: render_inventory

.. autofunction:: complete

.. autofunction:: completions

.. autofunction:: extend

.. autofunction:: max_distinct_full

.. autofunction:: scales

.. autofunction:: random_sea

.. autofunction:: pack_distinct

.. autofunction:: boundary_sides
"""

import math
import logging
from collections import namedtuple
from operator import mul
from functools import reduce

import networkx as nx

from . import const
from .ranges import covers, intersect


logger = logging.getLogger(__name__)

ORIENTATIONS = ('UL', 'UR', 'LL', 'LR')


class MalformedPattern(ValueError):
    """
    Raised when the 1-cells of a binary window do not decompose into a legal
    sea of squares.
    """


class Pattern:
    """
    An immutable rectangular window of single character symbols.

    :param int width:
        The number of columns in the window.

    :param int height:
        The number of rows in the window.

    :param cells:
        A string (or sequence of single characters) of length
        *width* x *height* listing the symbols row by row, starting with the
        bottom row (y=0).

    :param str alphabet:
        The permitted symbols; the first is the background symbol.
    """
    __slots__ = ('_width', '_height', '_cells', '_alphabet')

    def __init__(self, width, height, cells, alphabet=const.BINARY_ALPHABET):
        cells = ''.join(cells)
        if width < 1 or height < 1:
            raise ValueError('pattern dimensions must be positive')
        if len(cells) != width * height:
            raise ValueError(
                'expected %d cells but found %d' % (width * height, len(cells)))
        bad = set(cells) - set(alphabet)
        if bad:
            raise ValueError(
                'symbols %s not in alphabet %r' % (''.join(sorted(bad)), alphabet))
        self._width = width
        self._height = height
        self._cells = cells
        self._alphabet = alphabet

    @classmethod
    def from_rows(cls, rows, alphabet=None):
        """
        Construct a pattern from a list of *rows* given top row first (the
        order in which they are printed). If *alphabet* is omitted, the
        binary alphabet is assumed unless a symbol outside it appears, in
        which case the directed square alphabet is used.
        """
        rows = list(rows)
        if alphabet is None:
            symbols = set(''.join(rows))
            if symbols <= set(const.BINARY_ALPHABET):
                alphabet = const.BINARY_ALPHABET
            else:
                alphabet = const.Y_ALPHABET
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValueError('rows must all have the same width')
        return cls(widths.pop(), len(rows), ''.join(reversed(rows)), alphabet)

    @classmethod
    def blank(cls, width, height, alphabet=const.BINARY_ALPHABET):
        "Returns a window filled with the background symbol"
        return cls(width, height, alphabet[0] * (width * height), alphabet)

    @classmethod
    def from_cells(cls, width, height, ones, alphabet=const.BINARY_ALPHABET):
        """
        Returns a binary window of the given size in which the cells listed
        in *ones* (an iterable of (x, y) tuples) are set; cells outside the
        window are ignored.
        """
        cells = [alphabet[0]] * (width * height)
        for x, y in ones:
            if 0 <= x < width and 0 <= y < height:
                cells[y * width + x] = alphabet[1]
        return cls(width, height, cells, alphabet)

    @property
    def width(self):
        return self._width

    @property
    def height(self):
        return self._height

    @property
    def cells(self):
        return self._cells

    @property
    def alphabet(self):
        return self._alphabet

    @property
    def background(self):
        return self._alphabet[0]

    def __getitem__(self, key):
        x, y = key
        if not (0 <= x < self._width and 0 <= y < self._height):
            raise IndexError('cell (%d, %d) outside the window' % (x, y))
        return self._cells[y * self._width + x]

    def __contains__(self, key):
        x, y = key
        return 0 <= x < self._width and 0 <= y < self._height

    def __iter__(self):
        for y in range(self._height):
            for x in range(self._width):
                yield x, y

    def __eq__(self, other):
        if isinstance(other, Pattern):
            return (
                self._width, self._height, self._cells, self._alphabet) == (
                other._width, other._height, other._cells, other._alphabet)
        return NotImplemented

    def __hash__(self):
        return hash((self._width, self._height, self._cells))

    def __repr__(self):
        return '<Pattern %dx%d %r>' % (
            self._width, self._height, '/'.join(self.rows()))

    def rows(self):
        "Returns the rows of the window as strings, top row first"
        w = self._width
        return [
            self._cells[y * w:(y + 1) * w]
            for y in reversed(range(self._height))
        ]

    def ones(self):
        "Returns the set of (x, y) cells holding a non-background symbol"
        bg = self.background
        return {
            (i % self._width, i // self._width)
            for i, c in enumerate(self._cells)
            if c != bg
        }

    def window(self, x, y, width, height):
        "Returns the sub-window of the given size with lower-left (x, y)"
        if not (0 <= x and 0 <= y and x + width <= self._width and
                y + height <= self._height):
            raise IndexError('window exceeds the pattern')
        w = self._width
        return Pattern(width, height, ''.join(
            self._cells[row * w + x:row * w + x + width]
            for row in range(y, y + height)
        ), self._alphabet)

    def replace(self, changes):
        "Returns a copy with the cells in the mapping *changes* replaced"
        cells = list(self._cells)
        for (x, y), symbol in changes.items():
            cells[y * self._width + x] = symbol
        return Pattern(self._width, self._height, cells, self._alphabet)


class Square(namedtuple('Square', ('side', 'x', 'y'))):
    """
    A square of 1s with the given *side* and lower-left cell (*x*, *y*).
    """
    __slots__ = ()

    @property
    def x1(self):
        return self.x + self.side - 1

    @property
    def y1(self):
        return self.y + self.side - 1

    @property
    def xspan(self):
        return range(self.x, self.x + self.side)

    @property
    def yspan(self):
        return range(self.y, self.y + self.side)

    def cells(self):
        for y in range(self.y, self.y + self.side):
            for x in range(self.x, self.x + self.side):
                yield x, y

    def inside(self, width, height):
        "Returns ``True`` if the square lies wholly within the window"
        return (
            covers(range(width), self.xspan) and
            covers(range(height), self.yspan))

    def meets(self, width, height):
        "Returns ``True`` if the square shares a cell with the window"
        return (
            intersect(range(width), self.xspan) is not None and
            intersect(range(height), self.yspan) is not None)

    def conflicts(self, other):
        """
        Returns ``True`` if the squares overlap or touch orthogonally; touching
        at a single diagonal point is permitted.
        """
        x_overlap = self.x <= other.x1 and other.x <= self.x1
        y_overlap = self.y <= other.y1 and other.y <= self.y1
        x_near = self.x <= other.x1 + 1 and other.x <= self.x1 + 1
        y_near = self.y <= other.y1 + 1 and other.y <= self.y1 + 1
        return (x_overlap and y_near) or (y_overlap and x_near)

    def full_side_in(self, x0, y0, width, height):
        """
        Returns ``True`` if at least one whole side of the square lies in the
        box of the given size with lower-left cell (*x0*, *y0*).
        """
        xs, ys = range(x0, x0 + width), range(y0, y0 + height)
        return (
            covers(xs, self.xspan) and (self.y in ys or self.y1 in ys) or
            covers(ys, self.yspan) and (self.x in xs or self.x1 in xs))

    def distances(self, x, y):
        "Returns the distances of cell (x, y) to the left, right, bottom, top"
        return x - self.x, self.x1 - x, y - self.y, self.y1 - y


class Corner(namedtuple('Corner', ('x', 'y', 'orientation'))):
    """
    A visible corner cell (*x*, *y*) of a square whose two arms leave the
    window. The *orientation* names which corner of its square the cell is:
    ``UL``, ``UR``, ``LL`` or ``LR``.
    """
    __slots__ = ()


class Side(namedtuple('Side', ('axis', 'offset', 'start', 'stop', 'fill', 'depth'))):
    """
    A visible side of a square with no visible corner. *axis* is ``'H'`` for a
    horizontal side on row *offset*, or ``'V'`` for a vertical side on column
    *offset*. The side is visible over cells ``start`` to ``stop - 1`` along
    its axis, the square lies on the *fill* side of it (+1 toward increasing
    coordinates, -1 toward decreasing ones), and *depth* cells of the square
    are visible perpendicular to the side.
    """
    __slots__ = ()

    @property
    def span(self):
        return range(self.start, self.stop)


class Region(namedtuple('Region', ('width', 'height'))):
    """
    A window entirely covered by a single non-square component.
    """
    __slots__ = ()


class SquareInventory(namedtuple('SquareInventory', (
        'full_squares', 'clipped_squares', 'partial_corners', 'partial_sides',
        'infinite_regions'))):
    """
    The structured content of a binary window. *full_squares* lie wholly in
    the window; *clipped_squares* are cut by one window edge only, so their
    side length is still known; *partial_corners* and *partial_sides* belong
    to squares whose size the window does not reveal.
    """
    __slots__ = ()

    def __new__(cls, full_squares=(), clipped_squares=(), partial_corners=(),
                partial_sides=(), infinite_regions=()):
        return super().__new__(
            cls, tuple(sorted(full_squares)), tuple(sorted(clipped_squares)),
            tuple(sorted(partial_corners)), tuple(sorted(partial_sides)),
            tuple(sorted(infinite_regions)))

    def known_sides(self):
        """
        Returns the list of side lengths the window determines: one per full
        square, clipped square and band of two facing sides.
        """
        sides = [sq.side for sq in self.full_squares]
        sides.extend(sq.side for sq in self.clipped_squares)
        sides.extend(a.depth for a, b in bands(self.partial_sides))
        return sides


def bands(sides):
    """
    Yields pairs of :class:`Side` records which face each other across a
    single component (the two visible sides of a square cut by two parallel
    window edges).
    """
    for a in sides:
        if a.fill == 1:
            for b in sides:
                if (b.fill == -1 and b.axis == a.axis and
                        b.start == a.start and b.stop == a.stop and
                        b.offset == a.offset + a.depth - 1 and
                        b.depth == a.depth):
                    yield a, b


def _components(pattern):
    ones = pattern.ones()
    graph = nx.Graph()
    graph.add_nodes_from(ones)
    graph.add_edges_from(
        ((x, y), (x + dx, y + dy))
        for x, y in ones
        for dx, dy in ((1, 0), (0, 1))
        if (x + dx, y + dy) in ones
    )
    return [sorted(comp) for comp in nx.connected_components(graph)]


def detect_inventory(pattern):
    """
    Decompose the 1-cells of the binary *pattern* into a
    :class:`SquareInventory`. Raises :exc:`MalformedPattern` if the window
    cannot be part of a legal sea of squares: components that are not
    rectangles, or rectangles whose visible sides contradict a square.
    """
    if pattern.alphabet != const.BINARY_ALPHABET:
        raise MalformedPattern('inventory detection needs a binary pattern')
    width, height = pattern.width, pattern.height
    full, clipped, corners, sides, regions = [], [], [], [], []
    for comp in _components(pattern):
        xs = [x for x, y in comp]
        ys = [y for x, y in comp]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        w, h = x1 - x0 + 1, y1 - y0 + 1
        if len(comp) != w * h:
            raise MalformedPattern(
                'component at (%d, %d) is not a rectangle' % (x0, y0))
        left, right = x0 > 0, x1 < width - 1
        bottom, top = y0 > 0, y1 < height - 1
        true_sides = left + right + bottom + top
        if w == h:
            full.append(Square(w, x0, y0))
        elif true_sides == 4:
            raise MalformedPattern(
                'component at (%d, %d) is a %dx%d rectangle' % (x0, y0, w, h))
        elif true_sides == 3:
            if left and right:
                if h > w:
                    raise MalformedPattern(
                        'component at (%d, %d) is taller than its width' %
                        (x0, y0))
                clipped.append(Square(w, x0, y0 if bottom else y1 - w + 1))
            else:
                if w > h:
                    raise MalformedPattern(
                        'component at (%d, %d) is wider than its height' %
                        (x0, y0))
                clipped.append(Square(h, x0 if left else x1 - h + 1, y0))
        elif true_sides == 2 and left + right == 1:
            corners.append(Corner(
                x0 if left else x1, y0 if bottom else y1,
                ('L' if bottom else 'U') + ('L' if left else 'R')))
        elif true_sides == 2:
            if left and right:
                if h > w:
                    raise MalformedPattern(
                        'band at column %d is narrower than it is tall' % x0)
                sides.append(Side('V', x0, y0, y1 + 1, 1, w))
                sides.append(Side('V', x1, y0, y1 + 1, -1, w))
            else:
                if w > h:
                    raise MalformedPattern(
                        'band at row %d is shorter than it is wide' % y0)
                sides.append(Side('H', y0, x0, x1 + 1, 1, h))
                sides.append(Side('H', y1, x0, x1 + 1, -1, h))
        elif true_sides == 1:
            if left:
                sides.append(Side('V', x0, y0, y1 + 1, 1, w))
            elif right:
                sides.append(Side('V', x1, y0, y1 + 1, -1, w))
            elif bottom:
                sides.append(Side('H', y0, x0, x1 + 1, 1, h))
            else:
                sides.append(Side('H', y1, x0, x1 + 1, -1, h))
        else:
            regions.append(Region(width, height))
    return SquareInventory(full, clipped, corners, sides, regions)


def _side_cells(side):
    if side.fill == 1:
        across = range(side.offset, side.offset + side.depth)
    else:
        across = range(side.offset - side.depth + 1, side.offset + 1)
    for a in across:
        for b in side.span:
            yield (a, b) if side.axis == 'V' else (b, a)


def _corner_cells(corner, width, height):
    if corner.orientation[1] == 'L':
        xs = range(corner.x, width)
    else:
        xs = range(0, corner.x + 1)
    if corner.orientation[0] == 'L':
        ys = range(corner.y, height)
    else:
        ys = range(0, corner.y + 1)
    for y in ys:
        for x in xs:
            yield x, y


def render_inventory(inventory, width, height):
    """
    Paint the visible cells of every item of *inventory* into a binary
    window of the given size. This is the inverse of
    :func:`detect_inventory` on legal windows.
    """
    ones = set()
    for sq in inventory.full_squares + inventory.clipped_squares:
        ones.update(sq.cells())
    for corner in inventory.partial_corners:
        ones.update(_corner_cells(corner, width, height))
    for side in inventory.partial_sides:
        ones.update(_side_cells(side))
    for region in inventory.infinite_regions:
        ones.update((x, y) for y in range(height) for x in range(width))
    return Pattern.from_cells(width, height, ones)


def complete(item, width, height, big=None):
    """
    Returns a concrete :class:`Square` consistent with the visible *item* of
    an inventory of a *width* x *height* window. Squares of unknown size are
    given the side *big*, which defaults to a size exceeding any window of
    this shape; single sides and regions are centred along the window.
    """
    if big is None:
        big = 2 * (width + height) + 1
    if isinstance(item, Square):
        return item
    elif isinstance(item, Corner):
        x = item.x if item.orientation[1] == 'L' else item.x - big + 1
        y = item.y if item.orientation[0] == 'L' else item.y - big + 1
        return Square(big, x, y)
    elif isinstance(item, Side):
        across = item.offset if item.fill == 1 else item.offset - big + 1
        along = item.start + (len(item.span) - big) // 2
        if item.axis == 'V':
            return Square(big, across, along)
        else:
            return Square(big, along, across)
    elif isinstance(item, Region):
        return Square(big, -((big - width) // 2), -((big - height) // 2))
    raise TypeError('cannot complete %r' % (item,))


def completions(inventory, width, height, big=None):
    """
    Returns one completion square per component of *inventory*. The two
    facing sides of a band are completed together by a square of the known
    side, centred along the band.
    """
    result = list(inventory.full_squares + inventory.clipped_squares)
    result.extend(
        complete(corner, width, height, big)
        for corner in inventory.partial_corners)
    paired = set()
    for a, b in bands(inventory.partial_sides):
        paired.add(a)
        paired.add(b)
        along = a.start + (len(a.span) - a.depth) // 2
        if a.axis == 'V':
            result.append(Square(a.depth, a.offset, along))
        else:
            result.append(Square(a.depth, along, a.offset))
    result.extend(
        complete(side, width, height, big)
        for side in inventory.partial_sides
        if side not in paired)
    result.extend(
        complete(region, width, height, big)
        for region in inventory.infinite_regions)
    return result


def extend(pattern, margin):
    """
    Returns the binary window obtained by surrounding *pattern* with *margin*
    cells on every side and continuing each component along its completion.
    Raises :exc:`MalformedPattern` if *pattern* is malformed or the
    continued components collide.
    """
    if margin == 0:
        detect_inventory(pattern)
        return pattern
    width, height = pattern.width + 2 * margin, pattern.height + 2 * margin
    big = 2 * (width + height) + 1
    inventory = detect_inventory(pattern)
    squares = [
        Square(sq.side, sq.x + margin, sq.y + margin)
        for sq in completions(inventory, pattern.width, pattern.height, big)
    ]
    for i, a in enumerate(squares):
        for b in squares[i + 1:]:
            if a.conflicts(b):
                raise MalformedPattern(
                    'completions of %r and %r collide' % (a, b))
    result = Pattern.from_cells(
        width, height, (cell for sq in squares for cell in sq.cells()))
    detect_inventory(result)
    return result


def max_distinct_full(L):
    """
    Returns the largest *m* with 1 + 4 + ... + m*m < L*L: the most distinct
    full square sizes an L x L window can hold::

        >>> max_distinct_full(1)
        0
        >>> max_distinct_full(2)
        1
        >>> max_distinct_full(10)
        6
    """
    if L < 1:
        raise ValueError('L must be positive')
    m = total = 0
    while total + (m + 1) ** 2 < L * L:
        m += 1
        total += m * m
    return m


class ScaleParams(namedtuple('ScaleParams', ('i0', 'i', 'N', 'L', 'M'))):
    """
    The scale of a level *i* macrotile in a hierarchy rooted at level *i0*:
    its zoom factor *N*, the absolute pixel bound *L* and the actual pixel
    side *M*. *N* is ``None`` when a toy schedule does not reach level *i*.
    """
    __slots__ = ()

    @property
    def parent(self):
        "The pixel side of the parent macrotile"
        return self.M * self.N

    @property
    def parent_bound(self):
        "The absolute pixel bound one level up"
        return self.L * self.N


def zoom(k, schedule=None):
    "Returns the zoom factor of level *k*"
    if schedule is not None:
        return schedule[k] if k < len(schedule) else None
    return 2 ** (2 ** (2 ** k))


def scales(i0, i, schedule=None):
    """
    Returns the :class:`ScaleParams` of level *i* in a hierarchy starting at
    level *i0*. With *schedule* the zoom factors are taken from that sequence
    instead of the doubly exponential formula::

        >>> scales(0, 1).N
        16
        >>> scales(0, 3).L
        4194304
        >>> scales(0, 2, schedule=(8, 8)).M
        64
    """
    if not 0 <= i0 <= i:
        raise ValueError('levels must satisfy 0 <= i0 <= i')
    if schedule is None and i > const.MAX_LEVEL:
        raise ValueError(
            'level %d exceeds the maximum of %d' % (i, const.MAX_LEVEL))
    if schedule is not None and len(schedule) < i:
        raise ValueError('schedule does not reach level %d' % i)
    L = reduce(mul, (zoom(k, schedule) for k in range(i)), 1)
    M = reduce(mul, (zoom(k, schedule) for k in range(i0, i)), 1)
    return ScaleParams(i0, i, zoom(i, schedule), L, M)


def random_sea(width, height, rng, max_side, attempts=None, distinct=False,
               clip=True):
    """
    Returns a list of pairwise compatible squares placed at random over a
    *width* x *height* window using the :class:`random.Random` instance
    *rng*. With *clip* squares may hang over the window edges; with
    *distinct* no two squares share a side length.
    """
    if attempts is None:
        attempts = 2 * (width + height)
    placed = []
    used = set()
    for _ in range(attempts):
        side = rng.randint(1, max_side)
        if distinct and side in used:
            continue
        if clip:
            x = rng.randint(-side + 1, width - 1)
            y = rng.randint(-side + 1, height - 1)
        else:
            if side > width or side > height:
                continue
            x = rng.randint(0, width - side)
            y = rng.randint(0, height - side)
        candidate = Square(side, x, y)
        if not any(candidate.conflicts(sq) for sq in placed):
            placed.append(candidate)
            used.add(side)
    return placed


def pack_distinct(L):
    """
    Returns a list of full squares of pairwise distinct sides 1 .. m packed
    into an L x L window by first-fit placement, largest first, for the
    largest *m* (no more than :func:`max_distinct_full`) that fits.
    """
    for m in range(max_distinct_full(L), 0, -1):
        placed = []
        for side in range(m, 0, -1):
            spot = next((
                Square(side, x, y)
                for y in range(L - side + 1)
                for x in range(L - side + 1)
                if not any(Square(side, x, y).conflicts(sq) for sq in placed)
            ), None)
            if spot is None:
                break
            placed.append(spot)
        else:
            return placed
    return []


def boundary_sides(squares, width, height):
    """
    Returns the number of distinct sides among *squares* that meet the window
    but are cut by its boundary.
    """
    return len({
        sq.side for sq in squares
        if sq.meets(width, height) and not sq.inside(width, height)
    })


def boundary_bound(L):
    "Returns the concrete boundary bound used for a window of side *L*"
    return const.BOUNDARY_CONSTANT * math.sqrt(L) + const.BOUNDARY_CONSTANT
