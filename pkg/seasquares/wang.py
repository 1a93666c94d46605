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
Wang tilesets, a backtracking solver for finite regions and a checker for the
zoom-N simulation relation between two tilesets.

Colours are opaque hashable tokens and tiles are (north, east, south, west)
tuples of them. The solver visits cells row by row from the lower-left cell
and tries tiles in tileset order, so every enumeration is reproducible.

.. autoclass:: WangTileset

.. autofunction:: solve_region

.. autofunction:: check_simulation

.. autofunction:: location_tileset

.. autofunction:: coordinate_map
"""

import logging
from collections import namedtuple, defaultdict
from itertools import product

from . import const


logger = logging.getLogger(__name__)

SIDES = ('N', 'E', 'S', 'W')


class Unsatisfiable(RuntimeError):
    "Raised when no tiling of a region satisfies its constraints"


class CapExceeded(RuntimeError):
    """
    Raised when a counting or enumeration run exceeds its result cap. The
    truncated result (a count or a list) is available as *partial*.
    """
    def __init__(self, msg, partial):
        super().__init__(msg)
        self.partial = partial


class BudgetExceeded(RuntimeError):
    "Raised when a simulation check cannot finish within its window budget"


class Tile(namedtuple('Tile', ('north', 'east', 'south', 'west'))):
    __slots__ = ()


class WangTileset:
    """
    A list of distinct *tiles* over the set of *colors*, with *anchors* being
    the indices of the tiles designated as anchor tiles.
    """
    def __init__(self, colors, tiles, anchors=()):
        tiles = [Tile(*tile) for tile in tiles]
        if len(set(tiles)) != len(tiles):
            raise ValueError('tiles must be distinct')
        colors = frozenset(colors)
        unknown = {c for tile in tiles for c in tile} - colors
        if unknown:
            raise ValueError('tiles use undeclared colors %r' % sorted(map(str, unknown)))
        anchors = frozenset(anchors)
        if not anchors <= set(range(len(tiles))):
            raise ValueError('anchors must index tiles')
        self.colors = colors
        self.tiles = tiles
        self.anchors = anchors
        self._by_west = defaultdict(list)
        self._by_south = defaultdict(list)
        self._west_south = set()
        for index, tile in enumerate(tiles):
            self._by_west[tile.west].append(index)
            self._by_south[tile.south].append(index)
            self._west_south.add((tile.west, tile.south))
        self._souths = {tile.south for tile in tiles}

    def __len__(self):
        return len(self.tiles)

    def __repr__(self):
        return '<WangTileset colors=%d tiles=%d anchors=%d>' % (
            len(self.colors), len(self.tiles), len(self.anchors))

    def index(self, tile):
        return self.tiles.index(Tile(*tile))

    def without(self, index):
        "Returns a copy of the tileset with the tile at *index* removed"
        anchors = {a if a < index else a - 1 for a in self.anchors if a != index}
        return WangTileset(
            self.colors, self.tiles[:index] + self.tiles[index + 1:], anchors)

    def with_west(self, color):
        return self._by_west.get(color, [])

    def with_south(self, color):
        return self._by_south.get(color, [])

    def admits(self, west=None, south=None):
        "Returns True if some tile has the given west and south colours"
        if west is None:
            return south in self._souths
        elif south is None:
            return west in self._by_west
        return (west, south) in self._west_south


class Tiling(namedtuple('Tiling', ('width', 'height', 'assignment'))):
    """
    An assignment of tile indices to the cells of a *width* x *height*
    region; *assignment* lists them row by row from the bottom row.
    """
    __slots__ = ()

    def __getitem__(self, key):
        if isinstance(key, tuple):
            x, y = key
            return self.assignment[y * self.width + x]
        return super().__getitem__(key)

    def tiles(self, tileset):
        "Returns a dict mapping each cell to its :class:`Tile`"
        return {
            (x, y): tileset.tiles[self[x, y]]
            for y in range(self.height) for x in range(self.width)
        }


def is_valid(tiles, width, height, boundary=None):
    """
    Returns ``True`` if the mapping *tiles* of cells to :class:`Tile` values
    covers the region and adjacent tiles agree on their shared edges (and
    on any *boundary* colours).
    """
    boundary = boundary or {}
    for y in range(height):
        for x in range(width):
            tile = tiles.get((x, y))
            if tile is None:
                return False
            if x + 1 < width and tiles.get((x + 1, y)) is not None:
                if tile.east != tiles[x + 1, y].west:
                    return False
            if y + 1 < height and tiles.get((x, y + 1)) is not None:
                if tile.north != tiles[x, y + 1].south:
                    return False
    for (side, i), color in boundary.items():
        if side == 'N' and tiles[i, height - 1].north != color:
            return False
        elif side == 'S' and tiles[i, 0].south != color:
            return False
        elif side == 'W' and tiles[0, i].west != color:
            return False
        elif side == 'E' and tiles[width - 1, i].east != color:
            return False
    return True


class _Search:
    # pylint: disable=too-many-instance-attributes
    def __init__(self, tileset, width, height, boundary, anchor_rule, domains):
        self.tileset = tileset
        self.width = width
        self.height = height
        self.boundary = boundary
        self.anchor_rule = anchor_rule
        self.domains = domains
        self.assignment = [None] * (width * height)

    def candidates(self, x, y):
        tiles = self.tileset.tiles
        if x > 0:
            west = tiles[self.assignment[y * self.width + x - 1]].east
            options = self.tileset.with_west(west)
        elif ('W', y) in self.boundary:
            options = self.tileset.with_west(self.boundary['W', y])
        else:
            options = range(len(tiles))
        if y > 0:
            south = tiles[self.assignment[(y - 1) * self.width + x]].north
        else:
            south = self.boundary.get(('S', x))
        east = self.boundary.get(('E', y)) if x == self.width - 1 else None
        north = self.boundary.get(('N', x)) if y == self.height - 1 else None
        domain = self.domains.get((x, y))
        if domain is not None:
            domain = set(domain)
        rule = self.anchor_rule(x, y) if self.anchor_rule else None
        for index in options:
            tile = tiles[index]
            if south is not None and tile.south != south:
                continue
            if east is not None and tile.east != east:
                continue
            if north is not None and tile.north != north:
                continue
            if domain is not None and index not in domain:
                continue
            if rule is not None and rule != (index in self.tileset.anchors):
                continue
            if not self.lookahead(x, y, tile):
                continue
            yield index

    def lookahead(self, x, y, tile):
        # forward check: the cell to the east and the cell above must still
        # admit some tile
        if x + 1 < self.width:
            if y > 0:
                below = self.tileset.tiles[
                    self.assignment[(y - 1) * self.width + x + 1]]
                if not self.tileset.admits(tile.east, below.north):
                    return False
            elif not self.tileset.admits(west=tile.east):
                return False
        if y + 1 < self.height and not self.tileset.admits(south=tile.north):
            return False
        return True

    def solutions(self):
        cells = self.width * self.height
        stack = [self.candidates(0, 0)]
        while stack:
            pos = len(stack) - 1
            index = next(stack[-1], None)
            if index is None:
                stack.pop()
                self.assignment[pos] = None
                continue
            self.assignment[pos] = index
            if pos + 1 == cells:
                yield Tiling(self.width, self.height, tuple(self.assignment))
            else:
                nxt = pos + 1
                stack.append(self.candidates(nxt % self.width, nxt // self.width))


def solve_region(tileset, width, height, boundary=None, mode='find',
                 anchor_rule=None, domains=None, cap=const.SOLVER_CAP):
    """
    Tile a *width* x *height* region with *tileset*.

    :param dict boundary:
        Optional colours required on the region's outer edges, keyed by
        ``('N', column)``, ``('S', column)``, ``('W', row)`` and
        ``('E', row)``.

    :param str mode:
        ``'find'`` returns the first :class:`Tiling` (or raises
        :exc:`Unsatisfiable`), ``'count'`` returns the number of tilings and
        ``'enumerate'`` returns them all, in search order. Both of the latter
        raise :exc:`CapExceeded` when more than *cap* tilings exist.

    :param anchor_rule:
        Optional callable of (x, y) returning ``True`` if the cell must hold
        an anchor tile, ``False`` if it must not, or ``None`` if either will
        do.

    :param dict domains:
        Optional mapping of cells to the tile indices permitted there.
    """
    if width < 1 or height < 1:
        raise ValueError('region dimensions must be positive')
    if mode not in ('find', 'count', 'enumerate'):
        raise ValueError('unknown solver mode %r' % mode)
    search = _Search(
        tileset, width, height, boundary or {}, anchor_rule, domains or {})
    found = []
    count = 0
    for tiling in search.solutions():
        if mode == 'find':
            return tiling
        count += 1
        if count > cap:
            logger.warning('Solver cap of %d tilings reached', cap)
            raise CapExceeded(
                'more than %d tilings of the %dx%d region' % (cap, width, height),
                found if mode == 'enumerate' else cap)
        if mode == 'enumerate':
            found.append(tiling)
    if mode == 'find':
        raise Unsatisfiable(
            'no tiling of the %dx%d region exists' % (width, height))
    elif mode == 'count':
        return count
    else:
        return found


class SimulationVerdict(namedtuple('SimulationVerdict', ('ok', 'bullet', 'detail'))):
    """
    The outcome of :func:`check_simulation`. *bullet* is the failing clause
    (0 for injectivity, then 1, 2 or 3) and ``None`` on success.
    """
    __slots__ = ()


def _block_cells(block, N):
    return {(i % N, i // N): tile for i, tile in enumerate(block)}


def check_simulation(T, S, N, phi, budget=const.SIMULATION_BUDGET):
    """
    Check on finite windows that the tileset *T* simulates the tileset *S* at
    zoom *N* through *phi*, a mapping of every tile of *S* to a tuple of
    N x N tiles of *T* listed row by row from the bottom.

    Windows of 2 x 2 *S*-tiles and 2N x 2N *T*-tiles are examined. The check
    can refute a simulation but not prove one. Raises :exc:`BudgetExceeded`
    if a window holds more than *budget* tilings.
    """
    blocks = {Tile(*s): tuple(Tile(*t) for t in block) for s, block in phi.items()}
    if set(blocks) != set(S.tiles):
        return SimulationVerdict(False, 0, 'phi does not cover the tiles of S')
    if len(set(blocks.values())) != len(blocks):
        return SimulationVerdict(False, 0, 'phi is not injective')
    if any(len(block) != N * N for block in blocks.values()):
        return SimulationVerdict(False, 0, 'phi blocks must hold N*N tiles')
    known = set(T.tiles)

    # 1: images of S-tilings are T-tilings
    try:
        s_tilings = solve_region(S, 2, 2, mode='enumerate', cap=budget)
    except CapExceeded:
        raise BudgetExceeded('more than %d S-tilings of a 2x2 window' % budget)
    for tiling in s_tilings:
        image = {}
        for (x, y), s_tile in tiling.tiles(S).items():
            for (bx, by), t_tile in _block_cells(blocks[s_tile], N).items():
                image[x * N + bx, y * N + by] = t_tile
        missing = set(image.values()) - known
        if missing:
            return SimulationVerdict(
                False, 1, 'image uses tiles outside T: %r' % (sorted(missing)[0],))
        if not is_valid(image, 2 * N, 2 * N):
            return SimulationVerdict(
                False, 1, 'image of %r is not a T-tiling' % (tiling.assignment,))

    # 2 and 3: T-tilings cut uniquely into images whose preimages tile
    preimage = {block: s_tile for s_tile, block in blocks.items()}
    try:
        t_tilings = solve_region(T, 2 * N, 2 * N, mode='enumerate', cap=budget)
    except CapExceeded:
        raise BudgetExceeded(
            'more than %d T-tilings of a %dx%d window' % (budget, 2 * N, 2 * N))
    for tiling in t_tilings:
        tiles = tiling.tiles(T)
        cuts = []
        for ox, oy in product(range(N), repeat=2):
            origins = [
                (x, y)
                for x in range(ox, N + 1, N)
                for y in range(oy, N + 1, N)
            ]
            found = {}
            for x, y in origins:
                block = tuple(
                    tiles[x + i % N, y + i // N] for i in range(N * N))
                if block not in preimage:
                    break
                found[x, y] = preimage[block]
            else:
                cuts.append(((ox, oy), found))
        if len(cuts) != 1:
            return SimulationVerdict(
                False, 2, '%d cuts of T-tiling %r' % (len(cuts), tiling.assignment))
        (ox, oy), found = cuts[0]
        macro = {((x - ox) // N, (y - oy) // N): s for (x, y), s in found.items()}
        for (x, y), s_tile in macro.items():
            east = macro.get((x + 1, y))
            north = macro.get((x, y + 1))
            if (east is not None and east.west != s_tile.east) or (
                    north is not None and north.south != s_tile.north):
                return SimulationVerdict(
                    False, 3, 'preimage of cut %r is not an S-tiling' % ((ox, oy),))
    return SimulationVerdict(True, None, None)


def location_label(x, y, N):
    """
    Returns the location part of the tile at position (*x*, *y*) of an N x N
    block as (left, bottom, top, right) coordinate pairs; addition is mod N.
    """
    return (x, y), (x, y), (x, (y + 1) % N), ((x + 1) % N, (y + 1) % N)


def location_tileset(N):
    """
    Returns the tileset of the N*N location tiles, in order of location
    (x, y) row by row. A tile's west and south colours are its left and
    bottom labels, its north and east colours its top and right labels.
    """
    tiles = []
    for y in range(N):
        for x in range(N):
            left, bottom, top, right = location_label(x, y, N)
            tiles.append(Tile(north=top, east=right, south=bottom, west=left))
    colors = {c for tile in tiles for c in tile}
    return WangTileset(colors, tiles)


def coordinate_map(N, color='c'):
    """
    Returns (*S*, *phi*): the single-tile tileset *S* with every side coloured
    *color*, and the map sending its tile to the N x N block of location
    tiles beginning with location (0, 0). Following matching colours, the
    location at block position (X, Y) is (X, (X + Y) mod N).
    """
    S = WangTileset({color}, [Tile(color, color, color, color)])
    T = location_tileset(N)
    block = tuple(
        T.tiles[((X + Y) % N) * N + X]
        for Y in range(N) for X in range(N)
    )
    return S, {S.tiles[0]: block}
