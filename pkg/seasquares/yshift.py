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
The shift of directed nested squares. Every square of a binary sea is
redrawn as a family of nested counter-clockwise cycles: outer corners
(``A B C D``) on the outermost cycle, inner corners (``a b c d``) on the
others, arrows (``< > ^ v``) along the sides and ``o`` at the centre of odd
squares. The resulting shift is of finite type with a set of forbidden 2x2
blocks, and forgetting the decoration maps it onto the sea of squares.

The forbidden set is harvested rather than enumerated by hand: every 2x2
block of every rendered window of single squares (and diagonally touching
pairs) is collected, and the complement taken.

.. autofunction:: symbol_at

.. autofunction:: forbidden_2x2

.. autofunction:: check_y

.. autofunction:: lift

.. autofunction:: project

.. autofunction:: successor

.. autofunction:: extendable
"""

import logging
from collections import namedtuple
from functools import lru_cache
from itertools import product

from . import const, wang
from .squares import Pattern, Square, detect_inventory, completions


logger = logging.getLogger(__name__)

ZERO = '.'
CENTRE = 'o'
INNER_CORNERS = {'UL': 'a', 'UR': 'b', 'LL': 'c', 'LR': 'd'}
OUTER_CORNERS = {'UL': 'A', 'UR': 'B', 'LL': 'C', 'LR': 'D'}

# Direction of travel from each symbol around its counter-clockwise cycle
_STEPS = {
    '<': (-1, 0), '>': (1, 0), 'v': (0, -1), '^': (0, 1),
    'a': (0, -1), 'A': (0, -1),
    'b': (-1, 0), 'B': (-1, 0),
    'c': (1, 0), 'C': (1, 0),
    'd': (0, 1), 'D': (0, 1),
}


class Violation(namedtuple('Violation', ('x', 'y', 'block'))):
    """
    A forbidden 2x2 block found by :func:`check_y`; (*x*, *y*) is its
    lower-left cell and *block* the symbols (top-left, top-right,
    bottom-left, bottom-right).
    """
    __slots__ = ()


class ForbiddenSet:
    """
    The set of forbidden 2x2 blocks, each a tuple (top-left, top-right,
    bottom-left, bottom-right). Supports membership tests, iteration and
    :func:`len`.
    """
    def __init__(self, blocks):
        self._blocks = frozenset(blocks)

    def __contains__(self, block):
        return tuple(block) in self._blocks

    def __iter__(self):
        return iter(sorted(self._blocks))

    def __len__(self):
        return len(self._blocks)


def symbol_at(square, x, y):
    """
    Returns the symbol drawn at cell (*x*, *y*) of *square*, which must
    contain the cell.
    """
    left, right, bottom, top = square.distances(x, y)
    ring = min(left, right, bottom, top)
    if ring < 0:
        raise ValueError('cell (%d, %d) is outside %r' % (x, y, square))
    if left == right == bottom == top:
        return CENTRE
    corners = OUTER_CORNERS if ring == 0 else INNER_CORNERS
    if left == ring and top == ring:
        return corners['UL']
    elif right == ring and top == ring:
        return corners['UR']
    elif left == ring and bottom == ring:
        return corners['LL']
    elif right == ring and bottom == ring:
        return corners['LR']
    elif top == ring:
        return '<'
    elif bottom == ring:
        return '>'
    elif left == ring:
        return 'v'
    else:
        return '^'


def _draw(squares, width, height):
    # rows indexed [y][x]
    grid = [[ZERO] * width for _ in range(height)]
    for sq in squares:
        for y in range(max(0, sq.y), min(height, sq.y1 + 1)):
            for x in range(max(0, sq.x), min(width, sq.x1 + 1)):
                grid[y][x] = symbol_at(sq, x, y)
    return grid


def _blocks(grid):
    for y in range(len(grid) - 1):
        lower, upper = grid[y], grid[y + 1]
        for x in range(len(lower) - 1):
            yield upper[x], upper[x + 1], lower[x], lower[x + 1]


def _placements(size):
    max_side = const.HARVEST_MAX_SIDE
    for side in range(1, max_side + 1):
        for x, y in product(range(-side + 1, size), repeat=2):
            yield [Square(side, x, y)]
    pair_side = const.HARVEST_PAIR_MAX_SIDE
    for a, b in product(range(1, pair_side + 1), repeat=2):
        for x, y in product(range(-a - b, size), repeat=2):
            first = Square(a, x, y)
            # touching at the upper-right and at the upper-left corner
            yield [first, Square(b, first.x1 + 1, first.y1 + 1)]
            yield [first, Square(b, first.x - b, first.y1 + 1)]


def harvest(size):
    """
    Returns the set of 2x2 blocks found in *size* x *size* windows of every
    single square up to the harvest maximum side and every diagonally
    touching pair of small squares, at every offset.
    """
    blocks = {(ZERO,) * 4}
    for squares in _placements(size):
        blocks.update(_blocks(_draw(squares, size, size)))
    return frozenset(blocks)


@lru_cache(maxsize=None)
def allowed_2x2(sizes=const.HARVEST_SIZES):
    """
    Returns the frozenset of 2x2 blocks that occur in the directed square
    shift, harvested at each window size in the tuple *sizes*. A warning is
    logged if the harvest changes between consecutive sizes.
    """
    harvests = [harvest(size) for size in sizes]
    for smaller, larger, (s1, s2) in zip(
            harvests, harvests[1:], zip(sizes, sizes[1:])):
        if smaller != larger:
            logger.warning(
                'Block harvest changed between windows %d and %d (%d blocks)',
                s1, s2, len(larger ^ smaller))
    allowed = frozenset().union(*harvests)
    logger.debug('Harvested %d allowed blocks', len(allowed))
    return allowed


@lru_cache(maxsize=None)
def forbidden_2x2(sizes=const.HARVEST_SIZES):
    """
    Returns the :class:`ForbiddenSet` of 2x2 blocks over the 14-symbol
    alphabet which never occur in the directed square shift.
    """
    allowed = allowed_2x2(sizes)
    return ForbiddenSet(
        block for block in product(const.Y_ALPHABET, repeat=4)
        if block not in allowed)


def check_y(pattern, sizes=const.HARVEST_SIZES):
    """
    Returns ``None`` if *pattern* contains no forbidden 2x2 block, or the
    :class:`Violation` with the smallest (x, y) otherwise.
    """
    if pattern.alphabet != const.Y_ALPHABET:
        raise ValueError('check_y needs a pattern over the directed alphabet')
    forbidden = forbidden_2x2(sizes)
    for x in range(pattern.width - 1):
        for y in range(pattern.height - 1):
            block = (
                pattern[x, y + 1], pattern[x + 1, y + 1],
                pattern[x, y], pattern[x + 1, y])
            if block in forbidden:
                return Violation(x, y, block)
    return None


def lift(pattern):
    """
    Returns the directed square pattern drawing nested counter-clockwise
    cycles in every square of the binary *pattern*. Squares cut by the
    window are drawn as parts of their completions. Raises
    :exc:`~seasquares.squares.MalformedPattern` if *pattern* is not a sea of
    squares.
    """
    width, height = pattern.width, pattern.height
    inventory = detect_inventory(pattern)
    grid = _draw(completions(inventory, width, height), width, height)
    return Pattern(width, height, ''.join(''.join(row) for row in grid),
                   const.Y_ALPHABET)


def project(pattern):
    "Returns the binary pattern marking every non-zero cell of *pattern*"
    bg = pattern.background
    return Pattern(pattern.width, pattern.height, ''.join(
        const.BINARY_ALPHABET[c != bg] for c in pattern.cells))


def successor(pattern, x, y):
    """
    Returns the cell following (*x*, *y*) along its directed cycle, or
    ``None`` for zero and centre cells.
    """
    step = _STEPS.get(pattern[x, y])
    if step is None:
        return None
    return x + step[0], y + step[1]


def block_tile(block):
    """
    Returns the Wang tile standing for the 2x2 *block*; neighbouring tiles
    overlap by one row or column of cells.
    """
    tl, tr, bl, br = block
    return wang.Tile(north=(tl, tr), east=(tr, br), south=(bl, br), west=(tl, bl))


@lru_cache(maxsize=None)
def block_tileset(sizes=const.HARVEST_SIZES):
    "Returns the Wang tileset whose tiles are the allowed 2x2 blocks"
    tiles = [block_tile(block) for block in sorted(allowed_2x2(sizes))]
    colors = {c for tile in tiles for c in tile}
    return wang.WangTileset(colors, tiles)


def extendable(pattern, margin, cap=const.EXTENSION_CAP,
               sizes=const.HARVEST_SIZES):
    """
    Returns ``True`` if the directed square *pattern* can be surrounded by
    *margin* cells on every side without creating a forbidden 2x2 block.
    The question is posed to :func:`wang.solve_region` as a tiling of the
    enlarged window by allowed blocks with the original cells pinned.
    """
    if check_y(pattern, sizes) is not None:
        return False
    width, height = pattern.width + 2 * margin, pattern.height + 2 * margin
    if width < 2 or height < 2:
        return True
    tileset = block_tileset(sizes)

    def fixed(x, y):
        x -= margin
        y -= margin
        if 0 <= x < pattern.width and 0 <= y < pattern.height:
            return pattern[x, y]
        return None

    domains = {}
    for i in range(width - 1):
        for j in range(height - 1):
            pins = (fixed(i, j + 1), fixed(i + 1, j + 1), fixed(i, j), fixed(i + 1, j))
            if any(p is not None for p in pins):
                domains[i, j] = [
                    n for n, tile in enumerate(tileset.tiles)
                    if all(
                        p is None or p == s
                        for p, s in zip(pins, (
                            tile.north[0], tile.north[1],
                            tile.south[0], tile.south[1])))
                ]
    try:
        count = wang.solve_region(
            tileset, width - 1, height - 1, domains=domains, mode='count',
            cap=cap)
    except wang.CapExceeded:
        return True
    return count > 0
