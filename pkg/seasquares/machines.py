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
Multi-tape Turing machines and their compilation into Wang tilesets whose
anchored tilings are exactly the machines' space-time diagrams.

A machine has *k* tapes read by a single head. Each transition writes one
symbol to every tape under the head and then performs one action: move the
head (``HL``, ``HR``), keep it still (``HS``) or shift a whole tape one cell
under the head (``T<i>L``, ``T<i>R``). Tapes are finite windows: symbols
shifted past an edge are lost and blanks enter from the other side. The
machine halts in a halt state, when no transition applies or when the head
would leave the window.

In a compiled tileset one row of tiles is one step of the machine. The south
colour of a tile is the content of its cell (the *k* stacked symbols and,
where the head is, its state) and the north colour is the content of the
same cell one step later. Horizontal colours carry the head between cells
and, during a tape shift, the shifted symbol together with the shift itself
so that every cell of the row agrees to shift.

.. autoclass:: TuringMachine

.. autofunction:: run_tm

.. autofunction:: compile_tm

.. autofunction:: decode_tiling

.. autofunction:: verify_equivalence
"""

import re
import logging
from collections import namedtuple, OrderedDict
from itertools import product

from . import wang


logger = logging.getLogger(__name__)

HALT = 'halt'
WALL_W = 'wall-w'
WALL_E = 'wall-e'
IDLE = ('h', None, None, None)

MOVE_RE = re.compile(r'^(HL|HR|HS|T(?P<tape>\d+)(?P<dir>[LR]))$')


class NondeterministicMachine(ValueError):
    "Raised when a machine has two transitions for the same key"


class Transition(namedtuple('Transition', ('state', 'write', 'move'))):
    __slots__ = ()


class TuringMachine:
    """
    A deterministic machine with *tapes* tapes.

    :param states:
        The machine's states.

    :param start:
        The start state.

    :param halt:
        The halt states.

    :param str blank:
        The blank symbol.

    :param alphabet:
        The tape symbols (single characters); the blank is added if missing.

    :param transitions:
        An iterable of (state, read, new_state, write, move) tuples where
        *read* and *write* are strings of one symbol per tape and *move* is
        one of ``HL``, ``HR``, ``HS``, ``T<i>L`` or ``T<i>R``.
    """
    def __init__(self, tapes, states, start, halt, blank, alphabet, transitions,
                 name=None):
        if tapes < 1:
            raise ValueError('a machine needs at least one tape')
        self.tapes = tapes
        self.states = tuple(states)
        self.start = start
        self.halt = frozenset(halt)
        self.blank = blank
        self.alphabet = tuple(OrderedDict.fromkeys(tuple(alphabet) + (blank,)))
        self.name = name
        if start not in self.states:
            raise ValueError('start state %r is not a state' % start)
        if not self.halt <= set(self.states):
            raise ValueError('halt states must be states')
        self.transitions = {}
        for state, read, new_state, write, move in transitions:
            read, write = tuple(read), tuple(write)
            if len(read) != tapes or len(write) != tapes:
                raise ValueError(
                    'transition on %s %s must name %d symbols' %
                    (state, ''.join(read), tapes))
            if state not in self.states or new_state not in self.states:
                raise ValueError('transition on %s uses unknown states' % state)
            if not set(read + write) <= set(self.alphabet):
                raise ValueError('transition on %s uses unknown symbols' % state)
            match = MOVE_RE.match(move)
            if not match:
                raise ValueError('unknown move %r' % move)
            if match.group('tape') is not None and int(match.group('tape')) >= tapes:
                raise ValueError('move %s names a missing tape' % move)
            if (state, read) in self.transitions:
                raise NondeterministicMachine(
                    'two transitions on %s %s' % (state, ''.join(read)))
            self.transitions[state, read] = Transition(new_state, write, move)

    def __repr__(self):
        return '<TuringMachine %s tapes=%d states=%d>' % (
            self.name or '?', self.tapes, len(self.states))

    def step(self, state, symbols, head, width):
        """
        Returns the :class:`Transition` taken in *state* reading *symbols* at
        *head*, or ``None`` if the machine halts there.
        """
        if state in self.halt:
            return None
        trans = self.transitions.get((state, tuple(symbols)))
        if trans is None:
            return None
        if (trans.move == 'HL' and head == 0) or (
                trans.move == 'HR' and head == width - 1):
            return None
        return trans


class Config(namedtuple('Config', ('state', 'head', 'tapes'))):
    """
    A configuration: the machine *state*, the *head* position and the
    contents of each tape window as a string.
    """
    __slots__ = ()

    def __str__(self):
        return '%s@%d %s' % (self.state, self.head, ' '.join(self.tapes))


class SpaceTimeDiagram(namedtuple('SpaceTimeDiagram', ('rows', 'halted'))):
    """
    The configurations of a run, one per step, and whether the machine
    halted within the step bound.
    """
    __slots__ = ()


def _shift(tape, direction, blank):
    if direction == 'R':
        return blank + tape[:-1]
    else:
        return tape[1:] + blank


def run_tm(tm, inputs, steps, width):
    """
    Simulate *tm* on *inputs* (one string per tape, each padded with blanks
    to *width*) for at most *steps* steps, returning the
    :class:`SpaceTimeDiagram`.
    """
    if len(inputs) != tm.tapes:
        raise ValueError('expected %d inputs' % tm.tapes)
    if any(len(s) > width for s in inputs):
        raise ValueError('inputs must fit a window of %d cells' % width)
    tapes = [s + tm.blank * (width - len(s)) for s in inputs]
    config = Config(tm.start, 0, tuple(tapes))
    rows = [config]
    for _ in range(steps):
        state, head, tapes = config
        trans = tm.step(state, [t[head] for t in tapes], head, width)
        if trans is None:
            return SpaceTimeDiagram(rows, True)
        tapes = [
            t[:head] + w + t[head + 1:]
            for t, w in zip(tapes, trans.write)
        ]
        if trans.move == 'HL':
            head -= 1
        elif trans.move == 'HR':
            head += 1
        elif trans.move.startswith('T'):
            i = int(trans.move[1:-1])
            tapes[i] = _shift(tapes[i], trans.move[-1], tm.blank)
        config = Config(trans.state, head, tuple(tapes))
        rows.append(config)
    halted = tm.step(
        config.state, [t[config.head] for t in config.tapes], config.head,
        width) is None
    return SpaceTimeDiagram(rows, halted)


def cell_color(symbols, state=None):
    "Returns the vertical colour of a cell holding *symbols* (and the head)"
    return ('c', tuple(symbols), state)


def _head_tiles(tm, symbols, state, edges):
    west_wall, east_wall = edges
    # a stand-in window in which the head sits against the same walls
    head = 0 if west_wall else 1
    trans = tm.step(state, symbols, head, head + (1 if east_wall else 2))
    south = cell_color(symbols, state)
    if trans is None:
        yield south, HALT, IDLE, IDLE
        return
    move, write = trans.move, trans.write
    if move == 'HS':
        yield south, cell_color(write, trans.state), IDLE, IDLE
    elif move == 'HL':
        yield south, cell_color(write), ('h', None, None, ('L', trans.state)), IDLE
    elif move == 'HR':
        yield south, cell_color(write), IDLE, ('h', None, None, ('R', trans.state))
    else:
        i, direction = int(move[1:-1]), move[-1]
        mode = (i, direction)
        carries = (tm.blank,) if (
            west_wall if direction == 'R' else east_wall) else tm.alphabet
        for carry in carries:
            north = list(write)
            north[i] = carry
            if direction == 'R':
                yield (south, cell_color(north, trans.state),
                       ('h', mode, carry, None), ('h', mode, write[i], None))
            else:
                yield (south, cell_color(north, trans.state),
                       ('h', mode, write[i], None), ('h', mode, carry, None))


def _plain_tiles(tm, symbols, edges):
    west_wall, east_wall = edges
    south = cell_color(symbols)
    yield south, cell_color(symbols), IDLE, IDLE
    for state in tm.states:
        if not west_wall:
            yield south, cell_color(symbols, state), ('h', None, None, ('R', state)), IDLE
        if not east_wall:
            yield south, cell_color(symbols, state), IDLE, ('h', None, None, ('L', state))
    for i, direction in product(range(tm.tapes), 'LR'):
        mode = (i, direction)
        carries = (tm.blank,) if (
            west_wall if direction == 'R' else east_wall) else tm.alphabet
        for carry in carries:
            north = list(symbols)
            north[i] = carry
            if direction == 'R':
                yield (south, cell_color(north),
                       ('h', mode, carry, None), ('h', mode, symbols[i], None))
            else:
                yield (south, cell_color(north),
                       ('h', mode, symbols[i], None), ('h', mode, carry, None))


def compile_tm(tm, width):
    """
    Compile *tm* into a :class:`~seasquares.wang.WangTileset` for a tape
    window of *width* cells. Tiles in the first and last column carry the
    wall colours on their outer edges, and the anchor tiles are those of the
    first column showing the head in the start state.
    """
    if width < 1:
        raise ValueError('the tape window needs at least one cell')
    found = OrderedDict()
    anchors = set()
    variants = {(x == 0, x == width - 1) for x in range(min(width, 3))}
    variants.add((width == 1, True))
    for edges in sorted(variants):
        for symbols in product(tm.alphabet, repeat=tm.tapes):
            for state in (None,) + tm.states:
                if state is None:
                    tiles = _plain_tiles(tm, symbols, edges)
                else:
                    tiles = _head_tiles(tm, symbols, state, edges)
                for south, north, west, east in tiles:
                    tile = wang.Tile(
                        north=north,
                        east=WALL_E if edges[1] else east,
                        south=south,
                        west=WALL_W if edges[0] else west)
                    if edges[0] and west != IDLE and west[1] is None:
                        # a head cannot arrive through the wall
                        continue
                    if edges[1] and east != IDLE and east[1] is None:
                        continue
                    if tile not in found:
                        found[tile] = len(found)
                        if edges[0] and state == tm.start:
                            anchors.add(found[tile])
    tiles = list(found)
    colors = {c for tile in tiles for c in tile}
    logger.info('Compiled %r into %d tiles', tm, len(tiles))
    return wang.WangTileset(colors, tiles, anchors)


def tm_boundary(tm, inputs, width, height):
    """
    Returns the boundary constraints pinning the walls on both sides of a
    tiling of the given *height* and the initial configuration on its bottom
    edge.
    """
    tapes = [s + tm.blank * (width - len(s)) for s in inputs]
    boundary = {}
    for y in range(height):
        boundary['W', y] = WALL_W
        boundary['E', y] = WALL_E
    for x in range(width):
        boundary['S', x] = cell_color(
            [t[x] for t in tapes], tm.start if x == 0 else None)
    return boundary


def anchor_rule(x, y):
    "Requires an anchor tile at the origin of a diagram"
    return True if (x, y) == (0, 0) else None


def decode_tiling(tiling, tileset):
    """
    Recover the configurations shown by the south edges of each row of
    *tiling* as a list of :class:`Config`.
    """
    rows = []
    tiles = tiling.tiles(tileset)
    for y in range(tiling.height):
        cells = [tiles[x, y].south for x in range(tiling.width)]
        heads = [x for x, (_, _, state) in enumerate(cells) if state is not None]
        if len(heads) != 1:
            raise ValueError('row %d shows %d heads' % (y, len(heads)))
        head = heads[0]
        tapes = tuple(
            ''.join(symbols[i] for _, symbols, _ in cells)
            for i in range(len(cells[0][1])))
        rows.append(Config(cells[head][2], head, tapes))
    return rows


class EquivalenceVerdict(namedtuple('EquivalenceVerdict', ('ok', 'status', 'row', 'detail'))):
    """
    The outcome of :func:`verify_equivalence`. *status* is one of ``pass``,
    ``pass-with-halt``, ``mismatch``, ``non-unique`` or ``unsat``; *row* is
    the first differing row of a mismatch.
    """
    __slots__ = ()


def verify_equivalence(tm, inputs, n, width, tileset=None):
    """
    Compare the anchored tilings of height *n* of the compiled *tm* (or the
    given *tileset*) against :func:`run_tm`. Before the machine halts there
    must be exactly one tiling, matching the diagram; afterwards there must
    be none.
    """
    if n < 1:
        raise ValueError('n must be positive')
    if tileset is None:
        tileset = compile_tm(tm, width)
    diagram = run_tm(tm, inputs, n - 1, width)
    boundary = tm_boundary(tm, inputs, width, n)
    expected = 1 if len(diagram.rows) >= n else 0
    try:
        count = wang.solve_region(
            tileset, width, n, boundary=boundary, mode='count',
            anchor_rule=anchor_rule, cap=1)
    except wang.CapExceeded:
        return EquivalenceVerdict(False, 'non-unique', None, 'more than one tiling')
    if expected == 0:
        if count == 0:
            return EquivalenceVerdict(
                True, 'pass-with-halt', None,
                'halted after %d steps' % (len(diagram.rows) - 1))
        return EquivalenceVerdict(
            False, 'mismatch', len(diagram.rows), 'tiling continues after halt')
    if count == 0:
        return EquivalenceVerdict(False, 'unsat', None, 'no anchored tiling')
    tiling = wang.solve_region(
        tileset, width, n, boundary=boundary, anchor_rule=anchor_rule)
    try:
        decoded = decode_tiling(tiling, tileset)
    except ValueError as exc:
        return EquivalenceVerdict(False, 'mismatch', None, str(exc))
    for row, (got, want) in enumerate(zip(decoded, diagram.rows)):
        if got != want:
            return EquivalenceVerdict(
                False, 'mismatch', row, '%s != %s' % (got, want))
    return EquivalenceVerdict(True, 'pass', None, None)


def _machine(name, tapes, states, start, halt, blank, alphabet, rules):
    return TuringMachine(
        tapes, states, start, halt, blank, alphabet,
        [tuple(rule.split()) for rule in rules], name=name)


CORPUS = OrderedDict((m.name, m) for m in (
    _machine('halter', 1, ['h'], 'h', ['h'], '_', '1', []),
    _machine('incrementer', 1, ['q0', 'q1'], 'q0', [], '_', '1', [
        'q0 1 q0 1 HR',
        'q0 _ q1 1 HL',
        'q1 1 q1 1 HL',
    ]),
    _machine('eraser', 1, ['q0'], 'q0', [], '_', '1', [
        'q0 1 q0 _ HR',
    ]),
    _machine('bouncer', 1, ['right', 'left'], 'right', [], '_', '1', [
        'right 1 right 1 HR',
        'right _ left _ HL',
        'left 1 left 1 HL',
    ]),
    _machine('shifter', 1, ['q0'], 'q0', [], '_', '1', [
        'q0 1 q0 1 T0R',
        'q0 _ q0 _ T0R',
    ]),
    _machine('copier', 2, ['copy', 'shift'], 'copy', [], 'b', '1', [
        'copy 1b shift 11 T1R',
        'shift 1b copy 1b T0L',
    ]),
))
