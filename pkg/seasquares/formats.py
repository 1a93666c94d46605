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
Parsers and renderers for every text file the :program:`seasq` command
reads or writes. Each ``parse_*`` function takes the text of a file and
returns the record it describes, raising :exc:`FormatError` with the
offending line number; each ``render_*`` function is its inverse. The
grammars are documented in :file:`FORMATS.rst`.

.. autoexception:: FormatError

.. autofunction:: parse_pattern

.. autofunction:: parse_tileset

.. autofunction:: parse_machine

.. autofunction:: parse_witness

.. autofunction:: load_children

.. autofunction:: parse_demands

.. autofunction:: parse_labeling
"""

import re
import os
import logging
import configparser

from voluptuous import (
    Schema,
    ExactSequence,
    All,
    Any,
    Coerce,
    Length,
    Match,
    Range,
    Required,
    Invalid,
)

from . import const
from .squares import Pattern, Corner, Side
from .wang import WangTileset
from .machines import TuringMachine
from .plaid import DemandGrid, Entry, FEED
from .protocol.records import (
    SIDES,
    NEUTRAL,
    CornerMessage,
    SizeEntry,
    ParameterTape,
    Macrocolor,
    MacrotileWitness,
)


logger = logging.getLogger(__name__)


class FormatError(ValueError):
    "Raised when a text file does not follow its grammar"

    def __init__(self, msg, line=None):
        if line is not None:
            msg = 'line %d: %s' % (line, msg)
        super().__init__(msg)
        self.line = line


def _check(schema, value, line=None):
    try:
        return schema(value)
    except Invalid as exc:
        raise FormatError(str(exc), line)


def _lines(text):
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line:
            yield number, line


_count = All(Coerce(int), Range(min=0))
_positive = All(Coerce(int), Range(min=1))
_orientation = Any('UL', 'UR', 'LL', 'LR')
_direction = Any('in', 'out')
_bits = Match(r'^[01]*$')


# patterns ###################################################################

_ALPHABETS = {'bin': const.BINARY_ALPHABET, 'y': const.Y_ALPHABET}

_pattern_header = Schema(ExactSequence([
    'pattern', _positive, _positive, Any(*_ALPHABETS)]))


def parse_pattern(text):
    """
    Parses a pattern file: a ``pattern <width> <height> bin|y`` header and
    *height* rows of *width* cells, top row first.
    """
    lines = list(_lines(text))
    if not lines:
        raise FormatError('empty pattern file')
    number, header = lines[0]
    _, width, height, name = _check(_pattern_header, header.split(), number)
    alphabet = _ALPHABETS[name]
    rows = lines[1:]
    if len(rows) != height:
        raise FormatError(
            'expected %d rows but found %d' % (height, len(rows)), number)
    for number, row in rows:
        if len(row) != width:
            raise FormatError(
                'expected %d cells but found %d' % (width, len(row)), number)
        bad = set(row) - set(alphabet)
        if bad:
            raise FormatError(
                'symbols %s are not in the %s alphabet' % (
                    ''.join(sorted(bad)), name), number)
    return Pattern.from_rows([row for number, row in rows], alphabet)


def render_pattern(pattern):
    name = 'bin' if pattern.alphabet == const.BINARY_ALPHABET else 'y'
    lines = ['pattern %d %d %s' % (pattern.width, pattern.height, name)]
    lines.extend(pattern.rows())
    return '\n'.join(lines) + '\n'


# tilesets ###################################################################

_tileset_header = Schema(ExactSequence(['tileset', _count, _count]))

TILE_RE = re.compile(
    r'^tile (?P<id>\d+) N=(?P<N>\S+) E=(?P<E>\S+) S=(?P<S>\S+) W=(?P<W>\S+)'
    r'(?P<anchor> anchor)?$')


def parse_tileset(text):
    """
    Parses a tileset file: a ``tileset <ncolors> <ntiles>`` header, one
    color token per line, then one ``tile <id> N=.. E=.. S=.. W=.. [anchor]``
    line per tile with the ids counting up from 0.
    """
    lines = list(_lines(text))
    if not lines:
        raise FormatError('empty tileset file')
    number, header = lines[0]
    _, ncolors, ntiles = _check(_tileset_header, header.split(), number)
    if len(lines) != 1 + ncolors + ntiles:
        raise FormatError(
            'expected %d colors and %d tiles' % (ncolors, ntiles), number)
    colors = []
    for number, token in lines[1:1 + ncolors]:
        if len(token.split()) != 1:
            raise FormatError('color tokens may not contain spaces', number)
        colors.append(token)
    tiles, anchors = [], []
    for expected, (number, line) in enumerate(lines[1 + ncolors:]):
        match = TILE_RE.match(line)
        if not match:
            raise FormatError('malformed tile %r' % line, number)
        if int(match.group('id')) != expected:
            raise FormatError('expected tile %d' % expected, number)
        tiles.append(tuple(match.group(side) for side in 'NESW'))
        if match.group('anchor'):
            anchors.append(expected)
    try:
        return WangTileset(colors, tiles, anchors)
    except ValueError as exc:
        raise FormatError(str(exc))


def _token(color):
    return ''.join(str(color).split())


def render_tileset(tileset):
    """
    Renders *tileset*; colors which are not strings are written as their
    text without spaces.
    """
    tokens = {color: _token(color) for color in tileset.colors}
    if len(set(tokens.values())) != len(tokens):
        raise FormatError('two colors render to the same token')
    lines = ['tileset %d %d' % (len(tokens), len(tileset))]
    lines.extend(sorted(tokens.values()))
    for index, tile in enumerate(tileset.tiles):
        lines.append('tile %d N=%s E=%s S=%s W=%s%s' % (
            index, tokens[tile.north], tokens[tile.east],
            tokens[tile.south], tokens[tile.west],
            ' anchor' if index in tileset.anchors else ''))
    return '\n'.join(lines) + '\n'


# machines ###################################################################

_machine_schema = Schema({
    Required('tapes'): _positive,
    'name': str,
    Required('states'): All([str], Length(min=1)),
    Required('start'): ExactSequence([str]),
    Required('halt'): [str],
    Required('blank'): ExactSequence([Match(r'^\S$')]),
    'alphabet': All([Match(r'^\S+$')], Length(max=1)),
    'on': [ExactSequence([str, str, '->', str, str, str])],
})


def parse_machine(text):
    """
    Parses a machine file: a ``tm tapes=<k> [name=<name>]`` header, the
    ``states``, ``start``, ``halt`` and ``blank`` lines, an optional
    ``alphabet`` line and one ``on <state> <read> -> <state> <write> <move>``
    line per transition, *read* and *write* holding one symbol per tape.
    """
    lines = list(_lines(text))
    if not lines or not lines[0][1].startswith('tm '):
        raise FormatError('expected a "tm" header', lines[0][0] if lines else None)
    fields = {'on': []}
    for word in lines[0][1].split()[1:]:
        key, sep, value = word.partition('=')
        if not sep or key not in ('tapes', 'name'):
            raise FormatError('unknown header field %r' % word, lines[0][0])
        fields[key] = value
    for number, line in lines[1:]:
        key, *words = line.split()
        if key == 'on':
            fields['on'].append(words)
        elif key in fields:
            raise FormatError('repeated %r line' % key, number)
        else:
            fields[key] = words
    fields = _check(_machine_schema, fields)
    alphabet = ''.join(fields.get('alphabet', []))
    transitions = [
        (state, read, new_state, write, move)
        for state, read, _, new_state, write, move in fields['on']
    ]
    alphabet += ''.join(
        symbol for t in transitions for symbol in t[1] + t[3]
        if symbol not in alphabet)
    try:
        return TuringMachine(
            fields['tapes'], fields['states'], fields['start'][0],
            fields['halt'], fields['blank'][0], alphabet, transitions,
            name=fields.get('name'))
    except ValueError as exc:
        raise FormatError(str(exc))


def render_machine(tm):
    header = 'tm tapes=%d' % tm.tapes
    if tm.name:
        header += ' name=%s' % tm.name
    order = {state: index for index, state in enumerate(tm.states)}
    lines = [
        header,
        'states %s' % ' '.join(tm.states),
        'start %s' % tm.start,
        ' '.join(['halt'] + sorted(tm.halt, key=order.get)),
        'blank %s' % tm.blank,
        'alphabet %s' % ''.join(tm.alphabet),
    ]
    for (state, read), trans in sorted(
            tm.transitions.items(), key=lambda item: (order[item[0][0]], item[0][1])):
        lines.append('on %s %s -> %s %s %s' % (
            state, ''.join(read), trans.state, ''.join(trans.write), trans.move))
    return '\n'.join(lines) + '\n'


# witnesses ##################################################################

def _listed(item, build):
    item = Schema(item)

    def validator(value):
        return tuple(build(*item(word.split(','))) for word in value.split())
    return validator


def _incoming(direction):
    return direction == 'in'


_corners = _listed(
    ExactSequence([Coerce(int), Coerce(int), _orientation]), Corner)
_messages = _listed(
    ExactSequence([Coerce(int), Coerce(int), _orientation, _direction]),
    lambda x, y, o, d: CornerMessage(x, y, o, _incoming(d)))
_entries = _listed(
    ExactSequence([_positive, _count, _direction]),
    lambda size, counter, d: SizeEntry(size, counter, _incoming(d)))
_locations = _listed(
    ExactSequence([_positive, Coerce(int), Coerce(int)]),
    lambda *location: location)
_sides = _listed(
    ExactSequence([
        Any('H', 'V'), Coerce(int), Coerce(int), Coerce(int),
        All(Coerce(int), Any(1, -1)), _positive]),
    Side)


def _sizes(value):
    return tuple(Schema([_positive])(value.split()))


def _coords(value):
    return tuple(Schema(ExactSequence([_count, _count]))(value.split(',')))


def _corner_copy(value):
    if value == 'neutral':
        return NEUTRAL
    return _corners(value)


def _reading(value):
    if value == 'none':
        return None
    return Schema(_positive)(value)


_tape_schema = Schema({
    Required('i0'): _count,
    Required('i'): _count,
    Required('corners', default=''): _corners,
    Required('sizes', default=''): _sizes,
    Required('locations', default=''): _locations,
    Required('sides', default=''): _sides,
})

_color_schema = Schema({
    Required('machine', default=''): _bits,
    Required('wire', default=''): _bits,
    Required('coords', default='0,0'): _coords,
    Required('corner_copy', default=''): _corner_copy,
    Required('primary', default=''): _messages,
    Required('secondary', default=''): _messages,
    Required('reading', default='none'): _reading,
    Required('sizes', default=''): _entries,
})


def parse_witness(text):
    """
    Parses a witness file: an INI file with a ``[tape]`` section and the
    sections ``[color N]``, ``[color E]``, ``[color S]`` and ``[color W]``.
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise FormatError(str(exc))
    sections = ['tape'] + ['color %s' % side for side in SIDES]
    if sorted(parser.sections()) != sorted(sections):
        raise FormatError('expected the sections %s' % ', '.join(sections))
    tape = _check(_tape_schema, dict(parser['tape']))
    colors = {
        side: Macrocolor(**_check(_color_schema, dict(parser['color %s' % side])))
        for side in SIDES
    }
    return MacrotileWitness(ParameterTape(
        tape['i0'], tape['i'], tape['corners'], tape['sizes'],
        tape['locations'], tape['sides']), **colors)


def _join(items):
    return ' '.join(','.join(str(field) for field in item) for item in items)


def _direction_of(incoming):
    return 'in' if incoming else 'out'


def _tape_lines(tape):
    return [
        '[tape]',
        'i0 = %d' % tape.i0,
        'i = %d' % tape.i,
        'corners = %s' % _join(tape.corners),
        'sizes = %s' % ' '.join(str(size) for size in tape.sizes),
        'locations = %s' % _join(tape.locations),
        'sides = %s' % _join(tape.partial_sides),
    ]


def render_tape(tape):
    "Returns the ``[tape]`` section describing the parameter tape *tape*"
    return '\n'.join(_tape_lines(tape)) + '\n'


def render_witness(w):
    lines = _tape_lines(w.tape)
    for side in SIDES:
        color = w.color(side)
        lines.extend([
            '',
            '[color %s]' % side,
            'machine = %s' % color.machine,
            'wire = %s' % color.wire,
            'coords = %d,%d' % color.coords,
            'corner_copy = %s' % (
                'neutral' if color.corner_copy is NEUTRAL
                else _join(color.corner_copy)),
            'primary = %s' % _join(
                (m.x, m.y, m.orientation, _direction_of(m.incoming))
                for m in color.primary),
            'secondary = %s' % _join(
                (m.x, m.y, m.orientation, _direction_of(m.incoming))
                for m in color.secondary),
            'reading = %s' % ('none' if color.reading is None else color.reading),
            'sizes = %s' % _join(
                (e.size, e.counter, _direction_of(e.incoming))
                for e in color.sizes),
        ])
    return '\n'.join(lines) + '\n'


CHILD_RE = re.compile(r'^child_(?P<x>\d+)_(?P<y>\d+)\.ini$')


def child_filename(position):
    return 'child_%d_%d.ini' % position


def load_children(path):
    """
    Reads every ``child_<x>_<y>.ini`` witness in the directory *path* and
    returns them keyed by position.
    """
    children = {}
    for name in sorted(os.listdir(path)):
        match = CHILD_RE.match(name)
        if match:
            with open(os.path.join(path, name), encoding='utf-8') as f:
                try:
                    w = parse_witness(f.read())
                except FormatError as exc:
                    raise FormatError('%s: %s' % (name, exc))
            children[int(match.group('x')), int(match.group('y'))] = w
    logger.info('Loaded %d children from %s', len(children), path)
    return children


def save_children(path, children):
    "Writes the witnesses of *children* into the directory *path*"
    os.makedirs(path, exist_ok=True)
    for position, w in sorted(children.items()):
        with open(os.path.join(path, child_filename(position)), 'w',
                  encoding='utf-8') as f:
            f.write(render_witness(w))


# demands and labelings ######################################################

def _number(value):
    try:
        return int(value)
    except ValueError:
        return float(value)


_demands_schema = Schema({
    Required('N'): _positive,
    Required('K', default=const.PLAID_LABELS_PER_LIST): _positive,
    Required('c', default=const.PLAID_SUBGRID_CONSTANT): All(
        Coerce(_number), Range(min=0)),
    Required('unit', default=1): _positive,
})

NODE_RE = re.compile(r'^node (?P<x>\d+) (?P<y>\d+):(?P<labels>.*)$')


def _labels(text, number):
    words = [word.strip() for word in text.split(',') if word.strip()]
    return [_check(_positive, word, number) for word in words]


def parse_demands(text):
    """
    Parses a demand file: a ``demands <N> [K=<k>] [c=<c>] [unit=<u>]``
    header and ``node <x> <y>: <label>,<label>,...`` lines.
    """
    lines = list(_lines(text))
    if not lines or lines[0][1].split()[0] != 'demands':
        raise FormatError('expected a "demands" header', lines[0][0] if lines else None)
    number, header = lines[0]
    words = header.split()[1:]
    if not words:
        raise FormatError('the header needs the grid side', number)
    fields = {'N': words[0]}
    for word in words[1:]:
        key, sep, value = word.partition('=')
        if not sep:
            raise FormatError('malformed header field %r' % word, number)
        fields[key] = value
    fields = _check(_demands_schema, fields, number)
    demands = {}
    for number, line in lines[1:]:
        match = NODE_RE.match(line)
        if not match:
            raise FormatError('malformed node %r' % line, number)
        node = int(match.group('x')), int(match.group('y'))
        if not (node[0] < fields['N'] and node[1] < fields['N']):
            raise FormatError('node %r is outside the grid' % (node,), number)
        if node in demands:
            raise FormatError('node %r is listed twice' % (node,), number)
        demands[node] = _labels(match.group('labels'), number)
    return DemandGrid(
        fields['N'], demands, fields['K'], fields['c'], fields['unit'])


def render_demands(d):
    lines = ['demands %d K=%d c=%s unit=%d' % (d.N, d.K, d.c, d.unit)]
    for node, labels in sorted(d.demands.items()):
        lines.append('node %d %d: %s' % (
            node[0], node[1], ','.join(str(label) for label in sorted(labels))))
    return '\n'.join(lines) + '\n'


EDGE_RE = re.compile(r'^edge (?P<x>\d+) (?P<y>\d+) (?P<axis>[HV]):(?P<entries>.*)$')
ENTRY_RE = re.compile(
    r'^(?P<label>-|\d+)(?:#(?P<layer>feed|\d+))?(?:@(?P<counter>\d+))?'
    r'(?P<dir>[+-])?(?:=(?P<ax>\d+)/(?P<ay>\d+))?$')


def _entry(word, number):
    match = ENTRY_RE.match(word)
    if not match:
        raise FormatError('malformed entry %r' % word, number)
    label = None if match.group('label') == '-' else int(match.group('label'))
    layer = match.group('layer') or '0'
    layer = FEED if layer == FEED else int(layer)
    counter = match.group('counter')
    forward = {'+': True, '-': False, None: None}[match.group('dir')]
    annotation = None
    if match.group('ax') is not None:
        annotation = int(match.group('ax')), int(match.group('ay'))
    return Entry(
        label, layer, None if counter is None else int(counter), annotation,
        forward)


def parse_labeling(text):
    """
    Parses an edge labeling: an ``edges`` header and
    ``edge <x> <y> H|V: <entry>,<entry>,...`` lines. An entry is a label
    (``-`` for filler) optionally followed by ``#<layer>``, ``@<counter>``,
    a direction (``+`` forward, ``-`` backward) and ``=<x>/<y>`` naming the
    node it is attributed to.
    """
    lines = list(_lines(text))
    if not lines or lines[0][1] != 'edges':
        raise FormatError('expected an "edges" header', lines[0][0] if lines else None)
    el = {}
    for number, line in lines[1:]:
        match = EDGE_RE.match(line)
        if not match:
            raise FormatError('malformed edge %r' % line, number)
        edge = int(match.group('x')), int(match.group('y')), match.group('axis')
        if edge in el:
            raise FormatError('edge %r is listed twice' % (edge,), number)
        words = [w.strip() for w in match.group('entries').split(',') if w.strip()]
        el[edge] = tuple(_entry(word, number) for word in words)
    return el


def _render_entry(e):
    text = '-' if e.label is None else str(e.label)
    if e.layer != 0:
        text += '#%s' % e.layer
    if e.counter is not None:
        text += '@%d' % e.counter
    if e.forward is not None:
        text += '+' if e.forward else '-'
    if e.annotation is not None:
        text += '=%d/%d' % tuple(e.annotation)
    return text


def render_labeling(el):
    lines = ['edges']
    for edge, entries in sorted(el.items()):
        lines.append('edge %d %d %s: %s' % (
            edge[0], edge[1], edge[2], ','.join(_render_entry(e) for e in entries)))
    return '\n'.join(lines) + '\n'
