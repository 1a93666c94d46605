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

import random
from itertools import product

import pytest

from seasquares import const
from seasquares.squares import Pattern, Corner, Side, random_sea
from seasquares.yshift import lift
from seasquares.wang import WangTileset, Tile, location_tileset
from seasquares.machines import CORPUS
from seasquares.plaid import DemandGrid, Entry, FEED, build_plaid
from seasquares.protocol.records import (
    NEUTRAL,
    CornerMessage,
    SizeEntry,
    ParameterTape,
    Macrocolor,
    MacrotileWitness,
)
from seasquares.formats import (
    FormatError,
    parse_pattern,
    render_pattern,
    parse_tileset,
    render_tileset,
    parse_machine,
    render_machine,
    parse_witness,
    render_witness,
    child_filename,
    load_children,
    save_children,
    parse_demands,
    render_demands,
    parse_labeling,
    render_labeling,
)


def test_format_error():
    exc = FormatError('bad things', 3)
    assert str(exc) == 'line 3: bad things'
    assert exc.line == 3
    assert isinstance(exc, ValueError)
    assert str(FormatError('bad things')) == 'bad things'


def test_parse_pattern():
    pattern = parse_pattern('pattern 3 2 bin\n#..\n.##\n')
    assert pattern == Pattern.from_rows(['#..', '.##'])
    assert pattern[0, 1] == '#'
    assert render_pattern(pattern) == 'pattern 3 2 bin\n#..\n.##\n'


def test_pattern_round_trip():
    rng = random.Random(const.SEED)
    for _ in range(5):
        sea = random_sea(6, 5, rng, 3)
        pattern = Pattern.from_cells(6, 5, (c for sq in sea for c in sq.cells()))
        assert parse_pattern(render_pattern(pattern)) == pattern
        directed = lift(pattern)
        assert render_pattern(directed).startswith('pattern 6 5 y\n')
        assert parse_pattern(render_pattern(directed)) == directed


@pytest.mark.parametrize('text, line', [
    ('', None),
    ('pattern 2 2\n..\n..\n', 1),
    ('pattern 2 2 hex\n..\n..\n', 1),
    ('pattern 0 1 bin\n\n', 1),
    ('pattern 2 2 bin\n..\n', 1),
    ('pattern 2 2 bin\n..\n...\n', 3),
    ('pattern 2 2 bin\n..\n.^\n', 3),
])
def test_parse_pattern_invalid(text, line):
    with pytest.raises(FormatError) as exc:
        parse_pattern(text)
    assert exc.value.line == line


def test_parse_tileset():
    ts = parse_tileset(
        'tileset 2 2\n'
        'red\n'
        'blue\n'
        'tile 0 N=red E=blue S=red W=blue anchor\n'
        'tile 1 N=blue E=blue S=blue W=blue\n')
    assert ts.colors == {'red', 'blue'}
    assert ts.tiles == [Tile('red', 'blue', 'red', 'blue'), Tile('blue', 'blue', 'blue', 'blue')]
    assert ts.anchors == {0}
    assert render_tileset(ts) == (
        'tileset 2 2\n'
        'blue\n'
        'red\n'
        'tile 0 N=red E=blue S=red W=blue anchor\n'
        'tile 1 N=blue E=blue S=blue W=blue\n')


def test_tileset_round_trip():
    text = render_tileset(location_tileset(3))
    assert 'N=(0,1)' in text
    ts = parse_tileset(text)
    assert len(ts) == 9
    assert render_tileset(ts) == text


def test_render_tileset_clash():
    ts = WangTileset({'a b', 'ab'}, [('a b', 'ab', 'a b', 'ab')])
    with pytest.raises(FormatError):
        render_tileset(ts)


@pytest.mark.parametrize('text', [
    '',
    'tileset 1\nred\n',
    'tileset 1 1\nred\n',
    'tileset 1 1\nred green\ntile 0 N=red E=red S=red W=red\n',
    'tileset 1 1\nred\ntile 1 N=red E=red S=red W=red\n',
    'tileset 1 1\nred\ntile 0 N=red E=red S=red\n',
    'tileset 1 1\nred\ntile 0 N=red E=red S=red W=blue\n',
])
def test_parse_tileset_invalid(text):
    with pytest.raises(FormatError):
        parse_tileset(text)


def test_parse_machine():
    tm = parse_machine(
        'tm tapes=1 name=flipper\n'
        'states q0 done\n'
        'start q0\n'
        'halt done\n'
        'blank _\n'
        'on q0 0 -> q0 1 HR\n'
        'on q0 1 -> q0 0 HR\n'
        'on q0 _ -> done _ HS\n')
    assert tm.name == 'flipper'
    assert tm.tapes == 1
    assert tm.states == ('q0', 'done')
    assert tm.halt == {'done'}
    assert tm.alphabet == ('0', '1', '_')
    assert tm.transitions['q0', ('0',)] == (('q0', ('1',), 'HR'))


@pytest.mark.parametrize('name', list(CORPUS))
def test_machine_round_trip(name):
    tm = CORPUS[name]
    text = render_machine(tm)
    parsed = parse_machine(text)
    assert render_machine(parsed) == text
    assert parsed.transitions == tm.transitions
    assert parsed.alphabet == tm.alphabet
    assert parsed.halt == tm.halt


@pytest.mark.parametrize('text', [
    '',
    'machine tapes=1\n',
    'tm tapes=0\nstates q\nstart q\nhalt\nblank _\n',
    'tm tapes=1 speed=3\nstates q\nstart q\nhalt\nblank _\n',
    'tm tapes=1\nstates q\nstart q\nhalt\n',
    'tm tapes=1\nstates q\nstart q\nhalt\nblank __\n',
    'tm tapes=1\nstates q\nstart q\nstart q\nhalt\nblank _\n',
    'tm tapes=1\nstates q\nstart r\nhalt\nblank _\n',
    'tm tapes=1\nstates q\nstart q\nhalt\nblank _\nspeed 3\n',
    'tm tapes=1\nstates q\nstart q\nhalt\nblank _\non q _ q _ HR\n',
    'tm tapes=1\nstates q\nstart q\nhalt\nblank _\non q _ -> q _ HX\n',
    'tm tapes=1\nstates q\nstart q\nhalt\nblank _\n'
    'on q _ -> q _ HR\non q _ -> q 1 HL\n',
])
def test_parse_machine_invalid(text):
    with pytest.raises(FormatError):
        parse_machine(text)


def sample_witness():
    return MacrotileWitness(
        ParameterTape(
            0, 1, corners=[Corner(3, 3, 'LL')], sizes=[2, 5],
            locations=[(2, 0, 0)], partial_sides=[Side('V', 1, -1, 5, -1, 3)]),
        N=Macrocolor(
            machine='0110', wire='1', coords=(1, 0), corner_copy=NEUTRAL,
            sizes=[SizeEntry(5, 0, False)]),
        E=Macrocolor(
            coords=(1, 1), corner_copy=[Corner(3, 3, 'LL')],
            primary=[CornerMessage(3, 3, 'LL', False)],
            secondary=[CornerMessage(-1, 2, 'UR', True)], reading=5),
        S=Macrocolor(coords=(0, 0)),
        W=Macrocolor(coords=(0, 1), sizes=[SizeEntry(2, 3, True)]))


def test_witness_round_trip():
    w = sample_witness()
    text = render_witness(w)
    assert '[color N]\n' in text
    assert 'corner_copy = neutral\n' in text
    assert 'primary = 3,3,LL,out\n' in text
    assert 'sides = V,1,-1,5,-1,3\n' in text
    assert parse_witness(text) == w


def test_witness_defaults():
    text = '[tape]\ni0 = 0\ni = 1\n' + ''.join(
        '[color %s]\n' % side for side in 'NESW')
    w = parse_witness(text)
    assert w.tape == ParameterTape(0, 1)
    assert all(w.color(side) == Macrocolor() for side in 'NESW')


def test_children_round_trip(big_square, tmp_path):
    save_children(str(tmp_path), big_square)
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(
        child_filename(pos) for pos in product(range(2), repeat=2))
    (tmp_path / 'README').write_text('not a witness')
    assert load_children(str(tmp_path)) == big_square


def test_load_children_invalid(tmp_path):
    (tmp_path / child_filename((0, 0))).write_text('[tape]\ni0 = x\n')
    with pytest.raises(FormatError) as exc:
        load_children(str(tmp_path))
    assert 'child_0_0.ini' in str(exc.value)


@pytest.mark.parametrize('change', [
    ('i = 1', 'i = -1'),
    ('sizes = 2 5', 'sizes = 2 five'),
    ('corners = 3,3,LL', 'corners = 3,3,XX'),
    ('primary = 3,3,LL,out', 'primary = 3,3,LL,sideways'),
    ('machine = 0110', 'machine = 0120'),
    ('reading = 5', 'reading = 0'),
    ('coords = 1,0', 'coords = 1'),
    ('sides = V,1,-1,5,-1,3', 'sides = V,1,-1,5,0,3'),
    ('[color W]', '[colour W]'),
    ('i0 = 0', 'i0 = 0\nlevel = 3'),
    ('[tape]', 'tape'),
])
def test_parse_witness_invalid(change):
    text = render_witness(sample_witness())
    assert change[0] in text
    with pytest.raises(FormatError):
        parse_witness(text.replace(change[0], change[1], 1))


def test_parse_demands():
    d = parse_demands('demands 4\nnode 0 0: 1,2\nnode 3 3: 2\n\nnode 1 2:\n')
    assert d == DemandGrid(4, {(0, 0): [1, 2], (3, 3): [2]})
    assert render_demands(d) == (
        'demands 4 K=%d c=%d unit=1\nnode 0 0: 1,2\nnode 3 3: 2\n' % (
            const.PLAID_LABELS_PER_LIST, const.PLAID_SUBGRID_CONSTANT))
    d = parse_demands('demands 8 K=1 c=1.5 unit=4\nnode 7 0: 9\n')
    assert (d.K, d.c, d.unit) == (1, 1.5, 4)
    assert parse_demands(render_demands(d)) == d


@pytest.mark.parametrize('text', [
    '',
    'demand 4\n',
    'demands\n',
    'demands 4 K\n',
    'demands 4 L=3\n',
    'demands 4 K=0\n',
    'demands 4\nnode 4 0: 1\n',
    'demands 4\nnode 0 0: 1\nnode 0 0: 2\n',
    'demands 4\nnode 0 0: x\n',
    'demands 4\nnode 0: 1\n',
])
def test_parse_demands_invalid(text):
    with pytest.raises(FormatError):
        parse_demands(text)


def test_parse_labeling():
    el = parse_labeling(
        'edges\n'
        'edge 0 0 H: 1,2#1@0+\n'
        'edge 0 0 V: -#feed,3@2-=1/0\n'
        'edge 1 0 V:\n')
    assert el == {
        (0, 0, 'H'): (Entry(1, 0), Entry(2, 1, counter=0, forward=True)),
        (0, 0, 'V'): (
            Entry(None, FEED),
            Entry(3, 0, counter=2, annotation=(1, 0), forward=False)),
        (1, 0, 'V'): (),
    }
    assert parse_labeling(render_labeling(el)) == el


def test_labeling_round_trip():
    d = DemandGrid(8, {(0, 0): [1, 2], (5, 6): [2], (7, 7): [1, 3]})
    el = build_plaid(d)
    assert parse_labeling(render_labeling(el)) == el


@pytest.mark.parametrize('text', [
    '',
    'labels\n',
    'edges\nedge 0 0 D: 1\n',
    'edges\nedge 0 0 H: 1,x\n',
    'edges\nedge 0 0 H: 1@\n',
    'edges\nedge 0 0 H: 1\nedge 0 0 H: 2\n',
])
def test_parse_labeling_invalid(text):
    with pytest.raises(FormatError):
        parse_labeling(text)
