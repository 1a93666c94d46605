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

import pytest

from seasquares import wang
from seasquares.machines import (
    HALT,
    WALL_W,
    WALL_E,
    Config,
    TuringMachine,
    NondeterministicMachine,
    CORPUS,
    run_tm,
    cell_color,
    compile_tm,
    tm_boundary,
    anchor_rule,
    decode_tiling,
    verify_equivalence,
)


INPUTS = {
    'halter': ('1',),
    'incrementer': ('111',),
    'eraser': ('11',),
    'bouncer': ('11',),
    'shifter': ('11',),
    'copier': ('11', ''),
}


def test_machine_invalid():
    with pytest.raises(ValueError):
        TuringMachine(0, ['q'], 'q', [], '_', '1', [])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'r', [], '_', '1', [])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'q', ['r'], '_', '1', [])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'q', [], '_', '1', [('q', '1', 'q', '1', 'HX')])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'q', [], '_', '1', [('q', '1', 'q', '1', 'T1R')])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'q', [], '_', '1', [('q', '2', 'q', '1', 'HR')])
    with pytest.raises(ValueError):
        TuringMachine(1, ['q'], 'q', [], '_', '1', [('q', '11', 'q', '1', 'HR')])


def test_machine_nondeterministic():
    with pytest.raises(NondeterministicMachine):
        TuringMachine(1, ['q', 'r'], 'q', [], '_', '1', [
            ('q', '1', 'q', '1', 'HR'),
            ('q', '1', 'r', '1', 'HL'),
        ])


def test_machine_repr():
    assert repr(CORPUS['copier']) == '<TuringMachine copier tapes=2 states=2>'


def test_run_halter():
    diagram = run_tm(CORPUS['halter'], ('1',), 5, 3)
    assert diagram.rows == [Config('h', 0, ('1__',))]
    assert diagram.halted


def test_run_incrementer():
    diagram = run_tm(CORPUS['incrementer'], ('111',), 20, 6)
    assert len(diagram.rows) == 7
    assert diagram.halted
    assert diagram.rows[3] == Config('q0', 3, ('111___',))
    assert diagram.rows[4] == Config('q1', 2, ('1111__',))
    assert diagram.rows[-1] == Config('q1', 0, ('1111__',))


def test_run_step_bound():
    diagram = run_tm(CORPUS['incrementer'], ('111',), 2, 6)
    assert len(diagram.rows) == 3
    assert not diagram.halted


def test_run_shifter_loses_symbols():
    diagram = run_tm(CORPUS['shifter'], ('11',), 5, 4)
    assert [row.tapes[0] for row in diagram.rows] == [
        '11__', '_11_', '__11', '___1', '____', '____']
    assert all(row.head == 0 for row in diagram.rows)
    assert not diagram.halted


def test_run_copier():
    diagram = run_tm(CORPUS['copier'], ('11', ''), 10, 4)
    assert diagram.halted
    assert len(diagram.rows) == 5
    assert diagram.rows[1] == Config('shift', 0, ('11bb', 'b1bb'))
    assert diagram.rows[-1] == Config('copy', 0, ('bbbb', 'b11b'))


def test_run_bad_inputs():
    with pytest.raises(ValueError):
        run_tm(CORPUS['copier'], ('11',), 1, 4)
    with pytest.raises(ValueError):
        run_tm(CORPUS['eraser'], ('11111',), 1, 4)


def test_compile_walls():
    tileset = compile_tm(CORPUS['bouncer'], 4)
    assert tileset.anchors
    for index in tileset.anchors:
        tile = tileset.tiles[index]
        assert tile.west == WALL_W
        assert tile.south[2] == 'right'
    assert any(tile.east == WALL_E for tile in tileset.tiles)
    assert any(tile.north == HALT for tile in tileset.tiles)


def test_compile_narrow():
    tileset = compile_tm(CORPUS['eraser'], 1)
    assert all(
        tile.west == WALL_W and tile.east == WALL_E for tile in tileset.tiles)
    with pytest.raises(ValueError):
        compile_tm(CORPUS['eraser'], 0)


def test_boundary():
    boundary = tm_boundary(CORPUS['eraser'], ('1',), 3, 2)
    assert boundary['W', 1] == WALL_W
    assert boundary['E', 0] == WALL_E
    assert boundary['S', 0] == cell_color('1', 'q0')
    assert boundary['S', 2] == cell_color('_')


def test_decode_incrementer():
    tm = CORPUS['incrementer']
    tileset = compile_tm(tm, 6)
    tiling = wang.solve_region(
        tileset, 6, 7, boundary=tm_boundary(tm, ('111',), 6, 7),
        anchor_rule=anchor_rule)
    assert decode_tiling(tiling, tileset) == run_tm(tm, ('111',), 6, 6).rows


def test_decode_copier():
    tm = CORPUS['copier']
    tileset = compile_tm(tm, 4)
    tiling = wang.solve_region(
        tileset, 4, 5, boundary=tm_boundary(tm, ('11', ''), 4, 5),
        anchor_rule=anchor_rule)
    rows = decode_tiling(tiling, tileset)
    assert rows[-1] == Config('copy', 0, ('bbbb', 'b11b'))


@pytest.mark.parametrize('name', list(CORPUS))
def test_corpus_equivalence(name):
    tm = CORPUS[name]
    inputs = INPUTS[name]
    tileset = compile_tm(tm, 4)
    for n in range(1, 9):
        verdict = verify_equivalence(tm, inputs, n, 4, tileset=tileset)
        assert verdict.ok, (n, verdict)
        rows = len(run_tm(tm, inputs, n - 1, 4).rows)
        if rows >= n:
            assert verdict.status == 'pass'
        else:
            assert verdict.status == 'pass-with-halt'


def test_halter_stops():
    tm = CORPUS['halter']
    assert verify_equivalence(tm, ('1',), 1, 2).status == 'pass'
    verdict = verify_equivalence(tm, ('1',), 3, 2)
    assert verdict.ok
    assert verdict.status == 'pass-with-halt'
    assert verdict.detail == 'halted after 0 steps'


def test_deleted_tile():
    tm = CORPUS['incrementer']
    tileset = compile_tm(tm, 4)
    tiling = wang.solve_region(
        tileset, 4, 3, boundary=tm_boundary(tm, ('1',), 4, 3),
        anchor_rule=anchor_rule)
    crippled = tileset.without(tiling[1, 1])
    verdict = verify_equivalence(tm, ('1',), 3, 4, tileset=crippled)
    assert not verdict.ok
    assert verdict.status in ('unsat', 'non-unique', 'mismatch')


def test_equivalence_bad_height():
    with pytest.raises(ValueError):
        verify_equivalence(CORPUS['halter'], ('1',), 0, 2)
