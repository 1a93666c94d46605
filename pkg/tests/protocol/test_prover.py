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

from seasquares.layout import location_part, location_at
from seasquares.squares import Corner, Square, MalformedPattern
from seasquares.protocol.records import NEUTRAL, CornerMessage, SizeEntry
from seasquares.protocol.prover import (
    recorded_corners,
    child_tape,
    size_entries,
    prove_children,
)
from seasquares.plaid import Entry


def test_recorded_corners():
    sq = Square(5, 3, 3)
    assert list(recorded_corners([sq], (0, 0, 3, 3))) == [(sq, Corner(3, 3, 'LL'))]
    assert list(recorded_corners([sq], (0, 0, 7, 7))) == []
    assert list(recorded_corners([Square(1, 1, 1)], (0, 0, 3, 3))) == []


def test_child_tape(toy_scale):
    tape = child_tape([Square(3, 1, 1)], toy_scale, (0, 0))
    assert tape.sizes == (3,)
    assert tape.corners == ()
    tape = child_tape([Square(5, 3, 3)], toy_scale, (1, 0))
    assert tape.sizes == ()
    assert tape.corners == (Corner(3, 3, 'LR'),)
    tape = child_tape([Square(2, 3, 0)], toy_scale, (1, 0), distinct=True)
    assert tape.sizes == (2,)
    assert tape.locations == ((2, -1, 0),)


def test_size_entries():
    el = {(0, 0, 'H'): (Entry(5, 0, counter=0, forward=True),)}
    assert size_entries(el) == {
        ((0, 0), 'E'): (SizeEntry(5, 0, False),),
        ((1, 0), 'W'): (SizeEntry(5, 0, True),),
    }
    el = {(0, 0, 'V'): (Entry(2, 0, counter=0, forward=False), Entry(None, 0))}
    assert size_entries(el) == {
        ((0, 0), 'N'): (SizeEntry(2, 0, True),),
        ((0, 1), 'S'): (SizeEntry(2, 0, False),),
    }


def test_prove_small_square(small_square):
    assert small_square[0, 0].tape.sizes == (3,)
    assert all(small_square[pos].tape.sizes == () for pos in ((1, 0), (0, 1), (1, 1)))
    assert small_square[0, 0].E.reading == 3
    assert small_square[1, 0].W.reading == 3
    assert small_square[0, 0].W.reading is None
    assert small_square[0, 1].E.reading is None
    for w in small_square.values():
        assert all(not color.sizes for color in w.colors.values())


def test_prove_big_square(big_square):
    for pos, orientation in (((0, 0), 'LL'), ((1, 0), 'LR'), ((0, 1), 'UL'), ((1, 1), 'UR')):
        assert big_square[pos].tape.corners == (Corner(3, 3, orientation),)
    assert big_square[0, 0].E.primary == (
        CornerMessage(3, 3, 'LL', False), CornerMessage(7, 3, 'LR', True))
    assert big_square[0, 0].N.sizes == (SizeEntry(5, 0, False),)
    assert big_square[0, 0].E.sizes == (SizeEntry(5, 0, False),)
    assert big_square[1, 0].W.sizes == (SizeEntry(5, 0, True),)
    assert big_square[0, 1].E.sizes == (SizeEntry(5, 1, False),)
    assert big_square[1, 1].W.sizes == (SizeEntry(5, 1, True),)
    assert big_square[1, 0].N.sizes == ()


def test_prove_neutral_and_coords(big_square):
    for (x, y), w in big_square.items():
        location = location_part(*location_at(x, y, 2), 2)
        for index, side in enumerate('WSNE'):
            assert w.color(side).coords == location[index]
        for side in ({'W'} if x == 0 else {'E'}) | ({'S'} if y == 0 else {'N'}):
            assert w.color(side).corner_copy is NEUTRAL
            assert not w.color(side).primary


def test_prove_secondary(rich_sea):
    w = rich_sea[3, 0]
    assert w.tape.corners == (Corner(2, 2, 'UL'),)
    assert set(w.E.secondary) == {
        CornerMessage(2, 2, 'UL', False), CornerMessage(1, 2, 'UR', True)}
    assert set(w.S.secondary) == {
        CornerMessage(2, 2, 'UL', False), CornerMessage(2, 3, 'LL', True)}


def test_prove_corner_copy(rich_sea):
    assert rich_sea[1, 1].E.corner_copy == (Corner(1, 5, 'LR'),)
    assert rich_sea[0, 0].W.corner_copy is NEUTRAL


def test_prove_rejects(toy_scale):
    with pytest.raises(MalformedPattern):
        prove_children([Square(2, 0, 0), Square(2, 2, 0)], toy_scale)
    with pytest.raises(MalformedPattern):
        prove_children([Square(1, 0, 0), Square(1, 3, 3)], toy_scale, distinct=True)
    with pytest.raises(ValueError):
        prove_children(
            [Square(1, 0, 0), Square(2, 2, 0), Square(3, 4, 4)], toy_scale)


def test_prove_logs(toy_scale, caplog):
    caplog.set_level('INFO')
    prove_children([Square(3, 1, 1)], toy_scale)
    assert 'Proved 4 children holding 1 parent sizes' in caplog.text
