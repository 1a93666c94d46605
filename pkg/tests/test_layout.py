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

from itertools import product

import pytest

from seasquares import wang
from seasquares.layout import (
    LayoutSpec,
    LayoutInfeasible,
    CellRole,
    macrocolor_bits,
    location_part,
    location_at,
    block_position,
    layout,
    render,
)


@pytest.fixture()
def toy():
    return LayoutSpec(64, 8, 24, 20, wire_width=4)


def test_macrocolor_bits():
    assert macrocolor_bits(64, 8) == 22
    assert macrocolor_bits(5, 3) == 11
    assert LayoutSpec(64, 8, 24, 20).wire_width == 22
    with pytest.raises(ValueError):
        macrocolor_bits(1, 3)


def test_location_part():
    assert location_part(0, 0, 4) == ((0, 0), (0, 0), (0, 1), (1, 1))
    left, bottom, top, right = location_part(3, 3, 4)
    assert top == (3, 0)
    assert right == (0, 0)
    for x, y in product(range(4), repeat=2):
        left, bottom, top, right = location_part(x, y, 4)
        assert left == bottom == (x, y)
    with pytest.raises(ValueError):
        location_part(4, 0, 4)


def test_block_position_inverts_location():
    for X, Y in product(range(6), repeat=2):
        assert block_position(*location_at(X, Y, 6), 6) == (X, Y)


def test_layout_covers_block(toy):
    lay = layout(toy)
    assert len(lay.roles) == 64 * 64
    assert all(isinstance(cell, CellRole) for cell in lay.roles.values())
    anchors = [xy for xy, cell in lay.roles.items() if cell.role == 'anchor']
    assert anchors == [toy.origin] == [(20, 39)]
    machine = [xy for xy, cell in lay.roles.items() if cell.role == 'machine']
    assert len(machine) == 24 * 20 - 1


def test_layout_neighbours_match(toy):
    lay = layout(toy)
    for X, Y in product(range(63), repeat=2):
        here = lay[X, Y].location
        assert here[3] == lay[X + 1, Y].location[0]
        assert here[2] == lay[X, Y + 1].location[1]


def test_layout_wires(toy):
    lay = layout(toy)
    assert len(lay.channels) == 16
    seen = set()
    for (edge, j), path in lay.channels.items():
        assert not seen & set(path)
        seen |= set(path)
        x, y = path[0]
        assert {'W': x, 'E': 63 - x, 'S': y, 'N': 63 - y}[edge] == 0
        for (x0, y0), (x1, y1) in zip(path, path[1:]):
            assert abs(x1 - x0) + abs(y1 - y0) == 1
        assert lay[path[-1]].role == 'wire'
        assert lay[path[-1][0], path[-1][1] + 1].role in ('machine', 'anchor')
    wire_cells = {xy for xy, cell in lay.roles.items() if cell.role == 'wire'}
    assert wire_cells == seen


def turns(path):
    steps = [(x1 - x0, y1 - y0) for (x0, y0), (x1, y1) in zip(path, path[1:])]
    return sum(a != b for a, b in zip(steps, steps[1:]))


@pytest.mark.parametrize('spec', [
    LayoutSpec(64, 4, 12, 10, wire_width=2),
    LayoutSpec(64, 8, 24, 20, wire_width=4),
    LayoutSpec(40, 1, 16, 10, wire_width=3),
])
def test_bundles_enter_at_midpoints(spec):
    N, b = spec.N, spec.wire_width
    lay = layout(spec)
    for (edge, j), path in lay.channels.items():
        x, y = path[0]
        along = y if edge in 'WE' else x
        assert along == N // 2 - b // 2 + j
        if edge == 'N':
            assert turns(path) == 4
        else:
            assert turns(path) <= 1
    assert {lay.channels['S', j][0][0] for j in range(b)} >= {N // 2}


def test_layout_feeds(toy):
    lay = layout(toy)
    rx, ry = toy.origin
    order = [
        lay.feeds[edge, j] for edge in 'WSEN'
        for j in (reversed(range(4)) if edge == 'W' else range(4))
    ]
    assert order == [(rx + 6 + k, ry) for k in range(16)]
    for feed in lay.feeds.values():
        assert lay[feed].role in ('machine', 'anchor')


def test_layout_infeasible():
    with pytest.raises(LayoutInfeasible):
        layout(LayoutSpec(16, 8, 24, 4, wire_width=4))
    with pytest.raises(LayoutInfeasible):
        layout(LayoutSpec(64, 8, 24, 20))
    with pytest.raises(LayoutInfeasible):
        layout(LayoutSpec(64, 8, 24, 32, wire_width=4))
    with pytest.raises(LayoutInfeasible):
        layout(LayoutSpec(64, 8, 60, 20, wire_width=4))
    with pytest.raises(LayoutInfeasible):
        layout(LayoutSpec(64, 8, 24, 22, wire_width=4))


def test_layout_anchor_everywhere():
    for N, b, cw, ch in ((32, 2, 10, 8), (40, 3, 16, 10), (64, 4, 24, 20)):
        lay = layout(LayoutSpec(N, 1, cw, ch, wire_width=b))
        anchors = [xy for xy, cell in lay.roles.items() if cell.role == 'anchor']
        assert anchors == [lay.spec.origin]


def test_render(toy):
    lines = render(layout(toy)).splitlines()
    assert len(lines) == 64
    assert all(len(line) == 64 for line in lines)
    assert lines[0] == lines[63] == '.' * 30 + '|' * 4 + '.' * 30
    assert lines[63 - 62] == '.' * 30 + '|' * 3 + '+' + '-' * 10 + '+' + '.' * 19
    assert lines[63 - 30] == '-' * 29 + '+' + '|' * 4 + '+' + '-' * 29
    assert lines[63 - 33] == '-' * 26 + '+' + '|' * 10 + '+' + '-' * 26
    assert lines[63 - 34] == '.' * 26 + '|' * 12 + '+' + '-' * 8 + '+' + '.' * 16
    assert lines[63 - 38] == '.' * 26 + '|' * 16 + '..' + '|' * 4 + '.' * 16
    # the north bundle passes the region on the right
    assert lines[63 - 39] == '.' * 20 + '@' + 'M' * 23 + '|' * 4 + '.' * 16
    text = ''.join(lines)
    assert text.count('@') == 1
    assert text.count('M') == 24 * 20 - 1


def test_location_tiles_cut_uniquely():
    for N in (2, 4):
        S, phi = wang.coordinate_map(N)
        assert wang.check_simulation(wang.location_tileset(N), S, N, phi).ok
