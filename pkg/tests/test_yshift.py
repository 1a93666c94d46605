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
import logging
from unittest import mock

import pytest

from seasquares import const
from seasquares.squares import (
    Pattern,
    Square,
    MalformedPattern,
    detect_inventory,
    random_sea,
)
from seasquares.yshift import (
    Violation,
    symbol_at,
    harvest,
    allowed_2x2,
    forbidden_2x2,
    check_y,
    lift,
    project,
    successor,
    extendable,
)


def test_symbol_at():
    assert symbol_at(Square(1, 0, 0), 0, 0) == 'o'
    assert symbol_at(Square(2, 0, 0), 0, 1) == 'A'
    assert symbol_at(Square(4, 0, 0), 1, 2) == 'a'
    assert symbol_at(Square(4, 0, 0), 2, 1) == 'd'
    assert symbol_at(Square(5, 0, 0), 2, 4) == '<'
    assert symbol_at(Square(5, 0, 0), 4, 2) == '^'
    with pytest.raises(ValueError):
        symbol_at(Square(1, 0, 0), 1, 0)


def test_forbidden_examples():
    forbidden = forbidden_2x2()
    assert ('.', '.', '.', '.') not in forbidden
    assert ('a', 'b', 'c', 'd') not in forbidden
    assert ('A', 'B', 'C', 'D') not in forbidden
    assert ('>', '<', '.', '.') in forbidden
    assert ('o', 'o', '.', '.') in forbidden
    assert len(forbidden) + len(allowed_2x2()) == len(const.Y_ALPHABET) ** 4


def test_harvest_stable():
    assert harvest(10) == harvest(12)


def test_harvest_sizes():
    assert allowed_2x2((10,)) == harvest(10)
    assert allowed_2x2((10,)) == allowed_2x2()
    assert check_y(Pattern.from_rows(['oo', 'oo'], const.Y_ALPHABET), (10,)) is not None


def test_harvest_warning(caplog):
    allowed_2x2.cache_clear()
    try:
        with mock.patch('seasquares.yshift.harvest') as h:
            h.side_effect = [frozenset({('.',) * 4}), frozenset({('.',) * 4, ('o',) * 4})]
            with caplog.at_level(logging.WARNING):
                assert len(allowed_2x2()) == 2
        assert 'changed between windows' in caplog.text
    finally:
        allowed_2x2.cache_clear()
        forbidden_2x2.cache_clear()


def test_lift_unit():
    assert lift(Pattern.from_rows(['#'])).rows() == ['o']


def test_lift_three():
    lifted = lift(Pattern.from_rows(['###'] * 3))
    assert lifted.rows() == ['A<B', 'vo^', 'C>D']
    assert check_y(lifted) is None


def test_lift_four():
    lifted = lift(Pattern.from_rows(['####'] * 4))
    assert lifted.rows() == ['A<<B', 'vab^', 'vcd^', 'C>>D']


def test_lift_figure(figure_bin, figure_y):
    assert lift(figure_bin) == figure_y


def test_lift_malformed():
    with pytest.raises(MalformedPattern):
        lift(Pattern.from_rows(['##', '#.']))


def test_project(figure_bin, figure_y):
    assert project(figure_y) == figure_bin
    assert project(Pattern.from_rows(['o'])).rows() == ['#']
    blank = Pattern.blank(3, 2, const.Y_ALPHABET)
    assert project(blank) == Pattern.blank(3, 2)


def test_check_figure(figure_y):
    assert check_y(figure_y) is None
    assert check_y(Pattern.blank(5, 5, const.Y_ALPHABET)) is None


def test_check_mutated_figure(figure_y):
    mutated = figure_y.replace({(5, 8): '^'})
    violation = check_y(mutated)
    assert isinstance(violation, Violation)
    assert violation.x in (4, 5)
    assert violation.y in (7, 8)


def test_check_first_violation():
    p = Pattern.from_rows(['..><', '....', '><..'])
    assert check_y(p) == Violation(0, 0, ('.', '.', '>', '<'))


def test_check_needs_y_alphabet():
    with pytest.raises(ValueError):
        check_y(Pattern.blank(2, 2))


def test_soundness(rng):
    for _ in range(60):
        w, h = rng.randint(1, 32), rng.randint(1, 32)
        sea = random_sea(w, h, rng, max_side=16)
        p = Pattern.from_cells(w, h, (c for sq in sea for c in sq.cells()))
        lifted = lift(p)
        assert check_y(lifted) is None
        assert project(lifted) == p


def test_directedness(rng):
    for _ in range(60):
        w, h = rng.randint(2, 20), rng.randint(2, 20)
        sea = random_sea(w, h, rng, max_side=12)
        lifted = lift(Pattern.from_cells(w, h, (c for sq in sea for c in sq.cells())))
        for x, y in lifted:
            nxt = successor(lifted, x, y)
            if lifted[x, y] in '.o':
                assert nxt is None
            elif nxt in lifted:
                assert lifted[nxt] != '.'


def valid_windows(size):
    allowed = allowed_2x2()
    vertical = {(bl, tl) for tl, tr, bl, br in allowed}
    vertical |= {(br, tr) for tl, tr, bl, br in allowed}
    # columns list their symbols bottom first
    columns = [
        col for col in product(const.Y_ALPHABET, repeat=size)
        if all((col[i], col[i + 1]) in vertical for i in range(size - 1))
    ]
    follows = {
        left: [
            right for right in columns
            if all(
                (left[i + 1], right[i + 1], left[i], right[i]) in allowed
                for i in range(size - 1))
        ]
        for left in columns
    }
    windows = [[col] for col in columns]
    for _ in range(size - 1):
        windows = [w + [col] for w in windows for col in follows[w[-1]]]
    for w in windows:
        yield Pattern(size, size, ''.join(
            w[x][y] for y in range(size) for x in range(size)), const.Y_ALPHABET)


def test_valid_windows_project_to_seas():
    rng = random.Random(4)
    windows = list(valid_windows(3))
    assert windows
    for window in rng.sample(windows, min(400, len(windows))):
        assert check_y(window) is None
        detect_inventory(project(window))


def test_allowed_blocks_project_to_seas():
    for tl, tr, bl, br in allowed_2x2():
        detect_inventory(project(Pattern(2, 2, (bl, br, tl, tr), const.Y_ALPHABET)))


def test_extendable():
    lifted = lift(Pattern.from_rows(['###.', '###.', '###.', '....']))
    assert extendable(lifted, 2)
    assert extendable(lift(Pattern.from_rows(['#'])), 0)
    assert not extendable(Pattern.from_rows(['><', '..']), 1)
