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

import pytest

from seasquares.squares import Pattern, Square, scales
from seasquares.protocol.prover import prove_children


# The directed square window used throughout the suite: a band of a large
# square on the left, a 5x5 square, two unit squares touching diagonally and
# a 4x4 square clipped by the right edge
FIGURE_ROWS = [
    '^^........',
    '^^.A<<<B..',
    '^^.va<b^..',
    '^^.vvo^^..',
    '^^.vc>d^..',
    '^^.C>>>D..',
    '^^........',
    '^^.....A<<',
    '^^.....vab',
    '^^..o..vcd',
    '^^.o...C>>',
    '^^........',
]


def find_message(records, **kwargs):
    for record in records:
        if all(getattr(record, key) == value for key, value in kwargs.items()):
            return record


def binary_rows(rows):
    return [''.join('.' if c == '.' else '#' for c in row) for row in rows]


@pytest.fixture()
def figure_y(request):
    return Pattern.from_rows(FIGURE_ROWS)


@pytest.fixture()
def figure_bin(request):
    return Pattern.from_rows(binary_rows(FIGURE_ROWS))


@pytest.fixture()
def rng(request):
    return random.Random(0)


# A parent of 2x2 children of 4x4 pixels holding one 5x5 square whose four
# corners fall in the four children
BIG_SQUARE = [Square(5, 3, 3)]

# A 3x3 square inside the lower-left child
SMALL_SQUARE = [Square(3, 1, 1)]

# A parent of 4x4 children of 4x4 pixels. The 2x2 square is seen whole, the
# 5x5 and 10x10 squares through primary messages, the 4x4 square through
# secondary messages at the lower-right child and the 12x12 square leaves a
# corner on the parent tape
RICH_SEA = [
    Square(2, 0, 0),
    Square(5, 3, 3),
    Square(4, 14, -1),
    Square(12, -10, 5),
    Square(10, 5, 9),
]


def replace_sizes(children, func):
    "Applies *func* to every size entry of every child's colors"
    return {
        pos: w._replace(**{
            side: w.color(side)._replace(
                sizes=tuple(func(e) for e in w.color(side).sizes))
            for side in 'NESW'
        })
        for pos, w in children.items()
    }


@pytest.fixture()
def toy_scale(request):
    return scales(0, 1, schedule=(4, 2))


@pytest.fixture()
def rich_scale(request):
    return scales(0, 1, schedule=(4, 4))


@pytest.fixture()
def big_square(request, toy_scale):
    return prove_children(BIG_SQUARE, toy_scale)


@pytest.fixture()
def small_square(request, toy_scale):
    return prove_children(SMALL_SQUARE, toy_scale)


@pytest.fixture()
def rich_sea(request, rich_scale):
    return prove_children(RICH_SEA, rich_scale)
