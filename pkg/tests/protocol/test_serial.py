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

from seasquares.layout import macrocolor_bits
from seasquares.squares import scales
from seasquares.protocol.records import NEUTRAL, Macrocolor, SizeEntry
from seasquares.protocol.serial import (
    icbrt,
    tape_size_limit,
    list_size_limit,
    coordinate_bits,
    bit_budget,
    pack_macrocolor,
)


def test_icbrt():
    assert icbrt(0) == 0
    assert icbrt(26) == 2
    assert icbrt(27) == 3
    assert icbrt(8192) == 20
    assert icbrt(10 ** 30) == 10 ** 10
    with pytest.raises(ValueError):
        icbrt(-1)


def test_limits(rich_scale, toy_scale):
    assert tape_size_limit(toy_scale) == 20
    assert list_size_limit(rich_scale) == 40
    assert tape_size_limit(rich_scale, constant=1) == 2
    # the limits grow with the level
    assert list_size_limit(scales(0, 2, (4, 4, 4))) > list_size_limit(rich_scale)


def test_coordinate_bits():
    assert coordinate_bits(16) == 5
    assert coordinate_bits(4) == 3
    assert coordinate_bits(1) == 2


def test_bit_budget(rich_scale):
    budget = bit_budget(rich_scale, 4)
    assert list(budget) == [
        'location', 'corner_copy', 'primary', 'secondary', 'reading', 'sizes']
    assert budget['location'] == macrocolor_bits(4, 4) == 10
    assert budget['reading'] == 6
    assert budget['corner_copy'] == 1 + 3 + 4 * 12


def test_pack_honest(rich_sea, rich_scale):
    budget = bit_budget(rich_scale, 4)
    for w in rich_sea.values():
        for side, color in w.colors.items():
            bits = pack_macrocolor(color, rich_scale, 4)
            assert set(bits) <= set('01')
            assert len(bits) == sum(budget.values())


def test_pack_location_prefix(toy_scale):
    bits = pack_macrocolor(Macrocolor(machine='1', wire='01', coords=(1, 0)), toy_scale, 4)
    prefix = bits[:macrocolor_bits(2, 4)]
    assert prefix == '11' + '1010' + '1' + '0'
    bits = pack_macrocolor(Macrocolor(corner_copy=NEUTRAL), toy_scale, 4)
    assert bits[:8] == '00000000'
    assert bits[8:12] == '1000'


def test_pack_overflow(rich_scale, toy_scale):
    with pytest.raises(ValueError):
        pack_macrocolor(Macrocolor(machine='10101'), rich_scale, 4)
    with pytest.raises(ValueError):
        pack_macrocolor(Macrocolor(reading=99), rich_scale, 4)
    with pytest.raises(ValueError):
        pack_macrocolor(Macrocolor(primary=[(40, 0, 'LL', True)]), rich_scale, 4)
    many = [SizeEntry(k % 16 + 1, 0, False) for k in range(41)]
    with pytest.raises(ValueError):
        pack_macrocolor(Macrocolor(sizes=many), rich_scale, 4)
    with pytest.raises(ValueError):
        pack_macrocolor(Macrocolor(coords=(2, 0)), toy_scale, 4)
