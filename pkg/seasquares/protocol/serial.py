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
Bit-level packing of macrocolors, used to audit the length limits of each
part against the width of the wires which carry them.

Every part is written at a fixed width: the machine, wire and location
prefix takes exactly :func:`~seasquares.layout.macrocolor_bits` bits and the
protocol parts follow in the order of :func:`bit_budget`.

.. autoexception:: PackingOverflow

.. autofunction:: bit_budget

.. autofunction:: pack_macrocolor
"""

import math

from .. import const
from ..layout import macrocolor_bits
from ..squares import ORIENTATIONS
from .records import NEUTRAL


class PackingOverflow(ValueError):
    "Raised when a macrocolor part does not fit its width in bits"


def icbrt(n):
    "Returns the largest integer whose cube does not exceed *n*"
    if n < 0:
        raise ValueError('negative cube root')
    k = int(round(n ** (1 / 3)))
    while k ** 3 > n:
        k -= 1
    while (k + 1) ** 3 <= n:
        k += 1
    return k


def tape_size_limit(scale, constant=const.SIZE_LIST_CONSTANT):
    "The most sizes the tape of a tile at *scale* may list"
    return icbrt(constant ** 3 * scale.L ** 2)


def list_size_limit(scale, constant=const.SIZE_LIST_CONSTANT):
    "The most sizes one parent size list part may carry"
    return icbrt(constant ** 3 * 8 ** scale.i * scale.L ** 2)


def coordinate_bits(bound):
    "Returns the width of a signed coordinate below *bound* in magnitude"
    return max(bound - 1, 1).bit_length() + 1


def _fields(scale):
    return {
        'deep': coordinate_bits(scale.parent_bound),
        'local': coordinate_bits(scale.L),
        'size': scale.parent_bound.bit_length(),
        'counter': max(scale.N ** 2 - 1, 1).bit_length(),
    }


def bit_budget(scale, s, constant=const.SIZE_LIST_CONSTANT):
    """
    Returns a mapping of macrocolor part to its width in bits for a tile at
    *scale* whose machine part is *s* bits wide.
    """
    f = _fields(scale)
    limit = list_size_limit(scale, constant)
    return {
        'location': macrocolor_bits(scale.N, s),
        'corner_copy': 1 + 3 + 4 * (2 * f['deep'] + 2),
        'primary': 3 + 4 * (2 * f['deep'] + 3),
        'secondary': 2 + 2 * (2 * f['local'] + 3),
        'reading': 1 + f['size'],
        'sizes': limit.bit_length() + limit * (f['size'] + f['counter'] + 1),
    }


def _unsigned(value, width):
    if not 0 <= value < 2 ** width:
        raise PackingOverflow('%d does not fit in %d bits' % (value, width))
    return format(value, '0%db' % width) if width else ''


def _signed(value, width):
    if not -2 ** (width - 1) <= value < 2 ** (width - 1):
        raise PackingOverflow('%d does not fit in %d signed bits' % (value, width))
    return format(value % 2 ** width, '0%db' % width)


def _corner(x, y, orientation, width):
    return (
        _signed(x, width) + _signed(y, width) +
        _unsigned(ORIENTATIONS.index(orientation), 2))


def _location(color, scale, s):
    payload = color.machine + color.wire
    if len(payload) > s:
        raise PackingOverflow('machine and wire parts exceed %d bits' % s)
    width = math.ceil(math.log2(scale.N))
    x, y = color.coords
    return (
        ('1' if color.machine else '0') + ('1' if color.wire else '0') +
        payload.ljust(s, '0') + _unsigned(x, width) + _unsigned(y, width))


def pack_macrocolor(color, scale, s, constant=const.SIZE_LIST_CONSTANT):
    """
    Returns the macrocolor *color* of a tile at *scale* as a string of
    ``0`` and ``1`` characters, each part padded to its width in
    :func:`bit_budget`. Raises :exc:`PackingOverflow` when a part does not
    fit.
    """
    f = _fields(scale)
    budget = bit_budget(scale, s, constant)
    parts = {'location': _location(color, scale, s)}
    if color.corner_copy is NEUTRAL:
        parts['corner_copy'] = '1' + _unsigned(0, 3)
    else:
        parts['corner_copy'] = '0' + _unsigned(len(color.corner_copy), 3) + ''.join(
            _corner(c.x, c.y, c.orientation, f['deep']) for c in color.corner_copy)
    parts['primary'] = _unsigned(len(color.primary), 3) + ''.join(
        _corner(m.x, m.y, m.orientation, f['deep']) + str(int(m.incoming))
        for m in color.primary)
    parts['secondary'] = _unsigned(len(color.secondary), 2) + ''.join(
        _corner(m.x, m.y, m.orientation, f['local']) + str(int(m.incoming))
        for m in color.secondary)
    if color.reading is None:
        parts['reading'] = '0'
    else:
        parts['reading'] = '1' + _unsigned(color.reading, f['size'])
    limit = list_size_limit(scale, constant)
    parts['sizes'] = _unsigned(len(color.sizes), limit.bit_length()) + ''.join(
        _unsigned(e.size, f['size']) + _unsigned(e.counter, f['counter']) +
        str(int(e.incoming))
        for e in color.sizes)
    result = []
    for part, width in budget.items():
        bits = parts[part]
        if len(bits) > width:
            raise PackingOverflow(
                'the %s part needs %d bits, more than %d' % (part, len(bits), width))
        result.append(bits.ljust(width, '0'))
    return ''.join(result)
