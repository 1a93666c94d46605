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
Counting the n x n patterns of the square shifts and estimating entropies
from the counts.

A pattern is counted when it extends to every halo of up to *margin* cells
around it; with a margin of zero only the window itself has to be a legal
sea. For the hard-square shift this is exact, since any locally admissible
window extends by zeros.

.. autoexception:: NoConvergence

.. autoclass:: ShiftSpec

.. autoclass:: EntropyEstimate

.. autofunction:: shift_spec

.. autofunction:: enumerate_seas

.. autofunction:: acceptor

.. autofunction:: count_patterns

.. autofunction:: transfer_matrix

.. autofunction:: transfer_entropy

.. autofunction:: strip_entropies

.. autofunction:: entropy_bound_check
"""

import logging
from collections import namedtuple
from itertools import count
from math import log2

import numpy as np

from . import const, yshift
from .squares import (
    Pattern,
    MalformedPattern,
    detect_inventory,
    bands,
    extend,
    scales,
    zoom,
)
from .wang import CapExceeded
from .protocol.kill import SetSpec, set_spec


logger = logging.getLogger(__name__)

KINDS = ('s-square', 'distinct-square', 'n-square', 'y-shift')

HARD_SQUARE = SetSpec('hard-square', lambda n: n == 1, lambda: count(2))


class NoConvergence(ArithmeticError):
    "Raised when the power iteration does not settle within its step limit"


class ShiftSpec(namedtuple('ShiftSpec', ('kind', 'sizes', 'margin'))):
    """
    Names a shift to count: *kind* is one of ``s-square`` (with the
    :class:`~seasquares.protocol.kill.SetSpec` *sizes*), ``distinct-square``,
    ``n-square`` or ``y-shift``; *margin* is the width of the halo every
    counted pattern must extend to.
    """
    __slots__ = ()

    def __new__(cls, kind, sizes=None, margin=0):
        if kind not in KINDS:
            raise ValueError('unknown shift kind %r' % kind)
        if kind == 's-square' and sizes is None:
            raise ValueError('an s-square shift needs a set of sizes')
        if margin < 0:
            raise ValueError('the margin must not be negative')
        return super().__new__(cls, kind, sizes, margin)

    def __str__(self):
        if self.kind == 's-square':
            return 's-square:%s' % self.sizes.name
        return self.kind


class EntropyEstimate(namedtuple('EntropyEstimate', ('sizes', 'counts', 'strip'))):
    """
    Pattern counts for each of *sizes*, or the dominant eigenvalues of strips
    of those widths when *strip* is set, from which the per-site entropy
    estimates follow.
    """
    __slots__ = ()

    def __new__(cls, sizes, counts, strip=False):
        return super().__new__(cls, tuple(sizes), tuple(counts), strip)

    @property
    def estimates(self):
        if self.strip:
            return tuple(log2(c) / w for w, c in zip(self.sizes, self.counts))
        return tuple(log2(c) / (n * n) for n, c in zip(self.sizes, self.counts))

    @property
    def differences(self):
        h = self.estimates
        return tuple(b - a for a, b in zip(h, h[1:]))

    @property
    def decreasing(self):
        "``True`` if every estimate is strictly below the one before it"
        return all(d < 0 for d in self.differences)

    @property
    def parity_decreasing(self):
        """
        ``True`` if the estimates of even sizes, and separately those of odd
        sizes, are non-increasing.
        """
        for parity in (0, 1):
            h = [e for n, e in zip(self.sizes, self.estimates) if n % 2 == parity]
            if any(b > a for a, b in zip(h, h[1:])):
                return False
        return True

    def rows(self):
        "Yields (size, count, estimate) for every size"
        return zip(self.sizes, self.counts, self.estimates)


def shift_spec(text, margin=0):
    """
    Parses a shift named on the command line: ``hard-square``, ``distinct``
    (or ``distinct-square``), ``n-square``, ``y-shift`` or
    ``s-square:<set>`` where ``<set>`` is accepted by
    :func:`~seasquares.protocol.kill.set_spec`.
    """
    if text == 'hard-square':
        return ShiftSpec('s-square', HARD_SQUARE, margin)
    elif text in ('distinct', 'distinct-square'):
        return ShiftSpec('distinct-square', margin=margin)
    elif text in ('n-square', 'y-shift'):
        return ShiftSpec(text, margin=margin)
    elif text.startswith('s-square:'):
        return ShiftSpec('s-square', set_spec(text[9:]), margin)
    raise ValueError('unknown shift %r' % text)


def _scan(n, alphabet, block_ok):
    """
    Yields the n x n grids over *alphabet* (lists of rows, top row first)
    whose every 2x2 block (top-left, top-right, bottom-left, bottom-right)
    passes *block_ok*. Blocks are checked as soon as their last cell is
    placed.
    """
    rows = [[None] * n for _ in range(n)]

    def place(k):
        if k == n * n:
            yield [''.join(row) for row in rows]
            return
        r, c = divmod(k, n)
        for symbol in alphabet:
            rows[r][c] = symbol
            if r and c and not block_ok((
                    rows[r - 1][c - 1], rows[r - 1][c],
                    rows[r][c - 1], symbol)):
                continue
            yield from place(k + 1)
        rows[r][c] = None

    if n > 0:
        yield from place(0)


def _rectangular(block):
    # three 1s in a 2x2 block is the only local sign of a non-rectangle
    return block.count('#') != 3


def enumerate_seas(n, accept=None):
    """
    Yields the n x n binary windows whose components are all rectangles,
    in scan order, keeping those for which *accept* returns ``True`` when
    it is given.
    """
    if n < 1:
        raise ValueError('the window side must be positive')
    for rows in _scan(n, const.BINARY_ALPHABET, _rectangular):
        pattern = Pattern.from_rows(rows)
        if accept is None or accept(pattern):
            yield pattern


def _touches(sq, width, height):
    horizontal = sq.x == 0 or sq.x1 == width - 1
    vertical = sq.y == 0 or sq.y1 == height - 1
    return horizontal and vertical


def size_demands(inventory, width, height):
    """
    Splits the components of *inventory* into the side lengths the window
    determines and lower bounds on the sides of the rest. Returns the pair
    (determined, bounds).
    """
    determined, bounds = [], []
    for sq in inventory.full_squares:
        # a square touching a horizontal and a vertical edge may continue
        # past the window's corner
        if _touches(sq, width, height):
            bounds.append(sq.side)
        else:
            determined.append(sq.side)
    determined.extend(sq.side for sq in inventory.clipped_squares)
    for corner in inventory.partial_corners:
        w = width - corner.x if corner.orientation[1] == 'L' else corner.x + 1
        h = height - corner.y if corner.orientation[0] == 'L' else corner.y + 1
        bounds.append(max(w, h))
    paired = set()
    for a, b in bands(inventory.partial_sides):
        paired.update((a, b))
        determined.append(a.depth)
    bounds.extend(
        max(len(side.span), side.depth)
        for side in inventory.partial_sides if side not in paired)
    bounds.extend(max(region) for region in inventory.infinite_regions)
    return determined, bounds


def _has_member(sizes, low):
    # wide enough for the primes by Bertrand's postulate
    return any(sizes.member(k) for k in range(low, 2 * low + 2))


def _extends(pattern, margin):
    try:
        for k in range(1, margin + 1):
            extend(pattern, k)
    except MalformedPattern:
        return False
    return True


def acceptor(spec):
    """
    Returns the test deciding whether a binary window is counted as a
    pattern of the square shift *spec*.
    """
    def accept(pattern):
        try:
            inventory = detect_inventory(pattern)
        except MalformedPattern:
            return False
        determined, bounds = size_demands(
            inventory, pattern.width, pattern.height)
        if spec.kind == 's-square':
            if not all(spec.sizes.member(k) for k in determined):
                return False
            if not all(_has_member(spec.sizes, k) for k in bounds):
                return False
        elif spec.kind == 'distinct-square':
            # the rest take fresh sizes larger than anything in the window
            if len(set(determined)) != len(determined):
                return False
        return _extends(pattern, spec.margin)
    return accept


def _y_patterns(n, margin, harvest):
    allowed = yshift.allowed_2x2(harvest)
    for rows in _scan(n, const.Y_ALPHABET, allowed.__contains__):
        pattern = Pattern.from_rows(rows, const.Y_ALPHABET)
        if margin == 0 or yshift.extendable(pattern, margin, sizes=harvest):
            yield pattern


def count_patterns(spec, n, cap=const.SOLVER_CAP, harvest=const.HARVEST_SIZES):
    """
    Returns the number of n x n patterns of the shift described by the
    :class:`ShiftSpec` *spec*. The directed square shift is checked against
    the blocks harvested at the window sizes in *harvest*. Raises
    :exc:`~seasquares.wang.CapExceeded` once more than *cap* patterns have
    been counted, with the count so far as its *partial*.
    """
    if spec.kind == 'y-shift':
        patterns = _y_patterns(n, spec.margin, harvest)
    else:
        patterns = enumerate_seas(n, acceptor(spec))
    result = 0
    for _ in patterns:
        result += 1
        if result > cap:
            raise CapExceeded(
                'more than %d patterns of %s at n=%d' % (cap, spec, n), result)
    logger.debug('%s, n=%d, margin=%d: %d patterns', spec, n, spec.margin, result)
    return result


def entropy_estimate(spec, sizes, cap=const.SOLVER_CAP,
                     harvest=const.HARVEST_SIZES):
    "Returns the :class:`EntropyEstimate` of *spec* counted at each of *sizes*"
    sizes = tuple(sizes)
    return EntropyEstimate(
        sizes, tuple(count_patterns(spec, n, cap, harvest) for n in sizes))


def transfer_matrix(width):
    """
    Returns (states, matrix) for hard-square strips of the given *width*:
    *states* are the rows without two neighbouring 1s, as bit masks, and
    ``matrix[a, b]`` is 1 when rows *a* and *b* may be stacked.
    """
    if width < 1:
        raise ValueError('the strip width must be positive')
    states = np.array([
        s for s in range(1 << width) if not s & (s >> 1)], dtype=np.int64)
    matrix = ((states[:, None] & states[None, :]) == 0).astype(np.float64)
    return states, matrix


def _dominant(matrix, tolerance=const.POWER_TOLERANCE,
              iterations=const.POWER_ITERATIONS):
    v = np.ones(matrix.shape[0])
    v /= v.sum()
    value = 0.0
    for _ in range(iterations):
        u = matrix @ v
        estimate = u.sum()
        v = u / estimate
        if abs(estimate - value) <= tolerance * estimate:
            return estimate
        value = estimate
    raise NoConvergence(
        'power iteration did not settle in %d steps' % iterations)


def transfer_entropy(width, tolerance=const.POWER_TOLERANCE):
    """
    Returns the entropy per site of hard-square strips of the given *width*:
    the base-2 logarithm of the dominant eigenvalue of
    :func:`transfer_matrix`, divided by *width*. The eigenvalue is found by
    power iteration from the all-ones vector.
    """
    return log2(_dominant(transfer_matrix(width)[1], tolerance)) / width


def strip_entropies(widths, tolerance=const.POWER_TOLERANCE):
    """
    Returns the :class:`EntropyEstimate` holding the dominant eigenvalue of
    the hard-square strip of every width in *widths*.
    """
    widths = tuple(widths)
    values = []
    for w in widths:
        values.append(float(_dominant(transfer_matrix(w)[1], tolerance)))
        logger.debug('strip of width %d: %.12f', w, log2(values[-1]) / w)
    return EntropyEstimate(widths, values, strip=True)


class BoundCheck(namedtuple('BoundCheck', ('holds', 'slack'))):
    """
    The outcome of :func:`entropy_bound_check`. *slack* is the base-2
    logarithm of the right side over the left, negative when the bound is
    violated.
    """
    __slots__ = ()


def entropy_bound_check(i, alphabet_size, sofic_count, sea_count,
                        schedule=None, i0=0):
    """
    Checks that the number *sofic_count* of M x M patterns of the tiling
    shift (M being the level *i* pixel side) is bounded by the number of
    ways to align the level i-1 macrotiles, times the colors on their
    boundaries, times the number *sea_count* of M x M patterns of the
    square shift. The arithmetic is exact.
    """
    if i <= i0:
        raise ValueError('the bound needs a level above %d' % i0)
    if alphabet_size < 1 or sofic_count < 0 or sea_count < 1:
        raise ValueError('counts must be positive')
    M = scales(i0, i, schedule).M
    child = scales(i0, i - 1, schedule).M
    N = zoom(i - 1, schedule)
    exponent = 4 * M * child + 4 * N * N * child
    bound = child * child * alphabet_size ** exponent * sea_count
    if sofic_count == 0:
        return BoundCheck(True, float('inf'))
    return BoundCheck(sofic_count <= bound, log2(bound) - log2(sofic_count))
