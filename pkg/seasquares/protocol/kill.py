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
The last phase of every macrotile: enumerate the complement of the set of
permitted sizes for a bounded number of steps and kill the tile if an
enumerated size is on its tape.

.. autoclass:: SetSpec

.. autofunction:: set_spec

.. autofunction:: kill_phase
"""

import logging
from bisect import bisect_left
from collections import namedtuple
from itertools import count, islice

from .. import const


logger = logging.getLogger(__name__)


class SetSpec(namedtuple('SetSpec', ('name', 'member', 'complement'))):
    """
    A set of permitted square sizes: *member* tests a positive integer and
    *complement* returns a fresh iterator over the positive integers outside
    the set, always in the same order.
    """
    __slots__ = ()


class KillVerdict(namedtuple('KillVerdict', ('killed', 'size'))):
    __slots__ = ()


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _listed(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as exc:
        raise ValueError('cannot read %s: %s' % (path, exc))
    sizes = []
    for word in text.replace(',', ' ').split():
        try:
            n = int(word)
        except ValueError:
            raise ValueError('%s: %r is not a size' % (path, word))
        if n < 1:
            raise ValueError('%s: sizes must be positive, not %d' % (path, n))
        sizes.append(n)
    return sizes


def set_spec(text):
    """
    Returns the :class:`SetSpec` named by *text*: ``evens``, ``odds``,
    ``all``, ``primes``, or ``file:<path>`` for a file listing the forbidden
    sizes (the complement) in enumeration order.
    """
    if text == 'evens':
        return SetSpec(text, lambda n: n % 2 == 0, lambda: count(1, 2))
    elif text == 'odds':
        return SetSpec(text, lambda n: n % 2 == 1, lambda: count(2, 2))
    elif text == 'all':
        return SetSpec(text, lambda n: n >= 1, lambda: iter(()))
    elif text == 'primes':
        return SetSpec(
            text, is_prime, lambda: (n for n in count(1) if not is_prime(n)))
    elif text.startswith('file:'):
        forbidden = tuple(_listed(text[5:]))
        banned = frozenset(forbidden)
        return SetSpec(text, lambda n: n not in banned, lambda: iter(forbidden))
    raise ValueError('unknown size set %r' % text)


def kill_phase(tape, spec, budget=const.KILL_BUDGET):
    """
    Runs the enumerator of *spec*'s complement for *budget* steps and returns
    a :class:`KillVerdict`, killed with the first enumerated size found on
    *tape*'s size list. A larger budget only ever kills more.
    """
    if budget < 0:
        raise ValueError('the budget must not be negative')
    sizes = sorted(tape.sizes)
    for n in islice(spec.complement(), budget):
        i = bisect_left(sizes, n)
        if i < len(sizes) and sizes[i] == n:
            logger.info('Killed by size %d from %s', n, spec.name)
            return KillVerdict(True, n)
    return KillVerdict(False, None)
