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
Assembly of a parent macrotile from the N x N witnesses of its children.
The children must agree along every shared edge; the parent tape is then
read off the reading parts, its corners off the corner copy, and the
parent size lists are checked to reassure every size a child asks for
without inventing any.

.. autoclass:: AssemblyRejected

.. autofunction:: assemble_parent
"""

import logging
from itertools import product
from collections import defaultdict

from .. import const
from ..layout import block_position
from ..plaid import (
    Entry,
    DemandGrid,
    LabelingRejected,
    check_labeling,
    verify_counters,
)
from .records import NEUTRAL, ParameterTape, parent_view, slot_readers
from .validation import WitnessRejected, child_offset, resolve, validate_witness


logger = logging.getLogger(__name__)

REASONS = (
    'edge-mismatch',
    'tape-order',
    'corner-unresolved',
    'unreassured-size',
    'hallucinated-size',
    'duplicate-size',
    'child-rejected',
)


class AssemblyRejected(ValueError):
    """
    Raised by :func:`assemble_parent`; *reason* is one of :data:`REASONS`
    and *position* the child at fault.
    """
    def __init__(self, reason, position, detail):
        super().__init__('%s at %r: %s' % (reason, position, detail))
        self.reason = reason
        self.position = position
        self.detail = detail


def extract_labeling(children, N):
    """
    Returns the plaid labeling carried by the parent size lists of
    *children*, read from the east and north sides of each inner edge.
    """
    el = defaultdict(list)
    for (x, y), w in sorted(children.items()):
        for side, axis, inner in (('E', 'H', x + 1 < N), ('N', 'V', y + 1 < N)):
            if inner:
                el[x, y, axis].extend(
                    Entry(e.size, 0, counter=e.counter, forward=not e.incoming)
                    for e in w.color(side).sizes)
    return {edge: tuple(entries) for edge, entries in el.items() if entries}


def _check_edges(children, N):
    for pos in sorted(product(range(N), repeat=2)):
        w = children.get(pos)
        if w is None:
            raise AssemblyRejected('edge-mismatch', pos, 'no child')
        try:
            shown = block_position(*w.W.coords, N)
        except (TypeError, ValueError):
            shown = None
        if shown != pos:
            raise AssemblyRejected(
                'edge-mismatch', pos, 'location shows %r' % (shown,))
    for (x, y) in sorted(product(range(N), repeat=2)):
        w = children[x, y]
        if x + 1 < N and w.E.mirrored() != children[x + 1, y].W:
            raise AssemblyRejected('edge-mismatch', (x, y), 'east edge differs')
        if y + 1 < N and w.N.mirrored() != children[x, y + 1].S:
            raise AssemblyRejected('edge-mismatch', (x, y), 'north edge differs')


def _read_tape(children, N, group):
    sizes = []
    ended = None
    for slot in range(N * N // group):
        readers = slot_readers(slot, N, group)
        values = set()
        for pos in readers:
            values |= {children[pos].W.reading, children[pos].E.reading} - {None}
        if len(values) > 1:
            raise AssemblyRejected(
                'tape-order', readers[0], 'slot %d reads %r' % (slot, sorted(values)))
        if not values:
            ended = ended or readers[0]
        elif ended is not None:
            raise AssemblyRejected('tape-order', readers[0], 'slot %d follows a gap' % slot)
        else:
            sizes.append(values.pop())
    for a, b in zip(sizes, sizes[1:]):
        if a >= b:
            raise AssemblyRejected('tape-order', (0, 0), 'sizes %r are not sorted' % sizes)
    return sizes


def _reassure(children, scale, sizes, demands, group):
    N = scale.N
    el = extract_labeling(children, N)
    on_tape = set(sizes)
    for edge, entries in sorted(el.items()):
        for e in entries:
            if e.label not in on_tape:
                raise AssemblyRejected(
                    'hallucinated-size', edge[:2],
                    'size %r is carried but not on the tape' % (e.label,))
    for pos, wanted in sorted(demands.items()):
        missing = wanted - on_tape
        if missing:
            raise AssemblyRejected(
                'unreassured-size', pos, 'sizes %r are not on the tape' % sorted(missing))
    requested = set().union(*demands.values())
    sources = {}
    for slot, size in enumerate(sizes):
        first = slot_readers(slot, N, group)[0]
        if size not in requested:
            raise AssemblyRejected(
                'hallucinated-size', first, 'no child asks for size %d' % size)
        sources[size] = {first}
    d = DemandGrid(
        N, demands,
        K=max([const.PLAID_LABELS_PER_LIST] + [len(v) for v in demands.values()]),
        unit=scale.M)
    try:
        check_labeling(d, el, sources=sources)
    except LabelingRejected as exc:
        raise AssemblyRejected('unreassured-size', d.holders(exc.subject)[0], str(exc))
    try:
        verify_counters(d, el, sources)
    except LabelingRejected as exc:
        raise AssemblyRejected('hallucinated-size', tuple(exc.subject[1][:2]), str(exc))


def _locations(children, scale, resolutions, sizes):
    found = defaultdict(set)
    for pos, w in sorted(children.items()):
        bx, by = child_offset(pos, scale)
        for location in w.tape.locations:
            if len(location) == 3:
                size, x, y = location
                found[size].add(((x + bx, y + by), pos))
        for match in resolutions[pos].matches:
            found[match.size].add(((match.square.x, match.square.y), pos))
    for size, places in sorted(found.items()):
        where = sorted({xy for xy, pos in places})
        if len(where) > 1:
            pos = max(pos for xy, pos in places if xy == where[-1])
            raise AssemblyRejected(
                'duplicate-size', pos, 'size %d lies at %r' % (size, where))
    return sorted(
        (size, x, y)
        for size, places in found.items() if size in sizes
        for (x, y) in {xy for xy, pos in places})


def assemble_parent(children, scale, layout=None, distinct=False,
                    group=const.READING_GROUP,
                    constant=const.SIZE_LIST_CONSTANT):
    """
    Assembles the parent of the *children* (a mapping of position to
    :class:`~seasquares.protocol.records.MacrotileWitness`) of a level
    ``scale.i`` macrotile and returns the parent's
    :class:`~seasquares.protocol.records.ParameterTape`.

    The checks run in this order, raising :exc:`AssemblyRejected` at the
    first failure: edge agreement, the order of the sizes read off the
    reading slots, the corner copy against the unanswered corners, the
    reassurance of every demanded size along the parent size lists, distinct
    locations (with *distinct*) and finally the validation of every child.
    """
    N = scale.N
    _check_edges(children, N)
    sizes = _read_tape(children, N, group)

    positions = sorted(product(range(N), repeat=2))
    resolutions = {pos: resolve(children[pos], scale, pos) for pos in positions}
    copy = children[0, 0].E.corner_copy
    unanswered = sorted({c for pos in positions for c in resolutions[pos].unanswered})
    if copy is NEUTRAL or len(copy) > 4 or sorted(copy) != unanswered:
        raise AssemblyRejected(
            'corner-unresolved', (0, 0), 'corner copy %r, unanswered %r' % (
                copy, unanswered))

    demands = {
        pos: set(children[pos].tape.sizes) | {m.size for m in resolutions[pos].matches}
        for pos in positions
    }
    _reassure(children, scale, sizes, demands, group)

    locations = ()
    if distinct:
        locations = _locations(children, scale, resolutions, sizes)

    for pos in positions:
        try:
            validate_witness(
                children[pos], scale, layout,
                parent_view(pos, sizes, N, group), constant)
        except WitnessRejected as exc:
            raise AssemblyRejected('child-rejected', pos, str(exc))
    logger.info(
        'Assembled a level %d parent with %d sizes and %d corners',
        scale.i + 1, len(sizes), len(copy))
    return ParameterTape(scale.i0, scale.i + 1, copy, sizes, locations)
