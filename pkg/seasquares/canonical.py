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
The canonical plaid: a deterministic variant of :func:`~seasquares.plaid.build_plaid`
which local rules pin down completely, so that for given demands exactly one
labeling passes :func:`check_canonical`.

In every stripe layer the labels of a subgrid are sorted and cut into lists
of *K* entries, consecutive lists sharing exactly one label (the greatest of
one list is the least of the next) and the last list padded with fillers.
Column *r* of each child subgrid carries list *r* on its vertical edges and
row *r* carries the same list on its horizontal edges, so the lists agree
where they cross on the diagonal. Every label is annotated with the
lexicographically least node of the subgrid demanding it. The base cells
carry all their labels, annotated the same way, on every edge inside them.

The rules checked, each named in the :exc:`~seasquares.plaid.LabelingRejected`
raised when it fails:

``shape``
    stripe lists have *K* entries, labels strictly increasing, fillers only
    at the end; base lists are sorted and have no fillers

``stripe``
    lists are constant along each column and row of their subgrid, repeat in
    every child subgrid, never cross a subgrid boundary, and base lists are
    identical on every edge of their cell

``diagonal``
    column *r* and row *r* of a child subgrid carry the same list

``order``
    just below the diagonal the column list begins where the row list ends

``overlap``
    consecutive lists share exactly one label and every list after the
    first adds at least one label

``filler``
    a list containing a filler is followed only by filler lists

``subset``
    every label of a child subgrid is found between the ends of some list of
    its parent subgrid, and inside it

``scope``, ``accuracy``, ``propagation``
    annotations name a node of the subgrid which demands the label; no
    smaller node seeing the annotation demands it; each annotation is the
    least of its children's annotations for the label and equals the one of
    the child holding the annotated node

``demand``
    every demand of a node appears on its base list

``tape``
    the labels of the top layer are exactly the tape

.. autofunction:: canonical_plaid

.. autofunction:: check_canonical

.. autofunction:: enumerate_choices
"""

import logging
from collections import defaultdict
from itertools import product

from .plaid import (
    FILLER,
    Entry,
    InadmissibleDemands,
    LabelingRejected,
    InfeasibleSchedule,
    check_demands,
    check_schedule,
    default_schedule,
    edges_within,
    edge_nodes,
)


logger = logging.getLogger(__name__)


def corners(N, side):
    "Yields the lower-left corners of the aligned subgrids of *side*"
    for y in range(0, N, side):
        for x in range(0, N, side):
            yield x, y


def _corner(node, side):
    x, y = node
    return x - x % side, y - y % side


def _nodes(corner, side):
    x0, y0 = corner
    return [(x, y) for x in range(x0, x0 + side) for y in range(y0, y0 + side)]


def window_count(n, K):
    "Returns the number of non-filler lists needed for *n* labels"
    if n <= K:
        return 1
    return 1 + -(-(n - K) // (K - 1))


def windows(labels, K, count):
    """
    Returns *count* lists of *K* labels covering the sorted *labels*, each
    list after the first starting with the last label of the one before,
    padded with fillers::

        >>> windows([1, 2, 3], 2, 3)
        [[1, 2], [2, 3], [None, None]]
    """
    result = []
    for t in range(count):
        start = t * (K - 1)
        if t == 0 or start < len(labels) - 1:
            window = list(labels[start:start + K])
        else:
            window = []
        result.append(window + [FILLER] * (K - len(window)))
    return result


def _owners(d, side):
    owners = defaultdict(dict)
    for node, labels in sorted(d.demands.items()):
        for label in labels:
            owners[_corner(node, side)].setdefault(label, node)
    return owners


def _layers(d, layers):
    if d.K < 2:
        raise InadmissibleDemands('the canonical plaid needs K of at least 2')
    if layers is None:
        layers = default_schedule(d)
    layers = check_schedule(d, layers)
    if layers[-1] < 2:
        raise InfeasibleSchedule(
            'the canonical plaid needs base cells of side 2 or more')
    return layers


def _parts(d, layers):
    stripes = {}
    for j, (side, sub) in enumerate(zip(layers, layers[1:])):
        owners = _owners(d, side)
        for corner in corners(d.N, side):
            notes = owners.get(corner, {})
            labels = sorted(notes)
            if window_count(len(labels), d.K) > sub:
                logger.info(
                    'Layer %d subgrid at %r needs %d lists', j, corner,
                    window_count(len(labels), d.K))
                raise InfeasibleSchedule(
                    'layer %d subgrid at %r needs %d lists but its children '
                    'are %d wide' % (j, corner, window_count(len(labels), d.K), sub))
            stripes[j, corner] = [
                tuple(Entry(label, j, annotation=notes.get(label)) for label in window)
                for window in windows(labels, d.K, sub)
            ]
    base = len(layers) - 1
    owners = _owners(d, layers[-1])
    bases = {
        corner: tuple(
            Entry(label, base, annotation=node)
            for label, node in sorted(owners.get(corner, {}).items()))
        for corner in corners(d.N, layers[-1])
    }
    return stripes, bases


def _build(d, layers, stripes, bases):
    found = defaultdict(list)
    for j, (side, sub) in enumerate(zip(layers, layers[1:])):
        for x0, y0 in corners(d.N, side):
            lists = stripes[j, (x0, y0)]
            for x, y, axis in edges_within(x0, y0, side):
                offset = (x - x0 if axis == 'V' else y - y0) % sub
                found[x, y, axis].extend(lists[offset])
    for (x0, y0), entries in bases.items():
        for edge in edges_within(x0, y0, layers[-1]):
            found[edge].extend(entries)
    return {
        edge: tuple(entries)
        for edge, entries in sorted(found.items())
        if entries
    }


def canonical_plaid(d, layers=None):
    """
    Returns the canonical labeling of the demand grid *d* for the schedule
    *layers*. Raises :exc:`~seasquares.plaid.InfeasibleSchedule` when a
    subgrid needs more lists than its children are wide.
    """
    layers = _layers(d, layers)
    check_demands(d)
    return _build(d, layers, *_parts(d, layers))


def _labels(entries):
    return [e.label for e in entries if e.label is not FILLER]


def _split(el, layers):
    by_layer = [defaultdict(tuple) for _ in layers]
    for edge, entries in el.items():
        last = 0
        for entry in entries:
            if entry.layer not in range(len(layers)):
                raise LabelingRejected(
                    'shape', edge, 'unknown layer %r' % (entry.layer,))
            if entry.layer < last:
                raise LabelingRejected('shape', edge, 'layers out of order')
            last = entry.layer
        for j, lists in enumerate(by_layer):
            lists[edge] = tuple(e for e in entries if e.layer == j)
    for j, (side, lists) in enumerate(zip(layers, by_layer)):
        for edge, entries in lists.items():
            a, b = edge_nodes(edge)
            if entries and _corner(a, side) != _corner(b, side):
                raise LabelingRejected(
                    'stripe', edge, 'layer %d crosses a subgrid boundary' % j)
    return by_layer


def _constant(lists, edges, subject):
    found = {lists[edge] for edge in edges}
    if len(found) != 1:
        raise LabelingRejected('stripe', subject, 'lists differ along the stripe')
    return found.pop()


def _check_shape(entries, K, subject):
    if len(entries) != K:
        raise LabelingRejected('shape', subject, '%d entries' % len(entries))
    labels = [e.label for e in entries]
    k = labels.index(FILLER) if FILLER in labels else K
    if any(label is not FILLER for label in labels[k:]):
        raise LabelingRejected('shape', subject, 'label after a filler')
    if any(a >= b for a, b in zip(labels[:k], labels[1:k])):
        raise LabelingRejected('shape', subject, 'labels not increasing')
    if any(e.annotation is not None for e in entries[k:]):
        raise LabelingRejected('shape', subject, 'annotated filler')


def _check_chain(lists, K, subject):
    vacuous = 0
    for cur, nxt in zip(lists, lists[1:]):
        if not _labels(nxt):
            vacuous += 1
            continue
        if len(_labels(cur)) < K:
            raise LabelingRejected('filler', subject, 'a list follows a filler')
        if cur[-1] != nxt[0]:
            raise LabelingRejected('overlap', subject, 'lists do not share one label')
        if len(_labels(nxt)) < 2:
            raise LabelingRejected('overlap', subject, 'a list adds no label')
    return vacuous


def _check_cell(d, entries, layer, corner, side):
    subject = (layer, corner)
    labels = [e.label for e in entries]
    if FILLER in labels or labels != sorted(set(labels)):
        raise LabelingRejected('shape', subject, 'base list not sorted')
    nodes = _nodes(corner, side)
    for e in entries:
        if e.annotation not in nodes:
            raise LabelingRejected('scope', (e.label, e.annotation))
        if e.label not in d.demands.get(e.annotation, ()):
            raise LabelingRejected('accuracy', (e.label, e.annotation))
        for node in nodes:
            if node < e.annotation and e.label in d.demands.get(node, ()):
                raise LabelingRejected('accuracy', (e.label, node))
    for node in nodes:
        missing = d.demands.get(node, frozenset()).difference(labels)
        if missing:
            raise LabelingRejected('demand', node, 'missing %r' % sorted(missing))


def _check_base(d, lists, layer, side):
    result = {}
    for corner in corners(d.N, side):
        entries = _constant(
            lists, list(edges_within(corner[0], corner[1], side)), (layer, corner))
        _check_cell(d, entries, layer, corner, side)
        result[corner] = entries
    return result


def _check_lists(d, cols, rows, layer, corner, side, sub, below):
    x0, y0 = corner
    subject = (layer, corner)
    for k in range(side - sub):
        if cols[x0 + k] != cols[x0 + k + sub] or \
                rows[y0 + k] != rows[y0 + k + sub]:
            raise LabelingRejected('stripe', subject, 'children differ')
    for entries in list(cols.values()) + list(rows.values()):
        _check_shape(entries, d.K, subject)
    vacuous = 0
    for hx, hy in corners(side, sub):
        hx, hy = x0 + hx, y0 + hy
        C = [cols[hx + r] for r in range(sub)]
        R = [rows[hy + r] for r in range(sub)]
        for r in range(sub):
            if C[r] != R[r]:
                raise LabelingRejected('diagonal', (hx + r, hy + r))
        for r in range(sub - 1):
            if _labels(C[r + 1]) and _labels(R[r]) and \
                    C[r + 1][0].label != _labels(R[r])[-1]:
                raise LabelingRejected('order', (hx + r + 1, hy + r))
        vacuous += _check_chain(C, d.K, subject)
        _check_chain(R, d.K, subject)
        for e in below[hx, hy]:
            window = next((
                c for c in C
                if _labels(c) and _labels(c)[0] <= e.label <= _labels(c)[-1]
            ), None)
            if window is None or e.label not in _labels(window):
                raise LabelingRejected('subset', (layer, (hx, hy), e.label))
    if vacuous:
        logger.info(
            'Layer %d subgrid at %r has filler-only lists', layer, corner)


def _check_notes(d, cols, rows, layer, corner, side, sub, below):
    x0, y0 = corner
    notes = {}
    for x in range(x0, x0 + sub):
        for e in cols[x]:
            if e.label is not FILLER:
                if notes.setdefault(e.label, e.annotation) != e.annotation:
                    raise LabelingRejected('propagation', (layer, e.label))
    nodes = _nodes(corner, side)
    children = [
        below[x0 + hx, y0 + hy] for hx, hy in corners(side, sub)]
    for label, note in sorted(notes.items()):
        if note not in nodes:
            raise LabelingRejected('scope', (label, note))
        if label not in d.demands.get(note, ()):
            raise LabelingRejected('accuracy', (label, note))
        seen = {(x, y) for x in cols if label in _labels(cols[x]) for y in rows}
        seen |= {(x, y) for y in rows if label in _labels(rows[y]) for x in cols}
        for node in sorted(seen):
            if node < note and label in d.demands.get(node, ()):
                raise LabelingRejected('accuracy', (label, node))
        below_notes = [
            e.annotation for entries in children
            for e in entries if e.label == label]
        if any(n < note for n in below_notes) or note not in below_notes:
            raise LabelingRejected('propagation', (layer, label))
    return tuple(
        Entry(label, layer, annotation=note)
        for label, note in sorted(notes.items()))


def _check_stripes(d, lists, layer, side, sub, below):
    result = {}
    for corner in corners(d.N, side):
        x0, y0 = corner
        subject = (layer, corner)
        cols = {
            x: _constant(lists, [(x, y, 'V') for y in range(y0, y0 + side - 1)], subject)
            for x in range(x0, x0 + side)
        }
        rows = {
            y: _constant(lists, [(x, y, 'H') for x in range(x0, x0 + side - 1)], subject)
            for y in range(y0, y0 + side)
        }
        _check_lists(d, cols, rows, layer, corner, side, sub, below)
        result[corner] = _check_notes(d, cols, rows, layer, corner, side, sub, below)
    return result


def check_canonical(d, el, layers=None, tape=None):
    """
    Raises :exc:`~seasquares.plaid.LabelingRejected` naming the first rule
    the labeling *el* breaks for demand grid *d* and schedule *layers*.
    *tape* is the label set the top layer must carry, by default every
    demanded label.
    """
    layers = _layers(d, layers)
    by_layer = _split(el, layers)
    base = len(layers) - 1
    below = _check_base(d, by_layer[base], base, layers[base])
    for j in reversed(range(base)):
        below = _check_stripes(d, by_layer[j], j, layers[j], layers[j + 1], below)
    found = {e.label for e in below[0, 0]}
    tape = set(d.labels if tape is None else tape)
    if found != tape:
        raise LabelingRejected('tape', sorted(found ^ tape))


def _base_lists(d, corner, side, layer):
    for choice in product([None] + _nodes(corner, side), repeat=len(d.labels)):
        yield tuple(
            Entry(label, layer, annotation=node)
            for label, node in zip(d.labels, choice)
            if node is not None)


def _stripe_lists(d, sub, layer):
    window = list(product(d.labels + [FILLER], repeat=d.K))
    for choice in product(window, repeat=sub):
        yield [tuple(Entry(label, layer) for label in labels) for labels in choice]


def _annotated(lists, notes):
    return [
        tuple(e._replace(annotation=notes.get(e.label)) for e in window)
        for window in lists
    ]


def _spread(lists, corner, side):
    x0, y0 = corner
    sub = len(lists)
    cols = {x0 + k: lists[k % sub] for k in range(side)}
    rows = {y0 + k: lists[k % sub] for k in range(side)}
    return cols, rows


def _survivors(d, layers, layer, corner, summaries):
    side = layers[layer]
    if layer == len(layers) - 1:
        for entries in _base_lists(d, corner, side, layer):
            try:
                _check_cell(d, entries, layer, corner, side)
            except LabelingRejected:
                continue
            yield entries, entries
        return
    sub = layers[layer + 1]
    x0, y0 = corner
    below = {
        (x0 + hx, y0 + hy): summaries[layer + 1, (x0 + hx, y0 + hy)]
        for hx, hy in corners(side, sub)
    }
    nodes = _nodes(corner, side)
    for lists in _stripe_lists(d, sub, layer):
        try:
            _check_lists(d, *_spread(lists, corner, side), layer, corner, side, sub, below)
        except LabelingRejected:
            continue
        # entries of one label share its annotation
        labels = sorted({e.label for w in lists for e in w if e.label is not FILLER})
        for choice in product(nodes, repeat=len(labels)):
            annotated = _annotated(lists, dict(zip(labels, choice)))
            cols, rows = _spread(annotated, corner, side)
            try:
                summary = _check_notes(d, cols, rows, layer, corner, side, sub, below)
            except LabelingRejected:
                continue
            yield annotated, summary


def _exhaustive(d, layers):
    base = len(layers) - 1
    slots = [(base, corner) for corner in corners(d.N, layers[base])]
    slots += [
        (j, corner)
        for j in reversed(range(base))
        for corner in corners(d.N, layers[j])
    ]

    def search(k, stripes, bases, summaries):
        if k == len(slots):
            yield _build(d, layers, stripes, bases)
            return
        j, corner = slots[k]
        for part, summary in _survivors(d, layers, j, corner, summaries):
            found = dict(summaries)
            found[j, corner] = summary
            if j == base:
                chosen = dict(bases)
                chosen[corner] = part
                yield from search(k + 1, stripes, chosen, found)
            else:
                chosen = dict(stripes)
                chosen[j, corner] = part
                yield from search(k + 1, chosen, bases, found)

    return search(0, {}, {}, {})


def enumerate_choices(d, layers=None, part=None, corner=(0, 0)):
    """
    Yields labelings of the demand grid *d* for the schedule *layers*.

    By default the search covers the product of every part: each base list
    (any set of labels, each annotated with any node of its cell), each
    stripe list of every subgrid (any *K* labels or fillers) and each
    annotation of a stripe label (any node of its subgrid). Subgrids are
    filled bottom-up and a choice is dropped as soon as the rules local to
    its cell or subgrid reject it, so what remains is every labeling those
    rules leave open; :func:`check_canonical` then has the final word.

    With *part* only one part varies while the rest stay canonical: the
    label lists of the top layer subgrid at *corner* (``columns``), their
    annotations (``annotations``) or the base list of the cell at *corner*
    (``base``).
    """
    layers = _layers(d, layers)
    if part is None:
        yield from _exhaustive(d, layers)
        return
    stripes, bases = _parts(d, layers)
    if part == 'columns':
        if len(layers) < 2:
            raise ValueError('the schedule has no stripe layer')
        notes = _owners(d, layers[0])[corner]
        for choice in product(product(d.labels + [FILLER], repeat=d.K), repeat=layers[1]):
            changed = dict(stripes)
            changed[0, corner] = [
                tuple(Entry(label, 0, annotation=notes.get(label)) for label in window)
                for window in choice
            ]
            yield _build(d, layers, changed, bases)
    elif part == 'annotations':
        if len(layers) < 2:
            raise ValueError('the schedule has no stripe layer')
        labels = sorted(_owners(d, layers[0])[corner])
        for choice in product(_nodes(corner, layers[0]), repeat=len(labels)):
            notes = dict(zip(labels, choice))
            changed = dict(stripes)
            changed[0, corner] = [
                tuple(e._replace(annotation=notes.get(e.label)) for e in window)
                for window in stripes[0, corner]
            ]
            yield _build(d, layers, changed, bases)
    elif part == 'base':
        base = len(layers) - 1
        options = [None] + _nodes(corner, layers[-1])
        for choice in product(options, repeat=len(d.labels)):
            changed = dict(bases)
            changed[corner] = tuple(
                Entry(label, base, annotation=node)
                for label, node in zip(d.labels, choice)
                if node is not None)
            yield _build(d, layers, stripes, changed)
    else:
        raise ValueError('unknown part %r' % part)
