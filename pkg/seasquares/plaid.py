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
The communication problem solved by the children of a macrotile. Every node
of an N x N grid demands a handful of labels (square sizes) and the edges
between neighbouring nodes must carry labels so that all the nodes demanding
one label are joined by edges carrying it, without any edge carrying too
many.

:func:`build_plaid` solves this with dense stripes at every scale of a
schedule of subgrid sides. Inside each subgrid the labels demanded there are
sorted and cut into blocks of *K*; column *t* of the subgrid carries block
*t* on its vertical edges and row *t* carries it on its horizontal edges,
cycling back to the first block. Stripes of one layer cross those of the
next, and at the smallest subgrids (the base) every label of the cell goes on
every edge inside it.

Edges are written ``(x, y, 'H')`` for the edge from (x, y) to (x + 1, y) and
``(x, y, 'V')`` for the edge from (x, y) to (x, y + 1). A labeling maps edges
to tuples of :class:`Entry`.

.. autoclass:: DemandGrid

.. autofunction:: build_plaid

.. autofunction:: check_labeling

.. autofunction:: assign_counters

.. autofunction:: verify_counters
"""

import logging
from collections import namedtuple, defaultdict, deque

import networkx as nx

from . import const


logger = logging.getLogger(__name__)

FILLER = None
FEED = 'feed'


class InadmissibleDemands(ValueError):
    "Raised when a demand grid breaks the per-node or per-subgrid limits"


class InfeasibleSchedule(ValueError):
    "Raised when a layer of the schedule cannot fit a full stripe cycle"


class LabelingRejected(ValueError):
    """
    Raised when a labeling fails a check; *rule* names the check and
    *subject* the label, edge or (label, node) at fault.
    """
    def __init__(self, rule, subject, detail=None):
        msg = '%s: %r' % (rule, subject)
        if detail:
            msg += ' (%s)' % detail
        super().__init__(msg)
        self.rule = rule
        self.subject = subject
        self.detail = detail


class Entry(namedtuple('Entry', (
        'label', 'layer', 'counter', 'annotation', 'forward'))):
    """
    One label carried by an edge. *layer* is the index of the schedule layer
    that placed it (or ``feed``), *counter* the hop count of the label
    along the edge, *forward* whether it travels from the edge's lower-left
    node, and *annotation* the node the label is attributed to.
    """
    __slots__ = ()

    def __new__(cls, label, layer, counter=None, annotation=None, forward=None):
        return super().__new__(cls, label, layer, counter, annotation, forward)


class DemandGrid(namedtuple('DemandGrid', ('N', 'demands', 'K', 'c', 'unit'))):
    """
    The labels demanded by the nodes of an *N* x *N* grid. Each node may
    demand at most *K* labels and an aligned M x M subgrid at most
    c * (M * unit) ** (2/3) distinct labels.
    """
    __slots__ = ()

    def __new__(cls, N, demands, K=const.PLAID_LABELS_PER_LIST,
                c=const.PLAID_SUBGRID_CONSTANT, unit=1):
        demands = {
            tuple(node): frozenset(labels)
            for node, labels in dict(demands).items()
            if labels
        }
        return super().__new__(cls, N, demands, K, c, unit)

    @property
    def labels(self):
        "All demanded labels, sorted"
        return sorted({label for labels in self.demands.values() for label in labels})

    def holders(self, label):
        "Returns the sorted nodes demanding *label*"
        return sorted(
            node for node, labels in self.demands.items() if label in labels)


def edge_nodes(edge):
    "Returns the two nodes joined by *edge*, lower-left first"
    x, y, axis = edge
    return (x, y), ((x + 1, y) if axis == 'H' else (x, y + 1))


def edge_between(a, b):
    "Returns the edge joining the neighbouring nodes *a* and *b*"
    (x0, y0), (x1, y1) = sorted((a, b))
    if y0 == y1 and x1 == x0 + 1:
        return x0, y0, 'H'
    elif x0 == x1 and y1 == y0 + 1:
        return x0, y0, 'V'
    raise ValueError('%r and %r are not neighbours' % (a, b))


def edges_within(x0, y0, side):
    "Yields the edges with both ends inside the given square subgrid"
    for y in range(y0, y0 + side):
        for x in range(x0, x0 + side):
            if x + 1 < x0 + side:
                yield x, y, 'H'
            if y + 1 < y0 + side:
                yield x, y, 'V'


def subgrid_labels(d, side):
    """
    Returns a mapping of the lower-left corner of every aligned subgrid of
    *side* to the sorted labels demanded inside it; empty subgrids are
    omitted.
    """
    found = defaultdict(set)
    for (x, y), labels in d.demands.items():
        found[x - x % side, y - y % side] |= labels
    return {corner: sorted(labels) for corner, labels in found.items()}


def check_demands(d):
    """
    Raises :exc:`InadmissibleDemands` if a node of *d* lies outside the
    grid or demands more than *K* labels, or if some power-of-two aligned
    subgrid holds too many distinct labels.
    """
    for (x, y), labels in sorted(d.demands.items()):
        if not (0 <= x < d.N and 0 <= y < d.N):
            raise InadmissibleDemands('node (%d, %d) is outside the grid' % (x, y))
        if len(labels) > d.K:
            raise InadmissibleDemands(
                'node (%d, %d) demands %d labels, more than %d' % (
                    x, y, len(labels), d.K))
    side = 1
    while True:
        bound = d.c ** 3 * (side * d.unit) ** 2
        for (x0, y0), labels in sorted(subgrid_labels(d, side).items()):
            if len(labels) ** 3 > bound:
                raise InadmissibleDemands(
                    'the %dx%d subgrid at (%d, %d) holds %d labels' % (
                        side, side, x0, y0, len(labels)))
        if side >= d.N:
            break
        side *= 2


def default_schedule(d, base=const.PLAID_BASE_SIDE):
    "Returns the halving schedule of subgrid sides from *N* down to *base*"
    layers = [d.N]
    while layers[-1] > base and layers[-1] % 2 == 0:
        layers.append(layers[-1] // 2)
    return layers


def check_schedule(d, layers):
    """
    Raises :exc:`InfeasibleSchedule` unless *layers* starts at the grid side
    and decreases strictly, each side dividing the one before.
    """
    layers = list(layers)
    if not layers or layers[0] != d.N:
        raise InfeasibleSchedule('a schedule must start at the grid side %d' % d.N)
    for big, small in zip(layers, layers[1:]):
        if not 0 < small < big or big % small:
            raise InfeasibleSchedule(
                'layer side %d does not divide layer side %d' % (small, big))
    return layers


def edge_budget(d, layers=None):
    """
    Returns the most labels :func:`build_plaid` can place on one edge: *K*
    per stripe layer plus the labels of the fullest base cell.
    """
    if layers is None:
        layers = default_schedule(d)
    base = subgrid_labels(d, layers[-1]).values()
    return d.K * (len(layers) - 1) + max((len(labels) for labels in base), default=0)


def build_plaid(d, layers=None):
    """
    Returns the multiscale stripe labeling of *d* for the schedule *layers*
    (by default :func:`default_schedule`). Raises :exc:`InadmissibleDemands`
    for demand grids breaking their limits and :exc:`InfeasibleSchedule`
    when a subgrid needs more stripes than the next layer is wide.
    """
    check_demands(d)
    if layers is None:
        layers = default_schedule(d)
    layers = check_schedule(d, layers)
    found = defaultdict(list)
    for j, (side, sub) in enumerate(zip(layers, layers[1:])):
        for (x0, y0), labels in sorted(subgrid_labels(d, side).items()):
            blocks = [labels[k:k + d.K] for k in range(0, len(labels), d.K)]
            if len(blocks) > sub:
                logger.info(
                    'Layer %d subgrid at (%d, %d) needs %d stripes', j, x0, y0,
                    len(blocks))
                raise InfeasibleSchedule(
                    'layer %d subgrid at (%d, %d) needs %d stripes but its '
                    'children are %d wide' % (j, x0, y0, len(blocks), sub))
            for x, y, axis in edges_within(x0, y0, side):
                offset = x - x0 if axis == 'V' else y - y0
                block = blocks[offset % len(blocks)]
                found[x, y, axis].extend(Entry(label, j) for label in block)
    base = len(layers) - 1
    for (x0, y0), labels in sorted(subgrid_labels(d, layers[-1]).items()):
        for edge in edges_within(x0, y0, layers[-1]):
            found[edge].extend(Entry(label, base) for label in labels)
    logger.debug(
        'Built a plaid of %d layers over %d edges', len(layers), len(found))
    return {edge: tuple(entries) for edge, entries in sorted(found.items())}


def label_graphs(el):
    "Returns a mapping of each label of *el* to the graph of edges carrying it"
    graphs = defaultdict(nx.Graph)
    for edge, entries in el.items():
        for entry in entries:
            if entry.label is not FILLER:
                graphs[entry.label].add_edge(*edge_nodes(edge))
    return graphs


def _component(graph, holders):
    graph = graph.copy()
    graph.add_nodes_from(holders)
    return nx.node_connected_component(graph, holders[0])


def check_labeling(d, el, budget=None, sources=None):
    """
    Raises :exc:`LabelingRejected` unless, in labeling *el*, every edge
    carries at most *budget* labels and the nodes demanding each label lie
    in one component of the edges carrying it, that component containing a
    full row of the grid (or, if *sources* maps labels to nodes, one of the
    label's sources).
    """
    if budget is not None:
        for edge, entries in sorted(el.items()):
            if len(entries) > budget:
                raise LabelingRejected(
                    'budget', edge, '%d labels, budget %d' % (len(entries), budget))
    graphs = label_graphs(el)
    for label in d.labels:
        holders = d.holders(label)
        comp = _component(graphs.get(label, nx.Graph()), holders)
        if not comp.issuperset(holders):
            raise LabelingRejected(
                'connectivity', label, '%d of %d holders reached' % (
                    len(comp.intersection(holders)), len(holders)))
        if sources is None:
            if not any(
                    all((x, y) in comp for x in range(d.N))
                    for y in range(d.N)):
                raise LabelingRejected('row', label, 'no full row is reached')
        elif not comp.intersection(sources.get(label, ())):
            raise LabelingRejected('source', label, 'no source is reached')


def connect_sources(d, el, sources):
    """
    Returns a copy of *el* in which every source of a label is joined to the
    label's component by a straight vertical feed, for sources that are not
    on the component already.
    """
    result = {edge: list(entries) for edge, entries in el.items()}
    graphs = label_graphs(el)
    for label, nodes in sorted(sources.items()):
        graph = graphs.get(label)
        holders = [h for h in d.holders(label) if graph is not None and h in graph]
        if not holders:
            continue
        targets = _component(graph, holders)
        for x, y in sorted(nodes):
            if (x, y) in targets:
                continue
            for dist in range(1, d.N):
                reached = [
                    ty for ty in (y - dist, y + dist)
                    if 0 <= ty < d.N and (x, ty) in targets]
                if reached:
                    ty = reached[0]
                    for row in range(min(y, ty), max(y, ty)):
                        result.setdefault((x, row, 'V'), []).append(
                            Entry(label, FEED))
                    break
    return {edge: tuple(entries) for edge, entries in sorted(result.items())}


def assign_counters(d, el, sources):
    """
    Returns a copy of *el* in which every label named in *sources* travels
    along a breadth-first tree grown from its sources: each tree edge on the
    way to a node demanding the label carries one entry whose counter is the
    hop distance of the sending node, and the label is dropped from every
    other edge. Labels without sources are left untouched.
    """
    graphs = label_graphs(el)
    tree = {}
    for label, nodes in sorted(sources.items()):
        graph = graphs.get(label, nx.Graph())
        starts = [node for node in sorted(nodes) if node in graph]
        dist = {node: 0 for node in starts}
        parent = {}
        queue = deque(starts)
        while queue:
            node = queue.popleft()
            for other in sorted(graph[node]):
                if other not in dist:
                    dist[other] = dist[node] + 1
                    parent[other] = node
                    queue.append(other)
        for node in d.holders(label):
            while node in parent:
                up = parent[node]
                edge = edge_between(up, node)
                tree[edge, label] = (dist[up], up == edge_nodes(edge)[0])
                node = up
    result = {}
    for edge, entries in sorted(el.items()):
        kept = []
        done = set()
        for entry in entries:
            if entry.label not in sources:
                kept.append(entry)
            elif (edge, entry.label) in tree and entry.label not in done:
                counter, forward = tree[edge, entry.label]
                kept.append(entry._replace(counter=counter, forward=forward))
                done.add(entry.label)
        if kept:
            result[edge] = tuple(kept)
    return result


def verify_counters(d, el, sources):
    """
    Raises :exc:`LabelingRejected` unless the counters of *el* are
    consistent: sources receive nothing and send 0, every other node that
    holds or relays a label receives it exactly once and sends it on with
    the counter incremented, a node receiving a label it does not demand
    passes it on, and every counter is below N squared.
    """
    limit = d.N ** 2
    for label in sorted(set(d.labels) | set(sources)):
        incoming = defaultdict(list)
        outgoing = defaultdict(list)
        for edge, entries in sorted(el.items()):
            for entry in entries:
                if entry.label != label or entry.counter is None:
                    continue
                if not 0 <= entry.counter < limit:
                    raise LabelingRejected(
                        'counter-range', (label, edge),
                        'counter %d' % entry.counter)
                a, b = edge_nodes(edge)
                src, dst = (a, b) if entry.forward else (b, a)
                outgoing[src].append(entry.counter)
                incoming[dst].append(entry.counter)
        origins = set(sources.get(label, ()))
        holders = set(d.holders(label))
        for node in sorted(set(incoming) | set(outgoing) | holders):
            received, sent = incoming[node], outgoing[node]
            if node in origins:
                if received:
                    raise LabelingRejected('source-incoming', (label, node))
                if any(counter != 0 for counter in sent):
                    raise LabelingRejected('source-counter', (label, node))
                continue
            if len(received) != 1:
                raise LabelingRejected(
                    'incoming', (label, node),
                    'received %d times' % len(received))
            if any(counter != received[0] + 1 for counter in sent):
                raise LabelingRejected(
                    'increment', (label, node),
                    'received %d, sent %r' % (received[0], sent))
            if not sent and node not in holders:
                raise LabelingRejected('dangling', (label, node))
