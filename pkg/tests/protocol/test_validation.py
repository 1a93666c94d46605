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

import timeit
from itertools import product
from functools import partial

import pytest

from conftest import replace_sizes
from seasquares.squares import Corner, Square, ScaleParams
from seasquares.protocol.records import (
    NEUTRAL,
    CornerMessage,
    SizeEntry,
    ParentView,
    ParameterTape,
    Macrocolor,
    MacrotileWitness,
    parent_view,
)
from seasquares.protocol.prover import prove_children
from seasquares.protocol.validation import (
    WitnessRejected,
    Match,
    child_offset,
    square_at,
    parent_corner,
    leaves_at_corner,
    resolve,
    validate_witness,
    _sweep,
)


def with_side(w, side, **changes):
    return w.with_color(side, w.color(side)._replace(**changes))


def rejected(w, scale, view=None):
    with pytest.raises(WitnessRejected) as exc:
        validate_witness(w, scale, view=view)
    return exc.value.step, exc.value.clause


def test_geometry_helpers(toy_scale):
    assert child_offset((1, 0), toy_scale) == (4, 0)
    assert square_at(Corner(7, 3, 'LR'), 5) == Square(5, 3, 3)
    assert square_at(Corner(3, 7, 'UL'), 5) == Square(5, 3, 3)
    assert square_at(Corner(7, 7, 'UR'), 5) == Square(5, 3, 3)
    assert parent_corner(Corner(3, 3, 'LR'), (1, 0), toy_scale) == Corner(7, 3, 'LR')
    assert leaves_at_corner(Corner(2, 2, 'UL'), (3, 0), 4)
    assert not leaves_at_corner(Corner(2, 2, 'LL'), (3, 0), 4)
    assert not leaves_at_corner(Corner(2, 2, 'UL'), (2, 0), 4)


def test_rejected_message():
    assert str(WitnessRejected(3, 'a', 'oops')) == 'step 3a: oops'
    assert str(WitnessRejected(6, 'neutral', 'oops')) == 'step 6 (neutral): oops'


def test_honest_small_square(small_square, toy_scale):
    for pos, w in small_square.items():
        result = validate_witness(w, toy_scale)
        assert result.demands == ((3,) if pos == (0, 0) else ())
    result = validate_witness(small_square[0, 0], toy_scale)
    assert result.steps == 1


def test_honest_big_square(big_square, toy_scale):
    for pos, w in big_square.items():
        view = parent_view(pos, [5], 2)
        assert validate_witness(w, toy_scale, view=view).demands == (5,)


def test_honest_rich_sea(rich_sea, rich_scale):
    sizes = [2, 4, 5, 10]
    demands = {
        pos: validate_witness(w, rich_scale, view=parent_view(pos, sizes, 4)).demands
        for pos, w in rich_sea.items()
    }
    assert demands[0, 0] == (2, 5)
    assert demands[1, 0] == demands[0, 1] == demands[1, 1] == (5,)
    assert demands[3, 0] == (4,)
    assert demands[1, 2] == demands[3, 2] == (10,)
    assert demands[2, 2] == ()


def test_resolve_primary(big_square, toy_scale):
    result = resolve(big_square[0, 0], toy_scale, (0, 0))
    assert {m.side for m in result.matches} == {'E', 'N'}
    assert all(m.via == 'primary' and m.size == 5 for m in result.matches)
    assert result.matches[0].square == Square(5, 3, 3)
    assert result.unanswered == ()
    assert len(result.absorbed) == 2


def test_resolve_secondary(rich_sea, rich_scale):
    result = resolve(rich_sea[3, 0], rich_scale, (3, 0))
    assert result.matches[0] == Match(
        'secondary', Corner(14, 2, 'UL'), 'E', 4, Square(4, 14, -1))
    assert result.unanswered == ()


def test_resolve_unanswered(rich_sea, rich_scale):
    result = resolve(rich_sea[0, 1], rich_scale, (0, 1))
    assert Corner(1, 5, 'LR') in result.unanswered


def test_step_levels(small_square, toy_scale):
    w = small_square[0, 0]
    assert rejected(w._replace(tape=w.tape._replace(i=2)), toy_scale) == (1, 'levels')


def test_step_scale(small_square):
    w = small_square[0, 0]
    assert rejected(w, ScaleParams(0, 1, 1, 4, 4)) == (2, 'scale')
    assert rejected(w, ScaleParams(0, 1, None, 4, 4)) == (2, 'scale')


def test_step_tape(small_square, toy_scale):
    w = small_square[0, 0]
    corners = tuple(Corner(0, k, 'LL') for k in range(5))
    assert rejected(w._replace(tape=w.tape._replace(corners=corners)), toy_scale) == (3, 'a')
    outside = (Corner(4, 0, 'LL'),)
    assert rejected(w._replace(tape=w.tape._replace(corners=outside)), toy_scale) == (3, 'a')
    bad = (Corner(1, 1, 'XX'),)
    assert rejected(w._replace(tape=w.tape._replace(corners=bad)), toy_scale) == (3, 'a')
    assert rejected(w._replace(tape=w.tape._replace(sizes=(0,))), toy_scale) == (3, 'b')
    assert rejected(w._replace(tape=w.tape._replace(sizes=tuple(range(1, 30)))), toy_scale) == (3, 'b')
    located = w.tape._replace(locations=((7, 0, 0),))
    assert rejected(w._replace(tape=located), toy_scale) == (3, 'c')
    located = w.tape._replace(locations=((3, 1, 1), (3, 1, 1)))
    assert rejected(w._replace(tape=located), toy_scale) == (3, 'c')


def test_step_parts(big_square, toy_scale):
    w = big_square[0, 0]
    cases = [
        ({'machine': 'x'}, 'a'),
        ({'coords': (2, 0)}, 'b'),
        ({'corner_copy': tuple(Corner(k, 0, 'LL') for k in range(5))}, 'c'),
        ({'primary': [CornerMessage(k, 0, 'LL', True) for k in range(3)]}, 'd'),
        ({'primary': [CornerMessage(20, 0, 'LL', True)]}, 'd'),
        ({'secondary': [CornerMessage(k, 0, 'LL', False) for k in range(2)]}, 'e'),
        ({'reading': 9}, 'f'),
        ({'sizes': [SizeEntry(5, 4, False)]}, 'g'),
        ({'sizes': [SizeEntry(9, 0, False)]}, 'g'),
    ]
    for changes, clause in cases:
        assert rejected(with_side(w, 'E', **changes), toy_scale) == (4, clause)


def test_step_coords(big_square, toy_scale):
    w = with_side(big_square[0, 0], 'N', coords=(1, 0))
    assert rejected(w, toy_scale) == (5, 'coords')


def test_step_neutral(big_square, toy_scale):
    w = big_square[0, 0]
    assert rejected(with_side(w, 'W', reading=5), toy_scale) == (6, 'neutral')
    assert rejected(with_side(w, 'S', corner_copy=()), toy_scale) == (6, 'neutral')
    assert rejected(with_side(w, 'E', corner_copy=NEUTRAL), toy_scale) == (6, 'corner-copy')
    copied = with_side(w, 'N', corner_copy=(Corner(1, 1, 'LL'),))
    assert rejected(copied, toy_scale) == (6, 'corner-copy')


def test_step_outgoing(big_square, toy_scale):
    w = big_square[0, 0]
    primary = tuple(m for m in w.E.primary if m.incoming)
    assert rejected(with_side(w, 'E', primary=primary), toy_scale) == (7, 'outgoing')


def test_step_unreassured(big_square, toy_scale):
    w = big_square[0, 0]
    w = with_side(w, 'E', sizes=(), reading=None)
    w = with_side(w, 'N', sizes=())
    assert rejected(w, toy_scale) == (7, 'unreassured')


def test_step_unanswered(big_square, toy_scale):
    w = big_square[0, 0]
    for side in 'EN':
        w = with_side(w, side, primary=tuple(
            m for m in w.color(side).primary if not m.incoming))
    assert rejected(w, toy_scale) == (9, 'corner-copy')


def test_step_unexplained(big_square, toy_scale):
    w = big_square[0, 0]
    primary = w.E.primary + (CornerMessage(0, 0, 'UL', False),)
    assert rejected(with_side(w, 'E', primary=primary), toy_scale) == (10, 'unexplained')
    secondary = (CornerMessage(0, 0, 'UL', False),)
    assert rejected(with_side(w, 'E', secondary=secondary), toy_scale) == (10, 'unexplained')


def test_step_pass_on(rich_sea, rich_scale):
    w = rich_sea[2, 2]
    passed = CornerMessage(5, 9, 'LL', False)
    assert passed in w.E.primary
    primary = tuple(m for m in w.E.primary if m != passed)
    assert rejected(with_side(w, 'E', primary=primary), rich_scale) == (10, 'pass-on')


def test_step_reading(small_square, toy_scale):
    w = small_square[0, 0]
    assert rejected(with_side(w, 'N', reading=3), toy_scale) == (11, 'reading')
    assert rejected(w, toy_scale, view=ParentView(3, False, False)) == (11, 'reading')
    assert rejected(w, toy_scale, view=ParentView(4, True, False)) == (11, 'reading')
    assert rejected(w, toy_scale, view=ParentView()) == (11, 'reading')
    validate_witness(w, toy_scale, view=ParentView(3, True, False))


def test_step_sorted(toy_scale):
    children = prove_children([Square(1, 0, 0), Square(2, 2, 0)], toy_scale)
    w = children[0, 0]
    assert w.tape.sizes == (1, 2)
    validate_witness(w, toy_scale)
    w = w._replace(tape=w.tape._replace(sizes=(2, 1)))
    assert rejected(w, toy_scale) == (12, 'sorted')


def test_step_sorted_lists(big_square, toy_scale):
    w = big_square[0, 1]
    entries = w.E.sizes + (SizeEntry(3, 0, True),)
    assert rejected(with_side(w, 'E', sizes=entries), toy_scale) == (12, 'sorted')


def test_step_counter(small_square, toy_scale):
    w = with_side(small_square[0, 1], 'E', sizes=(SizeEntry(7, 0, False),))
    assert rejected(w, toy_scale) == (13, 'counter')


def test_step_sweep_counters(big_square, toy_scale):
    w = big_square[0, 1]
    assert w.S.sizes == (SizeEntry(5, 0, True),)
    assert w.E.sizes == (SizeEntry(5, 1, False),)
    w = with_side(w, 'E', sizes=(SizeEntry(5, 2, False),))
    assert rejected(w, toy_scale) == (14, 'a')
    # arriving twice
    w = with_side(big_square[0, 1], 'E', sizes=(SizeEntry(5, 0, True),))
    assert rejected(w, toy_scale) == (14, 'a')


def test_step_sweep_listed(small_square, toy_scale):
    w = small_square[0, 0]
    w = w._replace(tape=w.tape._replace(sizes=(3, 7)))
    assert rejected(w, toy_scale) == (14, 'b')


def test_counters_checked_everywhere(big_square, toy_scale):
    bumped = replace_sizes(big_square, lambda e: e._replace(counter=e.counter + 1))
    assert rejected(bumped[0, 0], toy_scale) == (14, 'a')
    # the relays cannot tell on their own
    validate_witness(bumped[0, 1], toy_scale)
    validate_witness(bumped[1, 1], toy_scale)


def shifted(m):
    return m._replace(x=m.x + 1)


@pytest.mark.parametrize('part', ['primary', 'secondary'])
def test_moved_outgoing_messages(rich_sea, rich_scale, part):
    count = 0
    for (pos, w), side in product(sorted(rich_sea.items()), 'NESW'):
        messages = getattr(w.color(side), part)
        for k, m in enumerate(messages):
            if m.incoming:
                continue
            changed = messages[:k] + (shifted(m),) + messages[k + 1:]
            with pytest.raises(WitnessRejected):
                validate_witness(with_side(w, side, **{part: changed}), rich_scale)
            count += 1
    assert count > 0


def sweep_witness(k):
    # every size arrives from the west and leaves north or east; every third
    # size is on the tape
    return MacrotileWitness(
        ParameterTape(0, 1, sizes=range(3, k + 1, 3)),
        N=Macrocolor(sizes=[SizeEntry(s, 1, False) for s in range(2, k + 1, 2)]),
        E=Macrocolor(sizes=[SizeEntry(s, 1, False) for s in range(1, k + 1, 2)]),
        S=Macrocolor(),
        W=Macrocolor(sizes=[SizeEntry(s, 0, True) for s in range(1, k + 1)]))


def test_sweep_steps():
    assert _sweep(sweep_witness(0)) == 0
    assert _sweep(sweep_witness(10)) == 10
    w = sweep_witness(10)
    w = with_side(w, 'E', sizes=w.E.sizes[:-1] + (SizeEntry(9, 2, False),))
    with pytest.raises(WitnessRejected) as exc:
        _sweep(w)
    assert (exc.value.step, exc.value.clause) == (14, 'a')


def test_sweep_time_linear():
    sizes = []
    k = 10000
    while k <= 1000000:
        sizes.append(k)
        k *= 2
    times = []
    for k in sizes:
        w = sweep_witness(k)
        assert _sweep(w) == k
        times.append(min(timeit.repeat(partial(_sweep, w), number=1, repeat=3)))
    for k, before, after in zip(sizes[1:], times, times[1:]):
        assert after / before <= 2.5, (
            'sweeping %d entries took %.2f times as long as half as many' % (
                k, after / before))
