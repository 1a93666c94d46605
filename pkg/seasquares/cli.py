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
Contains the functions that implement the :program:`seasq` script. Every
sub-command reads its inputs from the text files described in
:file:`FORMATS.rst`, prints its result on stdout and reports the verdict
through the exit code: 0 for a pass, 1 for a failure and 2 for usage errors.
Diagnostics go to stderr through :mod:`logging`.

.. autofunction:: main
"""

import sys
import random
import logging

import configargparse

from . import __version__, terminal, const, formats
from . import squares, yshift, wang, machines, layout, plaid, canonical, entropy
from .formats import FormatError
from .protocol import assembly, kill, prover, serial, validation
from .protocol.records import SIDES, ParameterTape


DOMAIN_ERRORS = (
    squares.MalformedPattern,
    wang.Unsatisfiable,
    wang.CapExceeded,
    wang.BudgetExceeded,
    machines.NondeterministicMachine,
    layout.LayoutInfeasible,
    plaid.InadmissibleDemands,
    plaid.InfeasibleSchedule,
    plaid.LabelingRejected,
    validation.WitnessRejected,
    assembly.AssemblyRejected,
    FormatError,
    entropy.NoConvergence,
    prover.ParentOverflow,
    serial.PackingOverflow,
)


def schedule(s):
    """
    Parses a comma separated list of zoom factors such as ``4,2``.
    """
    factors = tuple(int(n) for n in s.split(','))
    if not factors or any(n < 2 for n in factors):
        raise ValueError('zoom factors must be at least 2')
    return factors


def positive(s):
    n = int(s)
    if n < 1:
        raise ValueError('%d is not positive' % n)
    return n


def natural(s):
    n = int(s)
    if n < 0:
        raise ValueError('%d is negative' % n)
    return n


def zoom(s):
    n = int(s)
    if n < 2:
        raise ValueError('zoom factor %d is below 2' % n)
    return n


def reading_group(s):
    n = int(s)
    if n < 2:
        raise ValueError('reading group %d is below 2' % n)
    return n


def harvest_sizes(s):
    """
    Parses a comma separated list of harvest window sizes such as ``10,12``.
    """
    sizes = tuple(positive(n) for n in s.split(','))
    if list(sizes) != sorted(set(sizes)) or sizes[0] < 2:
        raise ValueError('window sizes must increase from at least 2')
    return sizes


def shift(s):
    "Checks a shift description such as ``s-square:evens``"
    entropy.shift_spec(s)
    return s


def tolerance(s):
    value = float(s)
    if not 0 < value < 1:
        raise ValueError('tolerance %g is not between 0 and 1' % value)
    return value


def main(args=None):
    """
    This is the main function for the :program:`seasq` script. It builds the
    command tree, configures logging and dispatches to the ``do_*`` function
    of the chosen sub-command, returning its exit code.
    """
    sys.excepthook = terminal.error_handler
    terminal.error_handler.expect(*DOMAIN_ERRORS)
    parser = terminal.configure_parser("""\
The seasq script drives the seasquares toolkit: inventories of seas of
squares, the directed square shift, Wang tiles, Turing machine tilesets,
macrotile layouts and witnesses, plaid labelings and pattern counting.
""")
    add_tuning_options(parser)
    groups = parser.add_subparsers(
        dest='group', metavar='group', title='command groups')
    groups.required = True
    add_squares_commands(groups)
    add_y_commands(groups)
    add_wang_commands(groups)
    add_tm_commands(groups)
    add_layout_commands(groups)
    add_protocol_commands(groups)
    add_plaid_commands(groups)
    add_entropy_commands(groups)
    config = parser.parse_args(args)
    terminal.configure_logging(config.log_level, config.log_file)

    logging.info("seasquares version %s", __version__)
    return config.func(config)


def add_tuning_options(parser):
    """
    Adds the global options tuning the constructions. Like every global
    option they may be set in a configuration file, e.g.
    ``size-constant = 9``, and must precede the command group on the
    command line.
    """
    group = parser.add_argument_group('tuning')
    group.add_argument(
        '--size-constant', metavar='INT', type=positive,
        default=const.SIZE_LIST_CONSTANT,
        help='The constant scaling the tape and size list length limits '
        '(default: %(default)s)')
    group.add_argument(
        '--reading-group', metavar='INT', type=reading_group,
        default=const.READING_GROUP,
        help='The number of children reading each parent tape slot '
        '(default: %(default)s)')
    group.add_argument(
        '--harvest-sizes', metavar='N,N,...', type=harvest_sizes,
        default=const.HARVEST_SIZES,
        help='The window sizes harvested for the allowed blocks of the '
        'directed square shift (default: 10,12)')
    group.add_argument(
        '--tolerance', metavar='FLOAT', type=tolerance,
        default=const.POWER_TOLERANCE,
        help='The convergence tolerance of the power iteration '
        '(default: %(default)s)')


def _commands(groups, name, help):
    group = groups.add_parser(name, help=help, description=help)
    commands = group.add_subparsers(dest='command', metavar='command')
    commands.required = True
    return commands


def _read(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _write(text):
    sys.stdout.write(text)


def _pattern(path):
    return formats.parse_pattern(_read(path))


def _usage(message):
    return configargparse.ArgumentError(None, message)


def _scales(i0, i, schedule):
    try:
        return squares.scales(i0, i, schedule)
    except ValueError as exc:
        raise _usage(str(exc))


# squares ####################################################################

def add_squares_commands(groups):
    commands = _commands(
        groups, 'squares', 'Inventories of binary windows and scale arithmetic')
    cmd = commands.add_parser(
        'detect', help='List the squares, corners and sides of a window')
    cmd.add_argument('pattern', metavar='FILE')
    cmd.set_defaults(func=do_detect)
    cmd = commands.add_parser(
        'extend', help='Continue every component of a window past its edges')
    cmd.add_argument('pattern', metavar='FILE')
    cmd.add_argument(
        '--margin', metavar='INT', type=natural, default=1,
        help='The number of cells added on every side (default: %(default)s)')
    cmd.set_defaults(func=do_extend)
    cmd = commands.add_parser(
        'random', help='Draw a random sea of squares from --seed')
    cmd.add_argument('--width', metavar='INT', type=positive, default=16)
    cmd.add_argument('--height', metavar='INT', type=positive, default=16)
    cmd.add_argument(
        '--max-side', metavar='INT', type=positive, default=6,
        help='The largest square side drawn (default: %(default)s)')
    cmd.add_argument(
        '--distinct', action='store_true',
        help='Draw squares of pairwise distinct sides')
    cmd.set_defaults(func=do_random)
    cmd = commands.add_parser(
        'bound', help='Print the counting bounds of an L x L window')
    cmd.add_argument('side', metavar='L', type=positive)
    cmd.set_defaults(func=do_bound)
    cmd = commands.add_parser(
        'scales', help='Print the zoom and pixel sides of a level')
    cmd.add_argument('--i0', metavar='INT', type=natural, default=0)
    cmd.add_argument('--level', metavar='INT', type=natural, required=True)
    cmd.add_argument(
        '--schedule', metavar='N,N,...', type=schedule, default=None,
        help='Toy zoom factors replacing the doubly exponential ones')
    cmd.set_defaults(func=do_scales)


def _fields(item):
    return ' '.join(str(value) for value in item)


def do_detect(config):
    pattern = _pattern(config.pattern)
    inventory = squares.detect_inventory(pattern)
    for name, items in zip(
            ('full', 'clipped', 'corner', 'side', 'region'), inventory):
        for item in items:
            print('%s %s' % (name, _fields(item)))
    print(' '.join(['known'] + [str(n) for n in inventory.known_sides()]))
    return 0


def do_extend(config):
    pattern = _pattern(config.pattern)
    _write(formats.render_pattern(squares.extend(pattern, config.margin)))
    return 0


def do_random(config):
    rng = random.Random(config.seed)
    sea = squares.random_sea(
        config.width, config.height, rng, config.max_side,
        distinct=config.distinct)
    logging.info('Placed %d squares', len(sea))
    _write(formats.render_pattern(squares.Pattern.from_cells(
        config.width, config.height, (cell for sq in sea for cell in sq.cells()))))
    return 0


def do_bound(config):
    L = config.side
    print('distinct full squares %d' % squares.max_distinct_full(L))
    print('boundary sides %g' % squares.boundary_bound(L))
    return 0


def do_scales(config):
    scale = _scales(config.i0, config.level, config.schedule)
    print('N %s L %d M %d' % (scale.N, scale.L, scale.M))
    return 0


# y ##########################################################################

def add_y_commands(groups):
    commands = _commands(
        groups, 'y', 'The shift of directed nested squares')
    for name, func, help in (
            ('check', do_check_y, 'Search a directed window for forbidden blocks'),
            ('lift', do_lift, 'Direct the squares of a binary window'),
            ('project', do_project, 'Map a directed window onto its binary sea')):
        cmd = commands.add_parser(name, help=help)
        cmd.add_argument('pattern', metavar='FILE')
        cmd.set_defaults(func=func)
    cmd = commands.add_parser(
        'extendable', help='Decide whether a directed window extends')
    cmd.add_argument('pattern', metavar='FILE')
    cmd.add_argument('--margin', metavar='INT', type=natural, default=1)
    cmd.set_defaults(func=do_extendable)


def _y_pattern(path):
    pattern = _pattern(path)
    if pattern.alphabet != const.Y_ALPHABET:
        raise FormatError('%s is not a directed square window' % path)
    return pattern


def do_check_y(config):
    violation = yshift.check_y(
        _y_pattern(config.pattern), config.harvest_sizes)
    if violation is None:
        print('valid')
        return 0
    print('forbidden %s at %d,%d' % (
        ''.join(violation.block), violation.x, violation.y))
    return 1


def do_lift(config):
    _write(formats.render_pattern(yshift.lift(_pattern(config.pattern))))
    return 0


def do_project(config):
    _write(formats.render_pattern(yshift.project(_pattern(config.pattern))))
    return 0


def do_extendable(config):
    if yshift.extendable(
            _y_pattern(config.pattern), config.margin, sizes=config.harvest_sizes):
        print('extendable')
        return 0
    print('not extendable')
    return 1


# wang #######################################################################

def add_wang_commands(groups):
    commands = _commands(groups, 'wang', 'Wang tilesets and simulations')
    cmd = commands.add_parser('solve', help='Tile a rectangular region')
    cmd.add_argument('tileset', metavar='FILE')
    cmd.add_argument('--width', metavar='INT', type=positive, required=True)
    cmd.add_argument('--height', metavar='INT', type=positive, required=True)
    cmd.add_argument(
        '--mode', choices=('find', 'count'), default='find',
        help='Print one tiling or count them all (default: %(default)s)')
    cmd.add_argument(
        '--cap', metavar='INT', type=positive, default=const.SOLVER_CAP,
        help='The most tilings counted (default: %(default)s)')
    cmd.set_defaults(func=do_solve)
    cmd = commands.add_parser(
        'simulate',
        help='Check the location tileset against the one-tile coordinate map')
    cmd.add_argument('--n', metavar='N', type=positive, default=4)
    cmd.add_argument(
        '--budget', metavar='INT', type=positive,
        default=const.SIMULATION_BUDGET)
    cmd.set_defaults(func=do_simulate)


def do_solve(config):
    tileset = formats.parse_tileset(_read(config.tileset))
    if config.mode == 'count':
        print(wang.solve_region(
            tileset, config.width, config.height, mode='count', cap=config.cap))
        return 0
    try:
        tiling = wang.solve_region(tileset, config.width, config.height)
    except wang.Unsatisfiable:
        print('unsat')
        return 1
    for y in reversed(range(tiling.height)):
        print(' '.join(str(tiling[x, y]) for x in range(tiling.width)))
    return 0


def do_simulate(config):
    S, phi = wang.coordinate_map(config.n)
    verdict = wang.check_simulation(
        wang.location_tileset(config.n), S, config.n, phi, config.budget)
    if verdict.ok:
        print('pass')
        return 0
    print('fail bullet %d: %s' % (verdict.bullet, verdict.detail))
    return 1


# tm #########################################################################

def _machine(name):
    try:
        return machines.CORPUS[name]
    except KeyError:
        return formats.parse_machine(_read(name))


def _inputs(tm, config):
    inputs = config.inputs
    if inputs is None:
        return [''] * tm.tapes
    if len(inputs) != tm.tapes:
        raise _usage('%s needs %d --input options' % (config.machine, tm.tapes))
    if any(len(word) > config.width for word in inputs):
        raise _usage('inputs must fit --width %d' % config.width)
    return inputs


def add_tm_commands(groups):
    commands = _commands(groups, 'tm', 'Turing machines and their tilesets')
    for name, func, help in (
            ('run', do_run, 'Print the space-time diagram of a run'),
            ('verify', do_verify, 'Compare anchored tilings with the run')):
        cmd = commands.add_parser(name, help=help)
        cmd.add_argument(
            'machine', metavar='MACHINE',
            help='A machine of the built-in corpus (%s) or a machine file' %
            ', '.join(machines.CORPUS))
        cmd.add_argument(
            '--input', metavar='WORD', action='append', dest='inputs',
            help='The input of the next tape; repeat once per tape')
        cmd.add_argument('--width', metavar='INT', type=positive, default=8)
        cmd.set_defaults(func=func)
        if name == 'run':
            cmd.add_argument('--steps', metavar='INT', type=natural, default=20)
        else:
            cmd.add_argument(
                '--n', metavar='INT', type=positive, default=10,
                help='The height of the tiled region (default: %(default)s)')
    cmd = commands.add_parser('compile', help='Print the tileset of a machine')
    cmd.add_argument('machine', metavar='MACHINE')
    cmd.add_argument('--width', metavar='INT', type=positive, default=8)
    cmd.set_defaults(func=do_compile)


def do_run(config):
    tm = _machine(config.machine)
    diagram = machines.run_tm(
        tm, _inputs(tm, config), config.steps, config.width)
    for row in diagram.rows:
        print(row)
    print('halted' if diagram.halted else 'running')
    return 0


def do_compile(config):
    _write(formats.render_tileset(
        machines.compile_tm(_machine(config.machine), config.width)))
    return 0


def do_verify(config):
    tm = _machine(config.machine)
    verdict = machines.verify_equivalence(
        tm, _inputs(tm, config), config.n, config.width)
    if verdict.ok:
        print(verdict.status)
        return 0
    print('%s at row %s: %s' % (verdict.status, verdict.row, verdict.detail))
    return 1


# layout #####################################################################

def add_layout_commands(groups):
    commands = _commands(groups, 'layout', 'The anatomy of a macrotile')
    cmd = commands.add_parser('render', help='Print the role map of a layout')
    cmd.add_argument('--n', metavar='N', type=zoom, required=True)
    cmd.add_argument('--s', metavar='INT', type=positive, required=True)
    cmd.add_argument('--comp-width', metavar='INT', type=positive, required=True)
    cmd.add_argument('--comp-height', metavar='INT', type=positive, required=True)
    cmd.add_argument(
        '--wire-width', metavar='INT', type=positive, default=None,
        help='Tiles across each wire bundle (default: one per macrocolor bit)')
    cmd.set_defaults(func=do_layout)


def do_layout(config):
    spec = layout.LayoutSpec(
        config.n, config.s, config.comp_width, config.comp_height,
        config.wire_width)
    _write(layout.render(layout.layout(spec)))
    return 0


# protocol ###################################################################

def add_protocol_commands(groups):
    commands = _commands(
        groups, 'protocol', 'Macrotile witnesses and parent assembly')

    def add_schedule(cmd):
        cmd.add_argument(
            '--schedule', metavar='N,N,...', type=schedule, default=None,
            help='The zoom factor of every level')
        cmd.add_argument(
            '--n', metavar='N', type=zoom, default=None,
            help='Use the same zoom factor N at every level')

    cmd = commands.add_parser(
        'check-witness', help='Run the checks of a macrotile on its witness')
    cmd.add_argument('witness', metavar='FILE')
    add_schedule(cmd)
    cmd.set_defaults(func=do_check_witness)
    cmd = commands.add_parser(
        'assemble', help='Assemble the parent tape of a directory of children')
    cmd.add_argument('children', metavar='DIR')
    add_schedule(cmd)
    cmd.add_argument('--distinct', action='store_true')
    cmd.set_defaults(func=do_assemble)
    cmd = commands.add_parser(
        'prove', help='Write the child witnesses of a parent window')
    cmd.add_argument('pattern', metavar='FILE')
    cmd.add_argument('children', metavar='DIR')
    cmd.add_argument(
        '--level', metavar='INT', type=natural, default=1,
        help='The level of the children (default: %(default)s)')
    add_schedule(cmd)
    cmd.add_argument('--distinct', action='store_true')
    cmd.set_defaults(func=do_prove)
    cmd = commands.add_parser(
        'kill', help='Run the forbidden size enumerator against a size list')
    cmd.add_argument(
        '--set', metavar='SET', dest='sizes_set', type=kill.set_spec,
        required=True,
        help='The permitted sizes: evens, odds, all, primes or file:PATH')
    cmd.add_argument(
        '--budget', metavar='INT', type=natural, default=const.KILL_BUDGET,
        help='The number of enumerator steps (default: %(default)s)')
    cmd.add_argument('sizes', metavar='SIZE', type=positive, nargs='*')
    cmd.set_defaults(func=do_kill)
    cmd = commands.add_parser(
        'pack', help='Print the bit string of each macrocolor of a witness')
    cmd.add_argument('witness', metavar='FILE')
    add_schedule(cmd)
    cmd.add_argument(
        '--s', metavar='INT', type=positive, required=True,
        help='The width of the machine part')
    cmd.set_defaults(func=do_pack)


def _scale(config, i0, i):
    if config.n is not None:
        return _scales(i0, i, (config.n,) * (i + 1))
    return _scales(i0, i, config.schedule)


def _grouped(config, scale):
    if scale.N is None:
        raise _usage('the schedule has no zoom factor at level %d' % scale.i)
    if scale.N % config.reading_group:
        raise _usage('the reading group %d does not divide the zoom factor %d' % (
            config.reading_group, scale.N))
    return scale


def do_check_witness(config):
    w = formats.parse_witness(_read(config.witness))
    try:
        result = validation.validate_witness(
            w, _scale(config, w.tape.i0, w.tape.i),
            constant=config.size_constant)
    except validation.WitnessRejected as exc:
        print('rejected %s' % exc)
        return 1
    print(' '.join(['valid'] + [str(n) for n in result.demands]))
    return 0


def do_assemble(config):
    children = formats.load_children(config.children)
    if not children:
        raise FormatError('no child witnesses in %s' % config.children)
    levels = {(w.tape.i0, w.tape.i) for w in children.values()}
    if len(levels) != 1:
        raise FormatError('children of mixed levels %r' % sorted(levels))
    scale = _grouped(config, _scale(config, *levels.pop()))
    try:
        tape = assembly.assemble_parent(
            children, scale, distinct=config.distinct,
            group=config.reading_group, constant=config.size_constant)
    except assembly.AssemblyRejected as exc:
        print('rejected %s' % exc)
        return 1
    _write(formats.render_tape(tape))
    return 0


def do_prove(config):
    pattern = _pattern(config.pattern)
    scale = _grouped(config, _scale(config, 0, config.level))
    if pattern.width != scale.parent or pattern.height != scale.parent:
        raise FormatError('the parent window must be %dx%d' % (
            scale.parent, scale.parent))
    inventory = squares.detect_inventory(pattern)
    sea = squares.completions(inventory, pattern.width, pattern.height)
    children = prover.prove_children(
        sea, scale, distinct=config.distinct, group=config.reading_group)
    formats.save_children(config.children, children)
    print('wrote %d children' % len(children))
    return 0


def do_kill(config):
    tape = ParameterTape(0, 0, sizes=sorted(set(config.sizes)))
    verdict = kill.kill_phase(tape, config.sizes_set, config.budget)
    if verdict.killed:
        print('killed %d' % verdict.size)
        return 1
    print('alive')
    return 0


def do_pack(config):
    w = formats.parse_witness(_read(config.witness))
    scale = _scale(config, w.tape.i0, w.tape.i)
    budget = serial.bit_budget(scale, config.s, config.size_constant)
    print('budget %d' % sum(budget.values()))
    for side in SIDES:
        print('%s %s' % (side, serial.pack_macrocolor(
            w.color(side), scale, config.s, config.size_constant)))
    return 0


# plaid ######################################################################

def add_plaid_commands(groups):
    commands = _commands(groups, 'plaid', 'Multiscale stripe labelings')
    for name, func, help in (
            ('build', do_build, 'Print the plaid labeling of a demand grid'),
            ('canonical', do_canonical, 'Print the canonical plaid labeling')):
        cmd = commands.add_parser(name, help=help)
        cmd.add_argument('demands', metavar='DEMANDS')
        cmd.set_defaults(func=func)
    for name, func, help in (
            ('check', do_check_plaid,
             'Check connectivity and the edge budget of a labeling'),
            ('check-canonical', do_check_canonical,
             'Check a labeling against the canonical rules'),
            ('counters', do_counters,
             'Assign breadth-first counters from the first holder of each label')):
        cmd = commands.add_parser(name, help=help)
        cmd.add_argument('demands', metavar='DEMANDS')
        cmd.add_argument('labeling', metavar='LABELING')
        cmd.set_defaults(func=func)


def _demands(config):
    return formats.parse_demands(_read(config.demands))


def _labeling(config):
    return formats.parse_labeling(_read(config.labeling))


def _rejected(exc):
    print('fail(%s) %s' % (exc.rule, exc.subject))
    logging.info('%s', exc)
    return 1


def do_build(config):
    _write(formats.render_labeling(plaid.build_plaid(_demands(config))))
    return 0


def do_canonical(config):
    _write(formats.render_labeling(canonical.canonical_plaid(_demands(config))))
    return 0


def do_check_plaid(config):
    d = _demands(config)
    try:
        plaid.check_labeling(d, _labeling(config), plaid.edge_budget(d))
    except plaid.LabelingRejected as exc:
        return _rejected(exc)
    print('pass')
    return 0


def do_check_canonical(config):
    try:
        canonical.check_canonical(_demands(config), _labeling(config))
    except plaid.LabelingRejected as exc:
        return _rejected(exc)
    print('pass')
    return 0


def do_counters(config):
    d = _demands(config)
    sources = {label: {d.holders(label)[0]} for label in d.labels}
    el = plaid.assign_counters(d, _labeling(config), sources)
    try:
        plaid.verify_counters(d, el, sources)
    except plaid.LabelingRejected as exc:
        return _rejected(exc)
    _write(formats.render_labeling(el))
    return 0


# entropy ####################################################################

def add_entropy_commands(groups):
    commands = _commands(groups, 'entropy', 'Pattern counts and entropy bounds')
    cmd = commands.add_parser(
        'count', help='Count the n x n patterns of a shift for n = 1 .. N')
    cmd.add_argument(
        '--shift', metavar='SHIFT', type=shift, required=True,
        help='hard-square, distinct, n-square, y-shift or s-square:SET')
    cmd.add_argument('--n', metavar='N', type=positive, required=True)
    cmd.add_argument(
        '--margin', metavar='INT', type=natural, default=0,
        help='Count only windows extending by this margin (default: %(default)s)')
    cmd.add_argument('--cap', metavar='INT', type=positive, default=const.SOLVER_CAP)
    cmd.set_defaults(func=do_count)
    cmd = commands.add_parser(
        'transfer',
        help='Estimate the hard square entropy from strips of width 1 .. W')
    cmd.add_argument('--width', metavar='W', type=positive, required=True)
    cmd.set_defaults(func=do_transfer)
    cmd = commands.add_parser(
        'bound', help='Check the pattern counting inequality at one level')
    cmd.add_argument('--level', metavar='INT', type=positive, required=True)
    cmd.add_argument('--alphabet', metavar='INT', type=positive, required=True)
    cmd.add_argument('--sofic', metavar='INT', type=positive, required=True)
    cmd.add_argument('--sea', metavar='INT', type=positive, required=True)
    cmd.add_argument(
        '--schedule', metavar='N,N,...', type=schedule, default=None)
    cmd.set_defaults(func=do_entropy_bound)


def _table(estimate):
    for size, count, h in estimate.rows():
        if estimate.strip:
            print('%d %.6f %.6f' % (size, count, h))
        else:
            print('%d %d %.6f' % (size, count, h))
    if not estimate.decreasing:
        logging.warning('The estimates are not strictly decreasing')


def do_count(config):
    spec = entropy.shift_spec(config.shift, config.margin)
    _table(entropy.entropy_estimate(
        spec, range(1, config.n + 1), config.cap, config.harvest_sizes))
    return 0


def do_transfer(config):
    _table(entropy.strip_entropies(
        range(1, config.width + 1), config.tolerance))
    return 0


def do_entropy_bound(config):
    check = entropy.entropy_bound_check(
        config.level, config.alphabet, config.sofic, config.sea,
        schedule=config.schedule)
    print('%s slack %g' % ('holds' if check.holds else 'violated', check.slack))
    return 0 if check.holds else 1
