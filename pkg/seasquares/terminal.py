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
Common plumbing for the :program:`seasq` command line: the argument parser
(backed by :mod:`configargparse` so that every default may also come from a
configuration file), console and file logging, and the global exception hook
that turns failures into exit codes.

.. autoclass:: ArgParser

.. autofunction:: configure_parser

.. autofunction:: configure_logging

.. autoclass:: ErrorHandler
"""

import sys
import locale
import logging
import traceback
from collections import OrderedDict, namedtuple

import configargparse

from . import __version__, const


# Use the user's default locale instead of C
locale.setlocale(locale.LC_ALL, '')

# Messages logged before configure_logging is called still need to reach the
# user; this bare handler is re-formatted once the configuration is known
_CONSOLE = logging.StreamHandler(sys.stderr)
_CONSOLE.setFormatter(logging.Formatter('%(message)s'))
_CONSOLE.setLevel(logging.DEBUG)
logging.getLogger().addHandler(_CONSOLE)


class ArgParser(configargparse.ArgParser):
    """
    Overrides the default ArgParser to raise an exception on usage errors so
    that :data:`error_handler` can report them with exit code 2.
    """
    # pylint: disable=method-hidden
    def error(self, message):
        raise configargparse.ArgumentError(None, message)


class WidthFormatter(logging.Formatter):
    """
    A log formatter which truncates messages longer than *maxwidth*
    characters, appending *ellipsis* to show the cut.
    """
    def __init__(self, fmt=None, datefmt=None, style='%', maxwidth=120,
                 ellipsis='...'):
        super().__init__(fmt, datefmt, style)
        self.maxwidth = maxwidth
        self.ellipsis = ellipsis

    def formatMessage(self, record):
        s = super().formatMessage(record)
        if len(s) > self.maxwidth:
            s = s[:self.maxwidth - len(self.ellipsis)] + self.ellipsis
        return s


def configure_parser(description, log_params=True):
    """
    Construct an argument parser with the options common to every
    :program:`seasq` invocation and return it. The global ``--seed`` and
    ``--format`` options are always present; the logging options only when
    *log_params* is true.
    """
    parser = ArgParser(
        description=description,
        add_config_file_help=False,
        add_env_var_help=False,
        default_config_files=[
            '/etc/seasquares.conf',
            '/usr/local/etc/seasquares.conf',
            '~/.config/seasquares/seasquares.conf'
        ],
        ignore_unknown_config_file_keys=True
    )
    parser.add_argument(
        '--version', action='version', version=__version__)
    parser.add_argument(
        '-c', '--configuration', metavar='FILE', default=None,
        is_config_file=True, help='Specify a configuration file to load')
    parser.add_argument(
        '--seed', metavar='INT', type=int, default=const.SEED,
        help='The seed used by randomized generators (default: %(default)s)')
    parser.add_argument(
        '--format', metavar='FMT', choices=('text',), default='text',
        help='The output format; only "text" is supported')
    if log_params:
        parser.set_defaults(log_level=logging.WARNING)
        parser.add_argument(
            '-q', '--quiet', dest='log_level', action='store_const',
            const=logging.ERROR, help='Produce less console output')
        parser.add_argument(
            '-v', '--verbose', dest='log_level', action='store_const',
            const=logging.INFO, help='Produce more console output')
        parser.add_argument(
            '-l', '--log-file', metavar='FILE',
            help='Log messages to the specified file')
    return parser


def configure_logging(log_level, log_filename=None, console_name=False):
    """
    Configures handlers for logging to the console and any specified log file.
    """
    _CONSOLE.setLevel(log_level)
    _CONSOLE.setFormatter(WidthFormatter(
        '%(name)s: %(message)s' if console_name else '%(message)s'))
    if log_filename is not None:
        log_file = logging.FileHandler(log_filename)
        log_file.setFormatter(WidthFormatter(
            '%(asctime)s %(name)s %(levelname)s: %(message)s'))
        log_file.setLevel(min(logging.INFO, log_level))
        logging.getLogger().addHandler(log_file)
    logging.getLogger().setLevel(min(logging.INFO, log_level))


class ErrorAction(namedtuple('ErrorAction', ('message', 'exitcode'))):
    """
    What :class:`ErrorHandler` does with an exception class: *message* yields
    the lines logged as critical errors (or is :data:`None` for silence) and
    *exitcode* is the status the process exits with. Either may instead be a
    callable taking the exception info (type, value, traceback).
    """


class ErrorHandler:
    """
    Global configurable exception handler. Expected failures (usage errors,
    missing files, rejected witnesses, malformed patterns) print only their
    message; anything else is logged with a full stack trace and exits with 1.

    The handler behaves as a dictionary mapping exception classes to
    :class:`ErrorAction` tuples; the first matching class in insertion order
    wins.
    """
    def __init__(self):
        self._config = OrderedDict()
        self[SystemExit] = (None, self.exc_value)
        self[KeyboardInterrupt] = (None, 2)
        self[IOError] = (self.exc_message, 1)
        self[configargparse.ArgumentError] = (self.usage_message, 2)

    @staticmethod
    def exc_message(exc_type, exc_value, exc_tb):
        return [exc_value]

    @staticmethod
    def exc_value(exc_type, exc_value, exc_tb):
        return exc_value

    @staticmethod
    def usage_message(exc_type, exc_value, exc_tb):
        return [exc_value, 'Try the --help option for more information.']

    def expect(self, *exc_classes, exitcode=1):
        """
        Report each of *exc_classes* by its message alone, exiting with
        *exitcode*.
        """
        for exc_class in exc_classes:
            self[exc_class] = (self.exc_message, exitcode)

    def __len__(self):
        return len(self._config)

    def __contains__(self, key):
        return key in self._config

    def __getitem__(self, key):
        return self._config[key]

    def __setitem__(self, key, value):
        self._config[key] = ErrorAction(*value)

    def __delitem__(self, key):
        del self._config[key]

    def _action(self, exc_type):
        for exc_class, action in self._config.items():
            if issubclass(exc_type, exc_class):
                return action
        return None

    def __call__(self, exc_type, exc_value, exc_tb):
        action = self._action(exc_type)
        if action is None:
            lines = traceback.format_exception(exc_type, exc_value, exc_tb)
            for msg in ''.join(lines).rstrip().split('\n'):
                logging.critical(msg.replace('%', '%%'))
            return 1
        message, exitcode = action
        if callable(message):
            message = message(exc_type, exc_value, exc_tb)
        if callable(exitcode):
            exitcode = exitcode(exc_type, exc_value, exc_tb)
        for line in message or ():
            logging.critical(line)
        return exitcode

error_handler = ErrorHandler()
