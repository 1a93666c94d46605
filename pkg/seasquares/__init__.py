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
The seasquares project provides a set of tools for experimenting with the
constructions that show square shifts (seas of squares whose side lengths are
drawn from a set *S*, or are pairwise distinct) to be sofic. Everything is
worked at desk scale, on finite windows, and checked against brute force
oracles. The single ``seasq`` script exposes the following command groups:

* ``seasq squares`` - inventories of seas of squares, counting bounds and the
  scale arithmetic of the hierarchy.

* ``seasq y`` - the shift of directed nested squares, its forbidden 2x2 blocks
  and the letter-to-letter map onto binary seas.

* ``seasq wang`` - Wang tilesets, a finite region solver and the zoom
  simulation checker.

* ``seasq tm`` - compilation of multi-tape Turing machines into tilesets whose
  anchored tilings are space-time diagrams.

* ``seasq layout`` - the anatomy of a macrotile: location parts, wire routing
  and the computation region.

* ``seasq protocol`` - validation of macrotile witnesses, parent assembly,
  forbidden size killing and the distinct-square pattern matcher.

* ``seasq plaid`` - multiscale stripe labelings of grid graphs, counters and
  the canonical plaid.

* ``seasq entropy`` - pattern counts, hard square transfer matrices and the
  counting inequality.
"""

# Stop pylint's crusade against nicely aligned code
# pylint: disable=bad-whitespace

__project__      = 'seasquares'
__version__      = '0.3'
__keywords__     = ['tiling', 'wang', 'subshift', 'sofic', 'symbolic-dynamics']
__author__       = 'The seasquares developers'
__author_email__ = 'seasquares@users.noreply.github.com'
__url__          = 'https://github.com/seasquares/seasquares'
__platforms__    = 'ALL'

__requires__ = ['configargparse', 'voluptuous', 'numpy', 'networkx']

__extra_requires__ = {
    'test': ['pytest', 'coverage', 'hypothesis'],
    'doc':  ['sphinx'],
}

__classifiers__ = [
    'Development Status :: 4 - Beta',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Operating System :: POSIX',
    'Operating System :: Unix',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
]

__entry_points__ = {
    'console_scripts': [
        'seasq = seasquares.cli:main',
    ],
}
