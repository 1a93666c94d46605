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
A set of utility routines for manipulating spans of cells along one axis.
Spans are represented as :class:`range` objects with a step of 1; squares
use them to test their extent against a window.

.. autofunction:: intersect

.. autofunction:: covers
"""


def intersect(span1, span2):
    """
    Returns the span formed by the intersection of *span1* and *span2*, or
    ``None`` if they do not overlap::

        >>> intersect(range(10), range(5))
        range(0, 5)
        >>> intersect(range(10), range(10, 12))
        >>> intersect(range(-3, 4), range(2, 9))
        range(2, 4)
    """
    assert span1.step == 1
    assert span2.step == 1
    r = range(max(span1.start, span2.start), min(span1.stop, span2.stop))
    if r:
        return r


def covers(span, inner):
    """
    Returns ``True`` if every cell of *inner* lies within *span*::

        >>> covers(range(10), range(2, 5))
        True
        >>> covers(range(3, 10), range(2, 5))
        False
    """
    return span.start <= inner.start and inner.stop <= span.stop
