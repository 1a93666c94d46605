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
The communication protocol between the macrotiles of the hierarchical
tilings which realize the square shifts. Each macrotile carries a parameter
tape and shows a macrocolor on each side; the modules here define those
records, check them, produce them honestly, and assemble parents from them.

:mod:`seasquares.protocol.records`
    The tape, macrocolor and message records

:mod:`seasquares.protocol.serial`
    Length limits and the bit-level packing of macrocolors

:mod:`seasquares.protocol.validation`
    The checks each macrotile runs on its own witness

:mod:`seasquares.protocol.prover`
    An honest prover writing the witnesses of all children of a parent

:mod:`seasquares.protocol.assembly`
    Assembly of a parent tape from its children

:mod:`seasquares.protocol.kill`
    The final phase forbidding sizes outside the permitted set

:mod:`seasquares.protocol.distinct`
    Recognition of forbidden patterns of the distinct-square shift
"""
