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
This module defines the default configuration for the seasquares suite.
Configuration can be overridden via configuration files or the command line.
"""

# Pattern alphabets; index 0 is always the background symbol
BINARY_ALPHABET = '.#'
Y_ALPHABET = '.^v<>abcdABCDo'

# Forbidden 2x2 harvest for the directed square shift
HARVEST_SIZES = (10, 12)
HARVEST_MAX_SIDE = 12
HARVEST_PAIR_MAX_SIDE = 3

# Scale hierarchy
MAX_LEVEL = 4
BOUNDARY_CONSTANT = 4

# Finite region solver and simulation checks
SOLVER_CAP = 100000
SIMULATION_BUDGET = 20000
EXTENSION_CAP = 1

# Witness protocol
SIZE_LIST_CONSTANT = 8
READING_GROUP = 2
KILL_BUDGET = 1000

# Plaid labelings
PLAID_BASE_SIDE = 4
PLAID_LABELS_PER_LIST = 2
PLAID_SUBGRID_CONSTANT = 2

# Entropy workbench
POWER_TOLERANCE = 1e-10
POWER_ITERATIONS = 100000

SEED = 0
