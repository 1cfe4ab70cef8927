# SPDX-License-Identifier: MIT
"""Command-line interface for tipgm.

Example:
    $ tipgm classify -p 5 -q 5 --theta 11
    $ tipgm verify -p 3 -q 3 -k 3 --theta -2 --z 64,-125
    $ tipgm padic exp -p 5 5 --precision 3
"""

__version__ = "0.1.0"
