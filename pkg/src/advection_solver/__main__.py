# File: __main__.py
# Description: Entry point for python -m advection_solver
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import sys

from advection_solver.simulation.cli import main

if __name__ == "__main__":
    sys.exit(main())
