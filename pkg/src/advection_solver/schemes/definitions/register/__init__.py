# File: __init__.py
# Description: Initialization file for the advection_solver.schemes.definitions.register package.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.
