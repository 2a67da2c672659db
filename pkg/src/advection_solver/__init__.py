# File: __init__.py
# Description: Initialization file for the advection_solver package.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

__version__ = "0.1.0"
