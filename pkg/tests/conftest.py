# File: conftest.py
# Description: Shared fixtures locating the per-area fixture directories.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import os
import pytest


def _fixtures_directory(area: str) -> str:
    """
    Find the 'tests' directory in the path hierarchy and return the path to its '<area>/fixtures' subdirectory.
    """
    path = os.path.abspath(os.path.dirname(__file__))
    while True:
        if os.path.basename(path) == "tests":
            return os.path.join(path, area, "fixtures")
        new_path = os.path.dirname(path)
        if new_path == path:
            raise RuntimeError("Could not find 'tests' directory in path hierarchy.")
        path = new_path


@pytest.fixture(scope="session")
def file_test_fixtures_directory():
    return _fixtures_directory("file")


@pytest.fixture(scope="session")
def simulation_configs_directory():
    return os.path.join(_fixtures_directory("simulation"), "configs")
