# File: test_file_system.py
# Description: Unit tests for the FileSystem class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import os
import pytest
from advection_solver.errors import IoError
from advection_solver.file.file_system import FileSystem


def test_is_file(file_test_fixtures_directory):
    """
    Test the is_file method
    """

    # test case: path is a file
    file_path = 'txt/text_file.txt'
    relative_file = os.path.join(file_test_fixtures_directory, file_path)
    assert FileSystem.is_file(relative_file)

    # test case: path is a directory
    dir_path = file_test_fixtures_directory
    assert not FileSystem.is_file(dir_path)

    # test case: path not found
    file_path = 'this_is_not_a_file'
    assert not FileSystem.is_file(file_path)

def test_is_directory(file_test_fixtures_directory):
    """
    Test the is_directory method
    """

    # test case: path is a directory
    dir_path = file_test_fixtures_directory
    assert FileSystem.is_directory(dir_path)

    # test case: path is a file
    file_path = 'txt/text_file.txt'
    relative_file = os.path.join(file_test_fixtures_directory, file_path)
    assert not FileSystem.is_directory(relative_file)

    # test case: directory not found
    dir_path = 'this_is_not_a_file'
    assert not FileSystem.is_directory(dir_path)

def test_read_text_file(file_test_fixtures_directory):
    """
    Test the read_text_file method
    """

    # test cases: file, expected_content
    test_data = [
        ['txt/text_file.txt', 'text file'],
        ['top_level_text_file.txt', 'alpha=1\n'],
    ]

    for file, expected_content in test_data:
        full_path = os.path.join(file_test_fixtures_directory, file)
        assert FileSystem.read_text_file(full_path) == expected_content

def test_read_text_file_raise_not_found(file_test_fixtures_directory):
    """
    Test the read_text_file method when the file is not found or the path directs to a non-file
    """

    # test case: directory
    with pytest.raises(IoError) as exc_info:
        FileSystem.read_text_file(file_test_fixtures_directory)
    assert exc_info.value.path == file_test_fixtures_directory

    # test case: file not found
    with pytest.raises(IoError):
        FileSystem.read_text_file('this_is_not_a_file')

def test_read_text_file_oserror(mocker):
    """
    Test the read_text_file method when opening the file fails.
    """

    mocker.patch('advection_solver.file.file_system.FileSystem.is_file', return_value=True)
    mocker.patch('builtins.open', side_effect=OSError("permission denied"))

    with pytest.raises(IoError, match="permission denied"):
        FileSystem.read_text_file('/path/to/file.cfg')

def test_write_text_file(tmp_path):
    """
    Test the write_text_file method writes '\\n' line endings.
    """

    file_path = str(tmp_path / 'out.csv')
    FileSystem.write_text_file(file_path, "x,phi\n0,1\n")

    with open(file_path, 'rb') as file_handle:
        assert file_handle.read() == b"x,phi\n0,1\n"

def test_write_text_file_oserror(mocker):
    """
    Test the write_text_file method when the file cannot be written.
    """

    mocker.patch('builtins.open', side_effect=OSError("disk full"))

    with pytest.raises(IoError, match="disk full"):
        FileSystem.write_text_file('/path/to/out.csv', "content")

def test_ensure_directory_creates_parents(tmp_path):
    """
    Test the ensure_directory method creates missing parents and accepts an existing directory.
    """

    dir_path = str(tmp_path / 'a' / 'b')
    FileSystem.ensure_directory(dir_path)
    assert FileSystem.is_directory(dir_path)

    # test case: already exists
    FileSystem.ensure_directory(dir_path)
    assert FileSystem.is_directory(dir_path)

def test_ensure_directory_path_is_file(tmp_path):
    """
    Test the ensure_directory method when the path is an existing file.
    """

    file_path = tmp_path / 'occupied'
    file_path.write_text("x")

    with pytest.raises(IoError, match="not a directory"):
        FileSystem.ensure_directory(str(file_path))

def test_ensure_directory_oserror(mocker):
    """
    Test the ensure_directory method when the directory creation was not successful.
    """

    mock_is_directory = mocker.patch('advection_solver.file.file_system.FileSystem.is_directory', return_value=False)
    mocker.patch('os.path.exists', return_value=False)
    mock_makedirs = mocker.patch('os.makedirs', side_effect=OSError("Error creating directory"))
    directory_path = '/path/to/directory'

    with pytest.raises(IoError):
        FileSystem.ensure_directory(directory_path)

    mock_is_directory.assert_called_once_with(directory_path)
    mock_makedirs.assert_called_once_with(directory_path, exist_ok=True)

def test_remove_file(tmp_path):
    """
    Test the remove_file method
    """

    file_path = tmp_path / 'snap_000000.csv'
    file_path.write_text("x,phi\n")

    FileSystem.remove_file(str(file_path))
    assert not FileSystem.is_file(str(file_path))

    # test case: file not found
    with pytest.raises(IoError):
        FileSystem.remove_file(str(file_path))

def test_remove_file_oserror(mocker):
    """
    Test the remove_file method when there is an error removing the file.
    """

    mocker.patch('advection_solver.file.file_system.FileSystem.is_file', return_value=True)
    mock_remove = mocker.patch('os.remove', side_effect=OSError("Error removing file"))

    with pytest.raises(IoError):
        FileSystem.remove_file('/path/to/file')

    mock_remove.assert_called_once_with('/path/to/file')

def test_list_files(file_test_fixtures_directory):
    """
    Test the list_files method returns sorted top-level filenames only.
    """

    filename_list = FileSystem.list_files(file_test_fixtures_directory)
    filtered_filename_list = [fn for fn in filename_list if '.DS_Store' not in fn]
    assert filtered_filename_list == ['top_level_text_file.txt']

    filename_list = FileSystem.list_files(os.path.join(file_test_fixtures_directory, 'txt'))
    assert filename_list == ['text_file.txt']

def test_list_files_raise_directory_not_found(file_test_fixtures_directory):
    """
    Test the list_files method when the directory is not found
    """

    # test case: path is a file
    relative_file = os.path.join(file_test_fixtures_directory, 'txt/text_file.txt')
    with pytest.raises(IoError):
        FileSystem.list_files(relative_file)

    # test case: directory not found
    with pytest.raises(IoError):
        FileSystem.list_files('this_is_not_a_file')
