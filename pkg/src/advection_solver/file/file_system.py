# File: file_system.py
# Description: File system operations for configuration input and run output.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import os

from advection_solver.errors import IoError


class FileSystem:
    """
    File system operations
    """

    @staticmethod
    def is_file(file_path: str) -> bool:
        """
        Determine if the given path corresponds to an existing file.

        :param file_path: str, path to the file
        :return: bool, True if the path corresponds to a file, False otherwise.
                 If the object is found but does not correspond to a file, False is also returned.
        """

        is_file_found = os.path.isfile(file_path)
        return is_file_found

    @staticmethod
    def is_directory(directory_path: str) -> bool:
        """
        Determine if the given path corresponds to an existing directory.

        :param directory_path: str, path to the directory
        :return: bool, True if the path corresponds to an existing directory, False otherwise.
        """

        is_directory_found = os.path.isdir(directory_path)
        return is_directory_found

    @staticmethod
    def ensure_directory(directory_path: str) -> None:
        """
        Create a directory, including missing parents, unless it already exists.

        :param directory_path: str, path to the directory

        :raises IoError: If the path exists but is not a directory, or the directory could not be created.
        """

        if FileSystem.is_directory(directory_path):
            return

        if os.path.exists(directory_path):
            raise IoError("path exists and is not a directory", directory_path)

        try:
            os.makedirs(directory_path, exist_ok=True)
        except OSError as exception_msg:
            raise IoError(f"could not create directory ({exception_msg})", directory_path)

    @staticmethod
    def read_text_file(file_path: str) -> str:
        """
        Read a UTF-8 text file.

        :param file_path: str, path to the file
        :return: str, the file contents

        :raises IoError: If the file is not found or cannot be read.
        """

        if not FileSystem.is_file(file_path):
            raise IoError("file not found", file_path)

        try:
            with open(file_path, 'r', encoding='utf-8') as file_handle:
                return file_handle.read()
        except (OSError, UnicodeDecodeError) as exception_msg:
            raise IoError(f"could not read file ({exception_msg})", file_path)

    @staticmethod
    def write_text_file(file_path: str, content: str) -> None:
        """
        Write a UTF-8 text file with '\\n' line endings on every platform.

        :param file_path: str, path to the file
        :param content: str, the content to write

        :raises IoError: If the file cannot be written.
        """

        try:
            with open(file_path, 'w', encoding='utf-8', newline='\n') as file_handle:
                file_handle.write(content)
        except OSError as exception_msg:
            raise IoError(f"could not write file ({exception_msg})", file_path)

    @staticmethod
    def remove_file(file_path: str) -> None:
        """
        Remove a file.

        :param file_path: str, path to the file

        :raises IoError: If the file is not found or cannot be removed.
        """

        if not FileSystem.is_file(file_path):
            raise IoError("file not found", file_path)

        try:
            os.remove(file_path)
        except OSError as exception_msg:
            raise IoError(f"could not remove file ({exception_msg})", file_path)

    @staticmethod
    def list_files(directory_path: str) -> list[str]:
        """
        List the filenames in a directory, sorted.

        :param directory_path: str, path to the directory
        :return: list of str, filenames relative to the directory

        :raises IoError: If the directory is not found.
        """

        if not FileSystem.is_directory(directory_path):
            raise IoError("directory not found", directory_path)

        filename_list = sorted(f for f in os.listdir(directory_path)
                               if FileSystem.is_file(os.path.join(directory_path, f)))
        return filename_list
