# File: registry.py
# Description: Generic typed registry of exportable entries keyed by config token
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import copy
from abc import ABC, abstractmethod
from typing import Any, Generic, Type, TypeVar

T = TypeVar('T')

_BASIC_TYPES = (dict, list, str, int, float, bool, type(None))


class Registry(Generic[T], ABC):
    """
    Typed mapping from token to entry, kept in insertion order.

    Entries are stored as deep copies and must be exportable: either a basic JSON type or a class
    providing as_dict() and from_dict(). Subclasses fix the entry type:

        class SchemeDefinitionRegistry(Registry[SchemeDefinition]):
            @classmethod
            def get_entry_type(cls) -> Type[SchemeDefinition]:
                return SchemeDefinition
    """

    @classmethod
    @abstractmethod
    def get_entry_type(cls) -> Type[T]:
        """
        :return: the entry type accepted by this registry
        :raises NotImplementedError: If a concrete subclass does not implement this method.
        """
        raise NotImplementedError("Concrete subclasses must implement get_entry_type()")

    @staticmethod
    def _is_type_allowed(entry_type: Any) -> bool:
        """True for a basic JSON type or instance, or a class/instance with as_dict and from_dict."""
        if isinstance(entry_type, type):
            owner = entry_type
            if owner in _BASIC_TYPES:
                return True
        elif isinstance(entry_type, _BASIC_TYPES):
            return True
        else:
            owner = entry_type.__class__
        return callable(getattr(owner, 'as_dict', None)) and callable(getattr(owner, 'from_dict', None))

    def __init__(self) -> None:
        """
        :raises TypeError: If the entry type of the subclass cannot be exported.
        """
        entry_type = self.__class__.get_entry_type()
        if not self._is_type_allowed(entry_type):
            raise TypeError(f"Entry type {entry_type.__name__} is not allowed in Registry "
                            f"{self.__class__.__name__}: it must be a JSON type or provide as_dict/from_dict")

        self._entries: dict[str, T] = {}

    def is_key_present(self, key: str) -> bool:
        return key in self._entries

    def get_entry(self, key: str) -> T:
        """
        :param key: str, the token
        :return: the stored entry
        :raises KeyError: If no entry is registered under the token.
        """
        try:
            return self._entries[key]
        except KeyError:
            raise KeyError(f"Key '{key}' not found in {self.__class__.__name__}; "
                           f"known keys: {', '.join(self._entries) or 'none'}") from None

    def add_entry(self, key: str, entry: T) -> None:
        """
        Store a copy of the entry under the token.

        :param key: str, the token
        :param entry: T, the entry

        :raises KeyError: If the token is already registered.
        :raises TypeError: If the entry is not JSON-serializable and lacks as_dict/from_dict.
        """
        if key in self._entries:
            raise KeyError(f"Key '{key}' already exists in {self.__class__.__name__}")
        if not self._is_type_allowed(entry):
            raise TypeError(f"Entry for '{key}' is not JSON-serializable and does not provide as_dict/from_dict "
                            f"(type {type(entry).__name__})")

        self._entries[key] = copy.deepcopy(entry)

    def list_keys(self) -> list[str]:
        return list(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def as_dict(self) -> dict[str, Any]:
        """
        Export every entry, through its as_dict() when it has one.

        :return: dict mapping token to a JSON-serializable value
        """
        return {key: entry.as_dict() if callable(getattr(entry, 'as_dict', None)) else copy.deepcopy(entry)
                for key, entry in self._entries.items()}
