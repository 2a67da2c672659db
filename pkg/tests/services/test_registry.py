# File: test_registry.py
# Description: Unit tests for the generic typed Registry base class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from typing import Any, Dict, Type
import pytest

from advection_solver.services.registry import Registry


class MockSerializableClass:
    """Mock class that supports JSON serialization via as_dict/from_dict."""

    def __init__(self, value: str, order: int = 1):
        self.value = value
        self.order = order

    def as_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "order": self.order}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MockSerializableClass':
        return cls(data["value"], data.get("order", 1))

    def __eq__(self, other):
        return (isinstance(other, MockSerializableClass) and
                self.value == other.value and
                self.order == other.order)


class MockNonSerializableClass:
    """Mock class that does NOT support JSON serialization."""

    def __init__(self, name: str):
        self.name = name


class StringRegistry(Registry[str]):
    @classmethod
    def get_entry_type(cls) -> Type[str]:
        return str


class MockRegistry(Registry[MockSerializableClass]):
    @classmethod
    def get_entry_type(cls) -> Type[MockSerializableClass]:
        return MockSerializableClass


class NonSerializableRegistry(Registry[MockNonSerializableClass]):
    @classmethod
    def get_entry_type(cls) -> Type[MockNonSerializableClass]:
        return MockNonSerializableClass


class TestRegistryAbstractBehavior:
    """Test abstract base class behavior."""

    def test_cannot_instantiate_abstract_registry(self):
        """Registry is abstract and cannot be instantiated directly."""
        with pytest.raises(TypeError, match="Can't instantiate abstract class Registry"):
            Registry()  # type: ignore

    def test_get_entry_type_abstract_method_raises(self):
        """The abstract get_entry_type method raises NotImplementedError when called directly."""
        with pytest.raises(NotImplementedError, match="Concrete subclasses must implement get_entry_type"):
            Registry.get_entry_type()  # type: ignore

    def test_non_serializable_entry_type_rejected(self):
        """A registry over a class without as_dict/from_dict cannot be created."""
        with pytest.raises(TypeError, match="is not allowed in Registry"):
            NonSerializableRegistry()


class TestRegistryBasicOperations:
    """Test add, get, list and clear."""

    def test_add_and_get_entry(self):
        registry = MockRegistry()
        entry = MockSerializableClass("upwind", 1)

        registry.add_entry("upwind", entry)

        assert registry.get_entry("upwind") == entry
        assert registry.is_key_present("upwind")
        assert len(registry) == 1

    def test_add_entry_stores_copy(self):
        """Mutating the original after insertion does not change the stored entry."""
        registry = MockRegistry()
        entry = MockSerializableClass("leapfrog", 2)
        registry.add_entry("leapfrog", entry)

        entry.order = 99

        assert registry.get_entry("leapfrog").order == 2

    def test_add_entry_duplicate_key(self):
        registry = StringRegistry()
        registry.add_entry("ftcs", "centered")

        with pytest.raises(KeyError, match="already exists"):
            registry.add_entry("ftcs", "other")

    def test_add_entry_non_serializable(self):
        registry = StringRegistry()

        with pytest.raises(TypeError, match="not JSON-serializable"):
            registry.add_entry("bad", MockNonSerializableClass("x"))  # type: ignore

    def test_get_entry_missing_key(self):
        registry = StringRegistry()

        with pytest.raises(KeyError, match="not found"):
            registry.get_entry("missing")

    def test_list_keys_insertion_order(self):
        registry = StringRegistry()
        for key in ["upwind", "ftcs", "leapfrog"]:
            registry.add_entry(key, key.upper())

        assert registry.list_keys() == ["upwind", "ftcs", "leapfrog"]


class TestRegistryExport:
    """Test as_dict export."""

    def test_as_dict_uses_entry_as_dict(self):
        registry = MockRegistry()
        registry.add_entry("lax_wendroff", MockSerializableClass("Lax-Wendroff", 2))

        assert registry.as_dict() == {"lax_wendroff": {"value": "Lax-Wendroff", "order": 2}}

    def test_as_dict_basic_types(self):
        registry = StringRegistry()
        registry.add_entry("a", "alpha")

        assert registry.as_dict() == {"a": "alpha"}


class TestTypeValidation:
    """Test the allowed-type check."""

    @pytest.mark.parametrize("entry_type", [dict, list, str, int, float, bool, type(None)])
    def test_basic_types_allowed(self, entry_type):
        assert Registry._is_type_allowed(entry_type)

    def test_instances_allowed(self):
        assert Registry._is_type_allowed("text")
        assert Registry._is_type_allowed(1.5)
        assert Registry._is_type_allowed(MockSerializableClass("x"))

    def test_non_serializable_rejected(self):
        assert not Registry._is_type_allowed(MockNonSerializableClass)
        assert not Registry._is_type_allowed(MockNonSerializableClass("x"))
