# File: scheme_definition_registry.py
# Description: Registry for finite-difference scheme definitions
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from typing import Type
from advection_solver.services.registry import Registry
from advection_solver.schemes.definitions.scheme_definition import SchemeDefinition, SchemeId


class SchemeDefinitionRegistry(Registry[SchemeDefinition]):
    """
    Registry for finite-difference scheme definitions.

    This class maintains a collection of SchemeDefinition objects
    indexed by their config tokens. It inherits from the generic Registry
    class and specifies SchemeDefinition as its entry type.

    USAGE:
        registry = SchemeDefinitionRegistry()
        registry.add_entry("upwind", scheme_def)     # Add a scheme
        scheme = registry.get_entry("upwind")        # Retrieve a scheme
    """

    @classmethod
    def get_entry_type(cls) -> Type[SchemeDefinition]:
        """
        Return SchemeDefinition as the type for this registry.

        :return: SchemeDefinition class
        """
        return SchemeDefinition

    def get_scheme(self, scheme_id: SchemeId) -> SchemeDefinition:
        """
        Retrieve the definition of a scheme by identifier.

        :param scheme_id: SchemeId, the scheme
        :return: SchemeDefinition registered under the scheme's token

        :raises KeyError: If the scheme is not registered.
        """
        return self.get_entry(scheme_id.value)
