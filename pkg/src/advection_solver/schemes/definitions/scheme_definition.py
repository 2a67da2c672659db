# File: scheme_definition.py
# Description: Definition class for finite-difference schemes
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import copy
from typing import Dict, List, Optional, Any
from enum import Enum


class SchemeId(Enum):
    """
    Enumeration for the explicit finite-difference schemes. Values are the config tokens.
    """
    FTCS_CENTERED = 'ftcs'                      # Forward time, centered space (three points, one level)
    FORWARD_BIASED = 'forward'                  # Forward time, forward space (two points, one level)
    UPWIND = 'upwind'                           # One-sided difference from the side the flow arrives from
    LAX_FRIEDRICHS = 'lax_friedrichs'           # Centered difference about the neighbor average
    LAX_WENDROFF = 'lax_wendroff'               # Second-order Taylor expansion in time
    LEAPFROG = 'leapfrog'                       # Centered in time and space (two levels)


class SchemeDefinition:
    """
    Class representing a finite-difference scheme definition.

    This class stores information about a scheme in a single dictionary.
    """

    def __init__(self,
                 scheme_id: Optional[SchemeId] = None,
                 name: Optional[str] = None,
                 time_levels: Optional[int] = None,
                 order_of_accuracy: Optional[int] = None,
                 stencil: Optional[str] = None,
                 stability: Optional[str] = None,
                 description: Optional[str] = None,
                 references: Optional[List[Dict[str, str]]] = None) -> None:
        """
        Initialize a SchemeDefinition object.

        When no parameters are provided, initializes with default values.
        When any parameter is provided, all parameters must be provided.

        :param scheme_id: SchemeId, identifier of the scheme (e.g. SchemeId.UPWIND)
        :param name: str, display name (e.g. 'Lax-Wendroff')
        :param time_levels: int, number of known time levels the update reads (1 or 2)
        :param order_of_accuracy: int, formal order of accuracy in space and time
        :param stencil: str, update formula for phi_t + s*zeta*phi_x = 0 with c = s*nu
        :param stability: str, stability condition for constant zeta
        :param description: str, description of the scheme's behavior
        :param references: List[Dict[str, str]], list of references with keys 'ref_id' and 'sections'

        :raises ValueError: If only some parameters are provided (not all or none).
        """

        self._scheme_definition: Dict[str, Any] = {}

        non_default_params = [scheme_id, name, time_levels, order_of_accuracy, stencil, stability,
                              description, references]

        is_all_parameters_none = all(param is None for param in non_default_params)
        is_all_parameters_nontrivial = all(param is not None for param in non_default_params)

        if not (is_all_parameters_none or is_all_parameters_nontrivial):
            raise ValueError("Either all parameters must be None, or all must be provided (not None).")

        if is_all_parameters_nontrivial:
            if time_levels not in (1, 2):
                raise ValueError(f"time_levels must be 1 or 2, got {time_levels}")
            self._scheme_definition['scheme_id'] = scheme_id
            self._scheme_definition['name'] = name
            self._scheme_definition['time_levels'] = time_levels
            self._scheme_definition['order_of_accuracy'] = order_of_accuracy
            self._scheme_definition['stencil'] = stencil
            self._scheme_definition['stability'] = stability
            self._scheme_definition['description'] = description
            self._scheme_definition['references'] = references
        else:
            self._set_defaults()

    def _set_defaults(self) -> None:
        """
        Set default values for all fields in the scheme definition.
        """
        self._scheme_definition = {
            'scheme_id': None,
            'name': "",
            'time_levels': 1,
            'order_of_accuracy': 0,
            'stencil': "",
            'stability': "",
            'description': "",
            'references': []
        }

    @property
    def scheme_id(self) -> Optional[SchemeId]:
        return self._scheme_definition['scheme_id']

    @property
    def token(self) -> str:
        scheme_id = self._scheme_definition['scheme_id']
        return scheme_id.value if scheme_id is not None else ""

    @property
    def name(self) -> str:
        return self._scheme_definition['name']

    @property
    def time_levels(self) -> int:
        return self._scheme_definition['time_levels']

    @property
    def order_of_accuracy(self) -> int:
        return self._scheme_definition['order_of_accuracy']

    def as_dict(self) -> Dict[str, Any]:
        """
        Convert this SchemeDefinition to a dictionary for JSON serialization.

        :return: Dictionary representation of the scheme definition
        """

        return {
            'token': self.token,
            'name': self._scheme_definition['name'],
            'time_levels': self._scheme_definition['time_levels'],
            'order_of_accuracy': self._scheme_definition['order_of_accuracy'],
            'stencil': self._scheme_definition['stencil'],
            'stability': self._scheme_definition['stability'],
            'description': self._scheme_definition['description'],
            'references': copy.deepcopy(self._scheme_definition['references']),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SchemeDefinition':
        """
        Create a SchemeDefinition from a dictionary (deserialization from JSON).

        :param data: dict[str, Any], dictionary with scheme definition data
            The dictionary does not contain the SchemeId enum but its token.
        :return: SchemeDefinition, a new SchemeDefinition instance

        :raises ValueError: If required fields are missing in the input dictionary.
        :raises ValueError: If the token is not a valid SchemeId value.
        """

        required_fields = ['token', 'name', 'time_levels', 'order_of_accuracy', 'stencil', 'stability',
                           'description', 'references']
        if not all(field in data for field in required_fields):
            raise ValueError("Input dictionary is missing required fields for SchemeDefinition.")

        try:
            scheme_id = SchemeId(data['token'])
        except ValueError:
            raise ValueError(f"Invalid token value: {data['token']}")  # not a valid enum value

        return cls(
            scheme_id=scheme_id,
            name=data['name'],
            time_levels=data['time_levels'],
            order_of_accuracy=data['order_of_accuracy'],
            stencil=data['stencil'],
            stability=data['stability'],
            description=data['description'],
            references=copy.deepcopy(data['references'])
        )
