# File: register_scheme_definitions.py
# Description: Register finite-difference scheme definitions
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from advection_solver.schemes.definitions.scheme_definition import SchemeDefinition, SchemeId
from advection_solver.schemes.definitions.scheme_definition_registry import SchemeDefinitionRegistry


def register_one_level_schemes(registry: SchemeDefinitionRegistry) -> None:
    """
    Register the schemes that advance from the current time level alone.

    :param registry: SchemeDefinitionRegistry, the registry to populate
    """

    def add_scheme(scheme_id: SchemeId, name: str, order: int, stencil: str, stability: str,
                   description: str, references: list) -> None:
        registry.add_entry(scheme_id.value, SchemeDefinition(
            scheme_id=scheme_id, name=name, time_levels=1, order_of_accuracy=order,
            stencil=stencil, stability=stability, description=description, references=references
        ))

    add_scheme(SchemeId.FTCS_CENTERED, 'FTCS centered', 1,
               'new_i = phi_i - c_i*(phi_{i+1} - phi_{i-1})/2',
               'unstable for every nu != 0',
               'Forward difference in time with a centered difference in space. With sign convention '
               '"paper" it reproduces the three-point scenarios under configs/.',
               [{'ref_id': 'strikwerda_2004', 'sections': '1.3, 2.2'}])
    add_scheme(SchemeId.FORWARD_BIASED, 'Forward biased', 1,
               'new_i = phi_i - c_i*(phi_{i+1} - phi_i)',
               '-1 <= c <= 0',
               'Forward difference in time and space. With sign convention "paper" and nu >= 0 '
               'it is the upwind scheme for leftward transport.',
               [{'ref_id': 'strikwerda_2004', 'sections': '1.3'}])
    add_scheme(SchemeId.UPWIND, 'Upwind', 1,
               'new_i = phi_i - c_i*(phi_i - phi_{i-1}) if c_i > 0; phi_i - c_i*(phi_{i+1} - phi_i) if c_i < 0',
               '|nu| <= 1',
               'One-sided difference taken from the direction the flow arrives from; identity where zeta = 0.',
               [{'ref_id': 'courant_isaacson_rees_1952', 'sections': ''},
                {'ref_id': 'leveque_2002', 'sections': ''}])
    add_scheme(SchemeId.LAX_FRIEDRICHS, 'Lax-Friedrichs', 1,
               'new_i = (phi_{i+1} + phi_{i-1})/2 - c_i*(phi_{i+1} - phi_{i-1})/2',
               '|nu| <= 1',
               'Centered difference about the average of the neighbors; nu = 0 still averages.',
               [{'ref_id': 'lax_1954', 'sections': ''},
                {'ref_id': 'strikwerda_2004', 'sections': '1.3'}])
    add_scheme(SchemeId.LAX_WENDROFF, 'Lax-Wendroff', 2,
               'new_i = phi_i - c_i*(phi_{i+1} - phi_{i-1})/2 + c_i^2*(phi_{i+1} - 2*phi_i + phi_{i-1})/2',
               '|nu| <= 1',
               'Second-order scheme from the Taylor expansion of the solution in time.',
               [{'ref_id': 'lax_wendroff_1960', 'sections': ''},
                {'ref_id': 'strikwerda_2004', 'sections': '3.1'}])


def register_two_level_schemes(registry: SchemeDefinitionRegistry) -> None:
    """
    Register the schemes that read the previous time level too.

    :param registry: SchemeDefinitionRegistry, the registry to populate
    """

    registry.add_entry(SchemeId.LEAPFROG.value, SchemeDefinition(
        scheme_id=SchemeId.LEAPFROG, name='Leapfrog', time_levels=2, order_of_accuracy=2,
        stencil='new_i = prev_i - c_i*(phi_{i+1} - phi_{i-1})',
        stability='|nu| < 1',
        description='Centered in time and space. The first step is taken with the upwind scheme.',
        references=[{'ref_id': 'strikwerda_2004', 'sections': '1.3, 4.1'}]
    ))


def build_scheme_registry() -> SchemeDefinitionRegistry:
    """
    Create a registry populated with every supported scheme.

    :return: SchemeDefinitionRegistry keyed by config token
    """
    registry = SchemeDefinitionRegistry()
    register_one_level_schemes(registry)
    register_two_level_schemes(registry)
    return registry
