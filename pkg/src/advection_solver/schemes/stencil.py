# File: stencil.py
# Description: Vectorized three-point stencils of the explicit schemes
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from typing import NamedTuple

import numpy as np


class StencilNeighbors(NamedTuple):
    """Left, center and right values for every grid point."""
    left: np.ndarray
    center: np.ndarray
    right: np.ndarray


class Stencil:
    """
    Stencil arithmetic for phi_t + s*zeta*phi_x = 0.

    Every method takes the signed Courant numbers c_i = s*nu_i per point and returns the new
    values at all nx + 1 points; the endpoints are fixed up afterwards by the boundary policy.
    Upwind, Lax-Friedrichs and Lax-Wendroff are written relative to the upwind neighbor, so a
    constant field is an exact fixed point and c = +-1 reduces to an exact copy.
    """

    @staticmethod
    def neighbors(values: np.ndarray, periodic: bool) -> StencilNeighbors:
        """
        Gather stencil neighbors.

        :param values: np.ndarray, the nx + 1 values
        :param periodic: bool, wrap modulo nx when True; otherwise a missing neighbor is the point itself
        :return: StencilNeighbors
        """
        nx = values.shape[0] - 1
        index = np.arange(nx + 1)

        if periodic:
            left_index = (index - 1) % nx
            right_index = (index + 1) % nx
        else:
            left_index = np.maximum(index - 1, 0)
            right_index = np.minimum(index + 1, nx)

        return StencilNeighbors(values[left_index], values, values[right_index])

    @staticmethod
    def _upwind_anchor(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        return np.where(courant > 0, neighbors.left,
                        np.where(courant < 0, neighbors.right, neighbors.center))

    @staticmethod
    def ftcs_centered(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        """new_i = phi_i - c_i*(phi_{i+1} - phi_{i-1})/2"""
        with np.errstate(all='ignore'):
            return neighbors.center - courant * (neighbors.right - neighbors.left) / 2

    @staticmethod
    def forward_biased(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        """new_i = phi_i - c_i*(phi_{i+1} - phi_i)"""
        with np.errstate(all='ignore'):
            return neighbors.center - courant * (neighbors.right - neighbors.center)

    @staticmethod
    def upwind(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        """Backward difference where c_i > 0, forward difference where c_i < 0, identity where c_i = 0."""
        anchor = Stencil._upwind_anchor(neighbors, courant)
        with np.errstate(all='ignore'):
            return anchor + (1 - np.abs(courant)) * (neighbors.center - anchor)

    @staticmethod
    def lax_friedrichs(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        """new_i = (phi_{i+1} + phi_{i-1})/2 - c_i*(phi_{i+1} - phi_{i-1})/2"""
        anchor = np.where(courant < 0, neighbors.right, neighbors.left)
        with np.errstate(all='ignore'):
            left_weight = (1 + courant) / 2
            right_weight = (1 - courant) / 2
            return anchor + left_weight * (neighbors.left - anchor) + right_weight * (neighbors.right - anchor)

    @staticmethod
    def lax_wendroff(neighbors: StencilNeighbors, courant: np.ndarray) -> np.ndarray:
        """new_i = phi_i - c_i*(phi_{i+1} - phi_{i-1})/2 + c_i^2*(phi_{i+1} - 2*phi_i + phi_{i-1})/2"""
        anchor = Stencil._upwind_anchor(neighbors, courant)
        with np.errstate(all='ignore'):
            squared = courant * courant
            left_weight = (squared + courant) / 2
            center_weight = 1 - squared
            right_weight = (squared - courant) / 2
            return (anchor + left_weight * (neighbors.left - anchor)
                    + center_weight * (neighbors.center - anchor)
                    + right_weight * (neighbors.right - anchor))

    @staticmethod
    def leapfrog(neighbors: StencilNeighbors, previous: np.ndarray, courant: np.ndarray) -> np.ndarray:
        """new_i = prev_i - c_i*(phi_{i+1} - phi_{i-1})"""
        with np.errstate(all='ignore'):
            return previous - courant * (neighbors.right - neighbors.left)
