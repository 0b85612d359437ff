"""Shutter-release matter wave: densities, phase-space and tomographic views."""

from ._core import (
    DomainError,
    QuadratureError,
    canonical_map,
    chi_closed,
    chi_oracle,
    classical_concentration,
    erfc_complex,
    frame_from_angles,
    fresnel,
    m_amplitude,
    m_density,
    m_via_propagator,
    rho_of,
    sinc,
    tomogram_closed,
    tomogram_from_chi,
    verify,
    w_of,
    wigner_cgs,
    wigner_closed,
    wigner_marginal,
    wigner_oracle,
)

__all__ = [
    "DomainError",
    "QuadratureError",
    "canonical_map",
    "chi_closed",
    "chi_oracle",
    "classical_concentration",
    "erfc_complex",
    "frame_from_angles",
    "fresnel",
    "m_amplitude",
    "m_density",
    "m_via_propagator",
    "rho_of",
    "sinc",
    "tomogram_closed",
    "tomogram_from_chi",
    "verify",
    "w_of",
    "wigner_cgs",
    "wigner_closed",
    "wigner_marginal",
    "wigner_oracle",
]
