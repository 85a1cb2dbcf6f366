"""Shared physical constants and the canonical wavelength grid."""

import numpy as np

# CODATA 2018 exact values
ELEMENTARY_CHARGE = 1.602176634e-19  # C
BOLTZMANN = 1.380649e-23             # J/K
HBAR = 1.054571817e-34               # J*s

# Peak photopic luminous efficacy. Some references round this differently;
# 683 lm/W is the CIE value and is what all photometric conversions use here.
LUMINOUS_EFFICACY = 683.0            # lm/W

# All spectra and CIE tables live on this grid (visible band, 1 nm step).
GRID_MIN_NM = 380.0
GRID_MAX_NM = 830.0
GRID_STEP_NM = 1.0

WAVELENGTH_GRID_NM = np.arange(GRID_MIN_NM, GRID_MAX_NM + GRID_STEP_NM, GRID_STEP_NM)
