import numpy as np

from giantatoms import assemble_model, build_giant_array, build_small_array

ACCEPTANCE_LINES = []


# canonical representatives of giant Cases I-III and small Cases I-II
TWO_ATOM_PRESETS = {
    "giant_caseI": build_giant_array(1, 1, 1, 2),
    "giant_caseII": build_giant_array(1, 1, 1, 3),
    "giant_caseIII": build_giant_array(1, 1, 1, 4),
    "small_caseI": build_small_array(1, 1, 1, 2),
    "small_caseII": build_small_array(1, 1, 1, 3),
}
THREE_ATOM_PRESETS = {
    "giant_caseII": build_giant_array(2, 1, 1, 3),
    "giant_caseIII": build_giant_array(2, 1, 1, 4),
    "small_caseI": build_small_array(2, 1, 1, 2),
    "small_caseII": build_small_array(2, 1, 1, 3),
}
ALL_PRESETS = {**{f"2_{k}": v for k, v in TWO_ATOM_PRESETS.items()},
               **{f"3_{k}": v for k, v in THREE_ATOM_PRESETS.items()}}


def random_density(rng, d, rank=None):
    rank = rank or d
    m = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def random_hermitian(rng, d):
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return 0.5 * (m + m.conj().T)


def preset_model(name, g=0.05):
    return assemble_model(ALL_PRESETS[name], g)

