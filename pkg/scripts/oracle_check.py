"""
Compare closed-form pair coefficients with the momentum-space mode sum.

For each geometry prints the largest deviation of the plain oracle
(regulator eps, 2**14 modes) and of its Richardson extrapolation
(2**18 modes) from the closed form, plus 2*xi*A as Gaussian integers.
"""
import argparse

import numpy as np

from giantatoms import build_giant_array, build_small_array
from giantatoms.coefficients import coefficient_matrix, oracle_matrix, twice_xi_matrix

GEOMETRIES = {
    "giant t_B=2": lambda: build_giant_array(1, 1, 1, 2),
    "giant t_B=3": lambda: build_giant_array(1, 1, 1, 3),
    "giant t_B=4": lambda: build_giant_array(1, 1, 1, 4),
    "giant 3-atom t_B=3": lambda: build_giant_array(2, 1, 1, 3),
    "giant 3-atom t_B=4": lambda: build_giant_array(2, 1, 1, 4),
    "small t_j=2": lambda: build_small_array(1, 1, 1, 2),
    "small t_j=3": lambda: build_small_array(1, 1, 1, 3),
    "small 3-atom t_j=2": lambda: build_small_array(2, 1, 1, 2),
    "small 3-atom t_j=3": lambda: build_small_array(2, 1, 1, 3),
}


def gaussian_integers(geom):
    t = twice_xi_matrix(geom)
    return [[f"{re:+d}{im:+d}i" for re, im in row] for row in t.tolist()]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--eps", type=float, default=1e-3)
    parser.add_argument("--xi", type=float, default=1.0)
    parser.add_argument("--show-matrices", action="store_true")
    args = parser.parse_args()

    print(f"{'geometry':<20} {'plain':>10} {'richardson':>11} {'gain':>8}")
    for name, make in GEOMETRIES.items():
        geom = make()
        closed = coefficient_matrix(geom, args.xi)
        plain = np.abs(oracle_matrix(geom, args.xi, args.eps) - closed).max()
        rich = np.abs(oracle_matrix(geom, args.xi, args.eps, richardson=True) - closed).max()
        print(f"{name:<20} {plain:10.2e} {rich:11.2e} {plain / rich:8.0f}")
        if args.show_matrices:
            for row in gaussian_integers(geom):
                print("    " + "  ".join(row))


if __name__ == "__main__":
    main()
