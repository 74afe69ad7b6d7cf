"""Driven giant and small atoms coupled to a coupled-resonator waveguide."""
from .geometry import (ArrayGeometry, AtomSpec, ConfigurationCase, Flavor, GeometryError,
                       Species, build_giant_array, build_small_array, classify_configuration)
from .coefficients import (CouplingModel, PairCoefficient, assemble_model, coefficient_matrix,
                           coefficient_oracle, pair_coefficient)
from .liouvillian import (DriveSpec, LindbladGenerator, OperatorBasis, build_generator,
                          build_hamiltonian, liouvillian, operator_basis)
from .dynamics import (InvariantViolation, NoUniqueSteadyState, Trajectory, evolve,
                       generator_spectrum, spectral_gap, steady_state)
from .observables import (TomographyTable, concurrence, excited_average, expectation,
                          partial_trace, tomography)

__version__ = "0.1.0"
