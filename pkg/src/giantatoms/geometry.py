"""
Atom arrays on the integer resonator lattice.

Giant atoms touch the waveguide at two sites, small atoms at one. Species
alternate A, B, A, B, ... starting from an A atom whose first site sits at 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

MAX_ATOMS = 6


class GeometryError(ValueError):
    pass


class Species(str, Enum):
    GIANT_A = "A"
    GIANT_B = "B"
    SMALL_A = "a"
    SMALL_B = "b"

    @property
    def is_giant(self) -> bool:
        return self in (Species.GIANT_A, Species.GIANT_B)

    @property
    def is_a(self) -> bool:
        return self in (Species.GIANT_A, Species.SMALL_A)


class Flavor(str, Enum):
    GIANT = "giant"
    SMALL = "small"


class ConfigurationCase(str, Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    DECOUPLED_BOTH = "DecoupledBoth"
    EQUIV_CASE_II = "EquivCaseII"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class AtomSpec:
    species: Species
    index_in_species: int
    sites: tuple[int, ...]

    def __post_init__(self):
        expected = 2 if self.species.is_giant else 1
        if len(self.sites) != expected:
            raise GeometryError(
                f"{self.species.value} atom needs {expected} site(s), got {self.sites}")
        if any(b <= a for a, b in zip(self.sites, self.sites[1:])):
            raise GeometryError(f"sites must be strictly increasing: {self.sites}")
        if self.index_in_species < 1:
            raise GeometryError("index_in_species is 1-based")

    @property
    def label(self) -> str:
        """Short label such as ``A1`` or ``b2``."""
        return f"{self.species.value}{self.index_in_species}"


@dataclass(frozen=True)
class ArrayGeometry:
    """
    Ordered atoms plus the integer lengths that generated them.

    For small arrays ``t_A`` and ``t_B`` are None, and ``t_I``/``t_J`` hold
    the intra-cell and extra-cell spacings.
    """
    atoms: tuple[AtomSpec, ...]
    flavor: Flavor
    t_I: int
    t_J: int
    t_A: int | None = None
    t_B: int | None = None

    def __post_init__(self):
        sites = [s for atom in self.atoms for s in atom.sites]
        if len(set(sites)) != len(sites):
            raise GeometryError(f"coupling sites collide: {sites}")

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def species(self) -> tuple[Species, ...]:
        return tuple(atom.species for atom in self.atoms)

    @property
    def labels(self) -> tuple[str, ...]:
        """
        Atom labels. Two-atom arrays use the bare species letters (``A``,
        ``B``) as in the two-atom tomography; larger arrays are numbered.
        """
        if self.n_atoms <= 2:
            return tuple(atom.species.value for atom in self.atoms)
        return tuple(atom.label for atom in self.atoms)

    def translated(self, shift: int) -> "ArrayGeometry":
        atoms = tuple(
            AtomSpec(a.species, a.index_in_species, tuple(s + shift for s in a.sites))
            for a in self.atoms)
        return ArrayGeometry(atoms, self.flavor, self.t_I, self.t_J, self.t_A, self.t_B)

    def case(self) -> ConfigurationCase:
        if self.flavor is not Flavor.GIANT:
            raise GeometryError("case classification applies to giant arrays only")
        return classify_configuration(self.t_A, self.t_B)


def _check_counts(num_a, num_b, max_atoms):
    if num_a < 1 or num_b < 0:
        raise GeometryError(f"need num_A >= 1 and num_B >= 0, got ({num_a}, {num_b})")
    if abs(num_a - num_b) > 1:
        raise GeometryError("species alternate, so |num_A - num_B| <= 1")
    if num_b > num_a:
        raise GeometryError("arrays start with an A atom, so num_B <= num_A")
    if num_a + num_b > max_atoms:
        raise GeometryError(
            f"{num_a + num_b} atoms exceeds the cap of {max_atoms} "
            f"(Hilbert dimension 2**{num_a + num_b})")


def _check_positive(**lengths):
    for name, value in lengths.items():
        if int(value) != value or value < 1:
            raise GeometryError(f"{name} must be a positive integer, got {value!r}")


def build_giant_array(num_A: int, num_B: int, t_A: int, t_B: int,
                      t_I: int = 1, t_J: int = 1,
                      max_atoms: int = MAX_ATOMS) -> ArrayGeometry:
    """
    Alternating giant atoms with legs ``(x_n, x_n + t_A)`` and ``(y_m, y_m + t_B)``.

    Positions follow ``x_1 = 0``, ``y_i = x_i + t_A + t_I`` and
    ``x_{i+1} = y_i + t_B + t_J``.

    Examples
    --------
    >>> [a.sites for a in build_giant_array(2, 1, 1, 4).atoms]
    [(0, 1), (2, 6), (7, 8)]
    """
    _check_positive(t_A=t_A, t_B=t_B, t_I=t_I, t_J=t_J)
    _check_counts(num_A, num_B, max_atoms)
    atoms = []
    x = 0
    for i in range(1, num_A + 1):
        atoms.append(AtomSpec(Species.GIANT_A, i, (x, x + t_A)))
        y = x + t_A + t_I
        if i <= num_B:
            atoms.append(AtomSpec(Species.GIANT_B, i, (y, y + t_B)))
        x = y + t_B + t_J
    return ArrayGeometry(tuple(atoms), Flavor.GIANT, int(t_I), int(t_J), int(t_A), int(t_B))


def build_small_array(num_a: int, num_b: int, t_i: int, t_j: int,
                      max_atoms: int = MAX_ATOMS) -> ArrayGeometry:
    """
    Alternating single-site atoms at ``x_1 = 0``, ``y_i = x_i + t_i``,
    ``x_{i+1} = y_i + t_j``.
    """
    _check_positive(t_i=t_i, t_j=t_j)
    _check_counts(num_a, num_b, max_atoms)
    atoms = []
    x = 0
    for i in range(1, num_a + 1):
        atoms.append(AtomSpec(Species.SMALL_A, i, (x,)))
        y = x + t_i
        if i <= num_b:
            atoms.append(AtomSpec(Species.SMALL_B, i, (y,)))
        x = y + t_j
    return ArrayGeometry(tuple(atoms), Flavor.SMALL, int(t_i), int(t_j))


def classify_configuration(t_A: int, t_B: int) -> ConfigurationCase:
    """Interaction case of a giant array; depends only on sizes mod 4."""
    _check_positive(t_A=t_A, t_B=t_B)
    ra, rb = t_A % 4, t_B % 4
    if ra % 2 == 1:
        if rb == 2:
            return ConfigurationCase.CASE_I
        if rb % 2 == 1:
            return ConfigurationCase.CASE_II
        return ConfigurationCase.CASE_III
    if ra == 2 and rb % 2 == 0:
        return ConfigurationCase.DECOUPLED_BOTH
    if ra == 0 and rb == 0:
        return ConfigurationCase.EQUIV_CASE_II
    return ConfigurationCase.UNCLASSIFIED
