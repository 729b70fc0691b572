"""Built-in example structures.

``pauli-qubit``: the three spin contexts of a qubit, each splitting C^2
into a pair of orthogonal rays.

``cabello-3``: three intertwined four-atom contexts in C^4 drawn from the
eighteen-vector Kochen-Specker family; the first two share their first
atom, the third is unconnected to either at the atom level.
"""

from __future__ import annotations

from functools import lru_cache

from .contexts import Context, Structure, validate_context
from .linalg import ExactMatrix
from .operators import validate_projector

PAULI_QUBIT = "pauli-qubit"
CABELLO_3 = "cabello-3"


class UnknownDatasetError(ValueError):
    pass


def _context(name: str, atoms: list[tuple[str, list[list[str]]]]) -> Context:
    return validate_context(
        name,
        [validate_projector(ExactMatrix.from_rows(rows), name=atom_name) for atom_name, rows in atoms],
    )


@lru_cache(maxsize=None)
def _pauli_qubit() -> Structure:
    sigma_z = _context(
        "Sigma_z",
        [
            ("z+", [["1", "0"], ["0", "0"]]),
            ("z-", [["0", "0"], ["0", "1"]]),
        ],
    )
    sigma_x = _context(
        "Sigma_x",
        [
            ("x+", [["1/2", "1/2"], ["1/2", "1/2"]]),
            ("x-", [["1/2", "-1/2"], ["-1/2", "1/2"]]),
        ],
    )
    sigma_y = _context(
        "Sigma_y",
        [
            ("y+", [["1/2", "-1/2i"], ["1/2i", "1/2"]]),
            ("y-", [["1/2", "1/2i"], ["-1/2i", "1/2"]]),
        ],
    )
    return Structure([sigma_z, sigma_x, sigma_y])


@lru_cache(maxsize=None)
def _cabello_3() -> Structure:
    s1 = _context(
        "S1",
        [
            ("P1", [["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "1"]]),
            ("P2", [["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "0"]]),
            ("P3", [["1/2", "1/2", "0", "0"], ["1/2", "1/2", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]),
            ("P4", [["1/2", "-1/2", "0", "0"], ["-1/2", "1/2", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]),
        ],
    )
    s2 = _context(
        "S2",
        [
            ("P1", [["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "1"]]),
            ("P2", [["0", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]),
            ("P3", [["1/2", "0", "1/2", "0"], ["0", "0", "0", "0"], ["1/2", "0", "1/2", "0"], ["0", "0", "0", "0"]]),
            ("P4", [["1/2", "0", "-1/2", "0"], ["0", "0", "0", "0"], ["-1/2", "0", "1/2", "0"], ["0", "0", "0", "0"]]),
        ],
    )
    s6 = _context(
        "S6",
        [
            ("P1", [["1/4", "-1/4", "-1/4", "1/4"], ["-1/4", "1/4", "1/4", "-1/4"], ["-1/4", "1/4", "1/4", "-1/4"], ["1/4", "-1/4", "-1/4", "1/4"]]),
            ("P2", [["1/4", "1/4", "1/4", "1/4"], ["1/4", "1/4", "1/4", "1/4"], ["1/4", "1/4", "1/4", "1/4"], ["1/4", "1/4", "1/4", "1/4"]]),
            ("P3", [["1/2", "0", "0", "-1/2"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["-1/2", "0", "0", "1/2"]]),
            ("P4", [["0", "0", "0", "0"], ["0", "1/2", "-1/2", "0"], ["0", "-1/2", "1/2", "0"], ["0", "0", "0", "0"]]),
        ],
    )
    return Structure([s1, s2, s6])


_BUILDERS = {
    PAULI_QUBIT: _pauli_qubit,
    CABELLO_3: _cabello_3,
}


def dataset_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def builtin_structure(name: str) -> Structure:
    """Return a built-in structure by name.

    Raises:
        UnknownDatasetError: the name is not one of :func:`dataset_names`.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownDatasetError(
            f"unknown dataset {name!r}; available: {', '.join(_BUILDERS)}"
        ) from None
    return builder()
