"""Three-valued valuation of subspace propositions at a pure state.

The trivial subspaces are bivalent for every state: the zero subspace is
false and the full space is true.  Beyond that the two modes differ.  In
invariant mode a nontrivial subspace gets a truth value only if it is a
member of a lattice allocated by the state (one whose context has an atom
range containing the state); all other members render as the gap "0/0".
In Hilbert-sublattice mode every member is bivalent by containment.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .contexts import Structure, allocated_lattices, normalize_state
from .linalg import DimensionMismatchError, GaussianRational, format_scalar
from .subspaces import Subspace


class Mode(Enum):
    INVARIANT = "invariant"
    HILBERT = "hilbert"


class TruthValue(Enum):
    TRUE = "1"
    FALSE = "0"
    GAP = "0/0"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class ValuationReport:
    """Truth values of every lattice member of a structure at one state.

    ``values`` maps each distinct member subspace to its truth value;
    ``entries`` names every member of every lattice as
    ``<context>.<atom-set>`` (for example ``S1.1+2+3``) in deterministic
    order.  A subspace shared between lattices appears under each of its
    names with the same value.
    """

    state: tuple[GaussianRational, ...]
    mode: Mode
    allocated: tuple[str, ...]
    values: Mapping[Subspace, TruthValue]
    entries: Mapping[str, TruthValue]
    notes: tuple[str, ...] = ()


def _value_of(member: Subspace, state, mode: Mode, certified: set[Subspace]) -> TruthValue:
    if member.is_zero():
        return TruthValue.FALSE
    if member.is_full():
        return TruthValue.TRUE
    if mode is Mode.HILBERT or member in certified:
        return TruthValue.TRUE if member.contains_vector(state) else TruthValue.FALSE
    return TruthValue.GAP


def evaluate(structure: Structure, state, subspace: Subspace, mode: Mode) -> TruthValue:
    """Truth value of a single subspace proposition at the state."""
    v = normalize_state(structure, state)
    if subspace.ambient_dim != structure.ambient_dim:
        raise DimensionMismatchError(
            f"subspace of C^{subspace.ambient_dim} in a structure on C^{structure.ambient_dim}"
        )
    certified: set[Subspace] = set()
    if mode is Mode.INVARIANT and not subspace.is_zero() and not subspace.is_full():
        for lat in allocated_lattices(structure, v):
            certified.update(lat.members)
    return _value_of(subspace, v, mode, certified)


def evaluate_structure(structure: Structure, state, mode: Mode) -> ValuationReport:
    """Evaluate every member of every lattice of the structure at the state."""
    v = normalize_state(structure, state)
    allocated = allocated_lattices(structure, v)
    certified: set[Subspace] = set()
    for lat in allocated:
        certified.update(lat.members)
    values: dict[Subspace, TruthValue] = {}
    entries: dict[str, TruthValue] = {}
    for lat in structure.lattices:
        for member in lat.members:
            if member not in values:
                values[member] = _value_of(member, v, mode, certified)
            entries[f"{lat.name}.{lat.label(member)}"] = values[member]
    notes: tuple[str, ...] = ()
    if mode is Mode.HILBERT and not any(
        val is TruthValue.TRUE for m, val in values.items() if not m.is_full()
    ):
        notes = ("state lies in no nontrivial member; containment renders them all false",)
    return ValuationReport(
        state=v,
        mode=mode,
        allocated=tuple(lat.name for lat in allocated),
        values=values,
        entries=entries,
        notes=notes,
    )


def format_state(state) -> str:
    return ",".join(format_scalar(x) for x in state)


def report_to_text(report: ValuationReport) -> str:
    """Stable line-oriented rendering, usable as a golden-file format."""
    lines = [
        f"state: {format_state(report.state)}",
        f"mode: {report.mode.value}",
        f"allocated: {', '.join(report.allocated) if report.allocated else '(none)'}",
    ]
    lines.extend(f"note: {note}" for note in report.notes)
    lines.extend(f"{key} = {value}" for key, value in report.entries.items())
    return "\n".join(lines) + "\n"


def report_to_dict(report: ValuationReport) -> dict:
    return {
        "state": [format_scalar(x) for x in report.state],
        "mode": report.mode.value,
        "allocated": list(report.allocated),
        "notes": list(report.notes),
        "entries": {key: str(value) for key, value in report.entries.items()},
    }
