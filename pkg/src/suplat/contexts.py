"""Measurement contexts, their invariant-subspace lattices, and structures.

A context is a resolution of the identity into at least two nontrivial
mutually orthogonal projectors.  Its invariant-subspace lattice is the
family of subset-sums of the atom ranges: a subspace is invariant under a
projector exactly when it splits along that projector's range and kernel,
so for a full context the common invariant subspaces are direct sums of
pieces of atom ranges.  With rank-1 atoms the subset-sums exhaust them and
the lattice is Boolean with 2^k members.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations

from .linalg import DimensionMismatchError, ExactMatrix, as_scalar, format_scalar, parse_scalar
from .operators import Projector, is_invariant, range_of, validate_projector
from .subspaces import Subspace


class ContextError(ValueError):
    """A family of projectors fails one of the context laws."""


class NotOrthogonalError(ContextError):
    pass


class IncompleteSumError(ContextError):
    pass


class TrivialAtomError(ContextError):
    pass


class DuplicateAtomNameError(ContextError):
    pass


class StructureError(ValueError):
    """Contexts cannot be assembled into a single structure."""


class StructureFormatError(ValueError):
    """A structure description (JSON shape) is malformed."""


class ZeroStateError(ValueError):
    """The zero vector is not a state and allocates nothing."""


@dataclass(frozen=True)
class Context:
    """A named resolution of the identity into orthogonal nontrivial atoms."""

    name: str
    atoms: tuple[Projector, ...]

    @property
    def dimension(self) -> int:
        return self.atoms[0].dimension


def validate_context(name: str, projectors) -> Context:
    """Check the context laws and return the validated context.

    Laws: at least two atoms, all on the same space, each nontrivial,
    pairwise orthogonal (zero products), names unique, and the atom sum
    equal to the identity.
    """
    atoms = tuple(projectors)
    if len(atoms) < 2:
        raise ContextError(f"context {name!r}: needs at least 2 projectors, got {len(atoms)}")
    dim = atoms[0].dimension
    for p in atoms:
        if p.dimension != dim:
            raise ContextError(
                f"context {name!r}: atom {p.name!r} acts on C^{p.dimension}, expected C^{dim}"
            )
        if p.is_trivial():
            raise TrivialAtomError(
                f"context {name!r}: atom {p.name!r} is trivial (rank {p.rank} of {dim})"
            )
    names = [p.name for p in atoms]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise DuplicateAtomNameError(f"context {name!r}: duplicate atom name {dup!r}")
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            if not (atoms[i].matrix * atoms[j].matrix).is_zero():
                raise NotOrthogonalError(
                    f"context {name!r}: atoms {atoms[i].name!r} and {atoms[j].name!r}"
                    " are not orthogonal"
                )
    total = atoms[0].matrix
    for p in atoms[1:]:
        total = total + p.matrix
    if total != ExactMatrix.identity(dim):
        raise IncompleteSumError(f"context {name!r}: atoms do not sum to the identity")
    return Context(name, atoms)


class InvariantLattice:
    """The Boolean lattice of subset-sums of a context's atom ranges.

    Members are deduplicated canonical subspaces sorted by dimension and
    then by lexicographic basis order; ``atom_sets`` aligns each member
    with the 0-based atom indices whose ranges sum to it.
    """

    def __init__(self, context: Context) -> None:
        self.context = context
        self.atom_ranges: tuple[Subspace, ...] = tuple(range_of(p) for p in context.atoms)
        pairs: dict[Subspace, tuple[int, ...]] = {}
        indices = range(len(context.atoms))
        for subset in chain.from_iterable(combinations(indices, r) for r in range(len(context.atoms) + 1)):
            member = Subspace.zero(context.dimension)
            for i in subset:
                member = member.join(self.atom_ranges[i])
            pairs.setdefault(member, subset)
        ordered = sorted(pairs.items(), key=lambda item: item[0].sort_key())
        self.members: tuple[Subspace, ...] = tuple(m for m, _ in ordered)
        self.atom_sets: tuple[tuple[int, ...], ...] = tuple(s for _, s in ordered)
        self._index = {m: i for i, m in enumerate(self.members)}

    @property
    def name(self) -> str:
        return self.context.name

    def __len__(self) -> int:
        return len(self.members)

    def has_member(self, s: Subspace) -> bool:
        return s in self._index

    def index_of(self, s: Subspace) -> int:
        return self._index[s]

    def label(self, member: Subspace) -> str:
        """Atom-set label of a member: \"0\" for the zero subspace, else \"1+2+3\"."""
        subset = self.atom_sets[self._index[member]]
        if not subset:
            return "0"
        return "+".join(str(i + 1) for i in subset)

    def labels(self) -> list[str]:
        return [self.label(m) for m in self.members]


def invariant_lattice(context: Context) -> InvariantLattice:
    """Enumerate the subset-sum lattice of the context."""
    return InvariantLattice(context)


def is_lattice_member(s: Subspace, context: Context) -> bool:
    """True iff the subspace is invariant under every atom of the context.

    For rank-1 contexts this coincides with appearing among the enumerated
    subset-sums.
    """
    if s.ambient_dim != context.dimension:
        raise DimensionMismatchError(
            f"subspace of C^{s.ambient_dim} against a context on C^{context.dimension}"
        )
    return all(is_invariant(s, p) for p in context.atoms)


def shared_members(a: InvariantLattice, b: InvariantLattice) -> list[Subspace]:
    """Members common to both lattices, in a's canonical order.

    The trivial subspaces are always shared; callers interested in the
    grey-rendered overlap should filter to the nontrivial ones.
    """
    if a.context.dimension != b.context.dimension:
        raise DimensionMismatchError("lattices live in different ambient dimensions")
    return [m for m in a.members if b.has_member(m)]


class Structure:
    """A finite family of contexts on one space, with their lattices."""

    def __init__(self, contexts) -> None:
        contexts = tuple(contexts)
        if not contexts:
            raise StructureError("a structure needs at least one context")
        dim = contexts[0].dimension
        for c in contexts:
            if c.dimension != dim:
                raise StructureError(
                    f"context {c.name!r} acts on C^{c.dimension}, expected C^{dim}"
                )
        names = [c.name for c in contexts]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise StructureError(f"duplicate context name {dup!r}")
        self.ambient_dim = dim
        self.contexts = contexts
        self.lattices: tuple[InvariantLattice, ...] = tuple(InvariantLattice(c) for c in contexts)

    def find_lattice(self, context_name: str) -> InvariantLattice | None:
        for lat in self.lattices:
            if lat.name == context_name:
                return lat
        return None


def normalize_state(structure: Structure, state) -> tuple:
    """Coerce and check a state vector: right length and not the zero vector."""
    v = tuple(as_scalar(x) for x in state)
    if len(v) != structure.ambient_dim:
        raise DimensionMismatchError(
            f"state of length {len(v)} in ambient dimension {structure.ambient_dim}"
        )
    if not any(v):
        raise ZeroStateError("the zero vector does not allocate any lattice")
    return v


def allocated_lattices(structure: Structure, state) -> list[InvariantLattice]:
    """Lattices whose context has an atom range containing the state."""
    v = normalize_state(structure, state)
    return [
        lat
        for lat in structure.lattices
        if any(r.contains_vector(v) for r in lat.atom_ranges)
    ]


def structure_to_dict(structure: Structure) -> dict:
    """Serializable description; inverse of :func:`structure_from_dict`."""
    return {
        "dimension": structure.ambient_dim,
        "contexts": [
            {
                "name": c.name,
                "projectors": [
                    {
                        "name": p.name,
                        "matrix": [
                            [format_scalar(p.matrix.entry(i, j)) for j in range(p.dimension)]
                            for i in range(p.dimension)
                        ],
                    }
                    for p in c.atoms
                ],
            }
            for c in structure.contexts
        ],
    }


def structure_from_dict(data) -> Structure:
    """Parse and fully validate a structure description.

    Raises:
        StructureFormatError: wrong JSON shape or a bad scalar literal,
            with the location of the offending element.
        ProjectorError, ContextError, StructureError: the parsed matrices
            violate a projector, context or structure law.
    """
    if not isinstance(data, dict):
        raise StructureFormatError("top level must be an object")
    try:
        dimension = data["dimension"]
        raw_contexts = data["contexts"]
    except KeyError as missing:
        raise StructureFormatError(f"missing top-level key {missing}") from None
    if not isinstance(dimension, int) or dimension < 1:
        raise StructureFormatError("'dimension' must be a positive integer")
    if not isinstance(raw_contexts, list) or not raw_contexts:
        raise StructureFormatError("'contexts' must be a nonempty list")
    contexts = []
    for ci, raw_ctx in enumerate(raw_contexts):
        where = f"contexts[{ci}]"
        if not isinstance(raw_ctx, dict):
            raise StructureFormatError(f"{where}: must be an object")
        cname = raw_ctx.get("name")
        if not isinstance(cname, str) or not cname:
            raise StructureFormatError(f"{where}: 'name' must be a nonempty string")
        raw_projs = raw_ctx.get("projectors")
        if not isinstance(raw_projs, list):
            raise StructureFormatError(f"{where}: 'projectors' must be a list")
        atoms = []
        for pi, raw_proj in enumerate(raw_projs):
            pwhere = f"{where}.projectors[{pi}]"
            if not isinstance(raw_proj, dict):
                raise StructureFormatError(f"{pwhere}: must be an object")
            pname = raw_proj.get("name")
            if not isinstance(pname, str) or not pname:
                raise StructureFormatError(f"{pwhere}: 'name' must be a nonempty string")
            raw_matrix = raw_proj.get("matrix")
            if not isinstance(raw_matrix, list) or not raw_matrix:
                raise StructureFormatError(f"{pwhere}: 'matrix' must be a nonempty list of rows")
            rows = []
            for ri, raw_row in enumerate(raw_matrix):
                if not isinstance(raw_row, list) or len(raw_row) != dimension:
                    raise StructureFormatError(
                        f"{pwhere}.matrix[{ri}]: expected a row of {dimension} scalar literals"
                    )
                row = []
                for si, lit in enumerate(raw_row):
                    if not isinstance(lit, str):
                        raise StructureFormatError(
                            f"{pwhere}.matrix[{ri}][{si}]: entries must be scalar literal strings"
                        )
                    try:
                        row.append(parse_scalar(lit))
                    except ValueError as err:
                        raise StructureFormatError(
                            f"{pwhere}.matrix[{ri}][{si}]: {err}"
                        ) from err
                rows.append(row)
            if len(rows) != dimension:
                raise StructureFormatError(
                    f"{pwhere}.matrix: expected {dimension} rows, got {len(rows)}"
                )
            atoms.append(validate_projector(ExactMatrix.from_rows(rows), name=pname))
        contexts.append(validate_context(cname, atoms))
    return Structure(contexts)
