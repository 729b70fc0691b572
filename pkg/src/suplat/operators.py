"""Validated orthogonal projectors and their range/kernel geometry."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import DimensionMismatchError, ExactMatrix
from .subspaces import Subspace


class ProjectorError(ValueError):
    """A matrix failed one of the projector laws."""


class NotSquareError(ProjectorError):
    pass


class NotHermitianError(ProjectorError):
    pass


class NotIdempotentError(ProjectorError):
    pass


@dataclass(frozen=True)
class Projector:
    """A Hermitian idempotent matrix together with its name and rank.

    Instances are produced by :func:`validate_projector`, which is the
    only place the defining laws are checked.
    """

    name: str
    matrix: ExactMatrix
    rank: int

    @property
    def dimension(self) -> int:
        return self.matrix.rows

    def is_trivial(self) -> bool:
        """Rank 0 (zero operator) or full rank (identity)."""
        return self.rank == 0 or self.rank == self.dimension


def validate_projector(matrix: ExactMatrix, name: str = "P") -> Projector:
    """Check square, Hermitian and idempotent; compute the rank once.

    Raises:
        NotSquareError, NotHermitianError, NotIdempotentError: naming the
        offending projector and the violated law.
    """
    if not matrix.is_square():
        raise NotSquareError(f"projector {name!r}: matrix is {matrix.rows}x{matrix.cols}, not square")
    if matrix.adjoint() != matrix:
        raise NotHermitianError(f"projector {name!r}: matrix is not equal to its adjoint")
    if matrix * matrix != matrix:
        raise NotIdempotentError(f"projector {name!r}: matrix squared differs from the matrix")
    return Projector(name, matrix, matrix.rank())


def range_of(p: Projector) -> Subspace:
    """Column space of the projector matrix."""
    cols = [p.matrix.column(j) for j in range(p.dimension)]
    return Subspace.span_of(cols, p.dimension)


def kernel_of(p: Projector) -> Subspace:
    """Null space of the projector matrix; equals the range's orthocomplement."""
    return Subspace.span_of(p.matrix.null_space().row_list(), p.dimension)


def projector_onto(s: Subspace, name: str = "P") -> Projector:
    """The unique orthogonal projector with the given range.

    With the basis rows gathered as columns A, the matrix is
    A (A* A)^-1 A*; the Gram matrix is invertible because basis rows are
    independent.
    """
    n = s.ambient_dim
    if s.dim == 0:
        return Projector(name, ExactMatrix.zeros(n, n), 0)
    a = s.basis.transpose()
    gram = a.adjoint() * a
    matrix = a * gram.inverse() * a.adjoint()
    return Projector(name, matrix, s.dim)


def commutes(p: Projector, q: Projector) -> bool:
    if p.dimension != q.dimension:
        raise DimensionMismatchError(
            f"projectors act on different spaces: {p.dimension} vs {q.dimension}"
        )
    return p.matrix * q.matrix == q.matrix * p.matrix


def is_invariant(s: Subspace, p: Projector) -> bool:
    """True iff the projector maps the subspace into itself."""
    if s.ambient_dim != p.dimension:
        raise DimensionMismatchError(
            f"subspace of C^{s.ambient_dim} under a projector on C^{p.dimension}"
        )
    return all(s.contains_vector(p.matrix.apply(row)) for row in s.basis.row_list())
