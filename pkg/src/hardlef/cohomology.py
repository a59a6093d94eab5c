"""Subcomplexes of the invariant complex and their exact cohomology.

A Subcomplex owns, per degree, a basis of an admissible d-stable subspace
together with the matrices of the restricted differential.  full_complex
takes all monomials; basic_complex takes the joint kernel of i_v and L_v
over a list of fields, which is automatically d-stable (verified anyway).

Cohomology spaces carry a deterministic representative basis, obtained by
completing the canonical image basis inside the canonical kernel basis,
and an exact class_of projection solving the membership system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import (DegreeError, InternalConsistencyError, ModelMismatchError,
                     NotClosedError, PreconditionError)
from .exterior import (Form, Vector, contract, degree_masks, form_coords,
                       form_from_coords)
from .model import StructureModel


class Subcomplex:
    """A graded d-stable subspace of the invariant forms of a model."""

    def __init__(self, model: StructureModel, fields: Sequence[Vector],
                 bases: Sequence[Sequence[Form]]):
        n = model.n_gen
        self.model = model
        self.fields = tuple(fields)
        self.bases = tuple(tuple(b) for b in bases)
        if len(self.bases) != n + 1:
            raise ValueError("need one basis per degree 0..n_gen")
        self._rows = [[form_coords(f) for f in self.bases[k]]
                      for k in range(n + 1)]
        self._slice_rref = [linalg.rref(self._rows[k], len(degree_masks(n, k)))
                            for k in range(n + 1)]
        for k in range(n + 1):
            if len(self._slice_rref[k][1]) != len(self.bases[k]):
                raise InternalConsistencyError(
                    f"degree {k} basis forms are linearly dependent")
        self._diff: list[linalg.Matrix] = []
        for k in range(n + 1):
            mat = []
            for f in self.bases[k]:
                coords = self.coords(model.d(f), k + 1)
                if coords is None:
                    raise InternalConsistencyError(
                        f"span is not closed under d in degree {k}; "
                        f"the fields do not cut out a subcomplex")
                mat.append(coords)
            self._diff.append(mat)
        self._spaces: dict[int, CohomologySpace] = {}

    # ----- degree slices --------------------------------------------------

    def basis(self, k: int) -> tuple[Form, ...]:
        if 0 <= k <= self.model.n_gen:
            return self.bases[k]
        return ()

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def diff_matrix(self, k: int) -> linalg.Matrix:
        """Matrix of d from degree k to k+1, rows indexed by the basis."""
        if 0 <= k <= self.model.n_gen:
            return self._diff[k]
        return []

    def slice_rref(self, k: int):
        """(rref rows, pivots) of the degree-k slice in monomial coords."""
        if 0 <= k <= self.model.n_gen:
            return self._slice_rref[k]
        return [], []

    def coords(self, form: Form, degree: int | None = None):
        """Coordinates of a form in the degree basis, or None if outside."""
        if form.n_gen != self.model.n_gen:
            raise ModelMismatchError("form does not live over this model")
        k = form.degree if degree is None else degree
        if not 0 <= k <= self.model.n_gen:
            return [] if form.is_zero() else None
        if form.degree != k and not form.is_zero():
            return None
        target = [form.terms.get(m, Fraction(0))
                  for m in degree_masks(self.model.n_gen, k)]
        return linalg.express_in_rows(self._rows[k], target, len(target))

    def contains(self, form: Form) -> bool:
        return self.coords(form) is not None

    def dims(self) -> tuple[int, ...]:
        return tuple(self.dim(k) for k in range(self.model.n_gen + 1))

    # ----- cohomology -----------------------------------------------------

    def space(self, k: int) -> "CohomologySpace":
        sp = self._spaces.get(k)
        if sp is None:
            sp = self._build_space(k)
            self._spaces[k] = sp
        return sp

    def _build_space(self, k: int) -> "CohomologySpace":
        m_k = self.dim(k)
        if m_k == 0:
            return CohomologySpace(self, k, [], [])
        kernel = linalg.left_kernel(self.diff_matrix(k), self.dim(k + 1))
        image = (linalg.row_space(self._diff[k - 1], m_k)
                 if k >= 1 else [])
        reps = []
        span = linalg.copy_matrix(image)
        span_rank = len(span)
        for row in kernel:
            trial = linalg.row_space(span + [row], m_k)
            if len(trial) > span_rank:
                span = trial
                span_rank += 1
                reps.append(row)
        if len(reps) != len(kernel) - len(image):
            raise InternalConsistencyError(
                f"image is not contained in the kernel in degree {k}")
        return CohomologySpace(self, k, reps, image)

    def __repr__(self):
        label = "full" if not self.fields else f"basic({len(self.fields)})"
        return f"<Subcomplex {label} of {self.model!r}>"


class CohomologySpace:
    """One degree of the cohomology of a subcomplex.

    representatives are closed admissible forms whose classes form a basis;
    class_of maps any closed admissible form to its exact coordinates in
    that basis.
    """

    def __init__(self, cplx: Subcomplex, degree: int,
                 rep_coords: linalg.Matrix, image_rows: linalg.Matrix):
        self.complex = cplx
        self.degree = degree
        self.dimension = len(rep_coords)
        self._rep_coords = rep_coords
        self._image_rows = image_rows
        self._solve_rows = [list(r) for r in rep_coords] + \
                           [list(r) for r in image_rows]
        basis = cplx.basis(degree)
        self.representatives = tuple(
            _combine(basis, row, cplx.model.n_gen, degree)
            for row in rep_coords)

    def class_of_coords(self, coords: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Class of a closed element given in subcomplex coordinates."""
        m_k = self.complex.dim(self.degree)
        img = linalg.matmul([list(coords)],
                            self.complex.diff_matrix(self.degree),
                            self.complex.dim(self.degree + 1))
        if any(img[0]):
            raise PreconditionError(
                f"class_of needs a closed form in degree {self.degree}")
        sol = linalg.express_in_rows(self._solve_rows, list(coords), m_k)
        if sol is None:
            raise InternalConsistencyError(
                "closed form is outside kernel = reps + image; "
                "the quotient data is corrupt")
        return tuple(sol[:self.dimension])

    def class_of(self, form: Form) -> tuple[Fraction, ...]:
        coords = self.complex.coords(form, self.degree)
        if coords is None:
            raise InternalConsistencyError(
                f"form of degree {form.degree} is not an element of the "
                f"degree-{self.degree} slice of the subcomplex")
        if self.dimension == 0 and not coords:
            return ()
        return self.class_of_coords(coords)

    def __repr__(self):
        return (f"<CohomologySpace degree {self.degree} "
                f"dimension {self.dimension}>")


def _combine(basis: Sequence[Form], coords: Sequence[Fraction],
             n_gen: int, degree: int) -> Form:
    acc = Form.zero(n_gen, degree if 0 <= degree else 0)
    for f, c in zip(basis, coords):
        if c:
            acc = acc + c * f
    return acc


def full_complex(model: StructureModel) -> Subcomplex:
    """The whole invariant complex, with the monomial basis per degree."""
    n = model.n_gen
    bases = [[Form(n, k, {m: Fraction(1)}) for m in degree_masks(n, k)]
             for k in range(n + 1)]
    return Subcomplex(model, (), bases)


def basic_complex(model: StructureModel,
                  fields: Sequence[Vector]) -> Subcomplex:
    """Joint kernel of i_v and L_v for every listed field, per degree.

    With an empty field list this is the full complex.
    """
    fields = tuple(fields)
    for v in fields:
        if v.n_gen != model.n_gen:
            raise ModelMismatchError("field does not live over this model")
    if not fields:
        return full_complex(model)
    n = model.n_gen
    bases: list[list[Form]] = []
    for k in range(n + 1):
        masks = degree_masks(n, k)
        monos = [Form(n, k, {m: Fraction(1)}) for m in masks]
        cond_rows = []
        for f in monos:
            row: list[Fraction] = []
            for v in fields:
                row.extend(form_coords(contract(v, f)))
                row.extend(form_coords(model.lie_derivative(v, f)))
            cond_rows.append(row)
        ncols = len(cond_rows[0]) if cond_rows else 0
        kernel = linalg.left_kernel(cond_rows, ncols)
        bases.append([_combine(monos, row, n, k) for row in kernel])
    return Subcomplex(model, fields, bases)


def cohomology(cplx: Subcomplex, k: int) -> CohomologySpace:
    """Exact degree-k cohomology with canonical representatives."""
    if not 0 <= k <= cplx.model.n_gen:
        raise DegreeError(f"degree {k} outside [0, {cplx.model.n_gen}]")
    return cplx.space(k)


def betti_numbers(cplx: Subcomplex) -> tuple[int, ...]:
    """Cohomology dimensions of all degrees 0..n_gen."""
    return tuple(cplx.space(k).dimension
                 for k in range(cplx.model.n_gen + 1))


# ----- splitting isomorphisms ---------------------------------------------


@dataclass(frozen=True)
class SplittingMap:
    """Matrix of ([b], [b']) -> [b + w ^ b'] in the representative bases.

    Rows list the images of the H^k(outer) representatives followed by the
    H^(k-1)(outer) representatives; columns index H^k(inner).
    """

    degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    outer_dims: tuple[int, int]
    inner_dim: int


@dataclass(frozen=True)
class SplittingDegree:
    degree: int
    inner_dim: int
    outer_dim: int
    outer_prev_dim: int
    square: bool
    invertible: bool


@dataclass(frozen=True)
class SplittingReport:
    degrees: tuple[SplittingDegree, ...]
    ok: bool

    def to_dict(self):
        return {
            "ok": self.ok,
            "degrees": [
                {"k": e.degree, "inner_dim": e.inner_dim,
                 "outer_dim": e.outer_dim, "outer_prev_dim": e.outer_prev_dim,
                 "square": e.square, "invertible": e.invertible}
                for e in self.degrees],
        }


def _check_splitting_setup(model: StructureModel, w_form: Form,
                           inner: Subcomplex, outer: Subcomplex) -> None:
    if inner.model != model or outer.model != model:
        raise ModelMismatchError("subcomplexes must share the given model")
    if w_form.degree != 1 or w_form.n_gen != model.n_gen:
        raise DegreeError("w must be a 1-form over the model")
    if not model.d(w_form).is_zero():
        raise NotClosedError("the splitting 1-form w must be closed")
    inner_fields = list(inner.fields)
    outer_fields = list(outer.fields)
    extras = [f for f in outer_fields if f not in inner_fields]
    if (len(extras) != 1 or len(outer_fields) != len(inner_fields) + 1
            or any(f not in outer_fields for f in inner_fields)):
        raise PreconditionError(
            "outer fields must extend the inner fields by exactly one")
    w_field = extras[0]
    if w_field.pair(w_form) != 1:
        raise PreconditionError("w must evaluate to 1 on the added field")
    for f in inner_fields:
        if f.pair(w_form) != 0:
            raise PreconditionError("w must vanish on the inner fields")


def splitting_map(model: StructureModel, w_form: Form, inner: Subcomplex,
                  outer: Subcomplex, k: int) -> SplittingMap:
    """The degree-k splitting map H^k(outer) + H^(k-1)(outer) -> H^k(inner)."""
    _check_splitting_setup(model, w_form, inner, outer)
    if not 0 <= k <= model.n_gen:
        raise DegreeError(f"degree {k} outside [0, {model.n_gen}]")
    src1 = outer.space(k)
    src0 = outer.space(k - 1)
    dst = inner.space(k)
    rows = []
    for rep in src1.representatives:
        rows.append(tuple(dst.class_of(rep)))
    for rep in src0.representatives:
        rows.append(tuple(dst.class_of(w_form.wedge(rep))))
    return SplittingMap(k, tuple(rows),
                        (src1.dimension, src0.dimension), dst.dimension)


def splitting_check(model: StructureModel, w_form: Form, inner: Subcomplex,
                    outer: Subcomplex) -> SplittingReport:
    """Verify the splitting map is square and invertible in every degree."""
    entries = []
    for k in range(model.n_gen + 1):
        sm = splitting_map(model, w_form, inner, outer, k)
        nrows = len(sm.matrix)
        square = nrows == sm.inner_dim
        invertible = square and linalg.rank(
            [list(r) for r in sm.matrix], sm.inner_dim) == sm.inner_dim
        entries.append(SplittingDegree(k, sm.inner_dim, sm.outer_dims[0],
                                       sm.outer_dims[1], square, invertible))
    return SplittingReport(tuple(entries), all(e.invertible for e in entries))
