"""Hard Lefschetz relations, maps, pairings and exact-sequence checks.

Throughout, L is exterior multiplication by d(eta).  The degree-k Lefschetz
relation of an l.c.s. structure of the first kind pairs the class of every
admissible k-form gamma (closed, L_U gamma = 0, i_V gamma = 0,
L^(n-k+2) gamma = 0, L^(n-k+1)(omega ^ gamma) = 0) with the class of

    eta ^ L^(n-k)(L i_U gamma - omega ^ gamma),

and the structure is Lefschetz in degree k when that relation is the graph
of an isomorphism H^k -> H^(2n+2-k).  The Lee-basic and contact variants
follow the same pattern with the simpler admissibility conditions
(closed, i_V beta = 0, L^(n-k+1) beta = 0) and target eta ^ L^(n-k) beta.
Everything is decided by exact rank computations; powers of L that exceed
the top degree are the zero map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import linalg
from .cohomology import (CohomologySpace, Subcomplex, basic_complex,
                         betti_numbers, full_complex, splitting_check)
from .errors import (DegreeError, InternalConsistencyError, NotLefschetzError,
                     NotProjectableError, PreconditionError)
from .exterior import Form, contract, form_coords, top_coefficient, wedge_power
from .structures import ContactStructure, LcsStructure, quotient_contact


@lru_cache(maxsize=128)
def _full(model) -> Subcomplex:
    return full_complex(model)


@lru_cache(maxsize=128)
def _basic(model, fields) -> Subcomplex:
    return basic_complex(model, fields)


def _check_k(k: int, n: int) -> None:
    if not 0 <= k <= n:
        raise DegreeError(f"Lefschetz degree {k} outside [0, {n}]")


# ----- relations -----------------------------------------------------------


@dataclass(frozen=True)
class CohomologyRelation:
    """A linear subspace of H^a x H^b, stored by its canonical RREF basis."""

    source: CohomologySpace
    target: CohomologySpace
    span: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_pairs(cls, source: CohomologySpace, target: CohomologySpace,
                   pairs) -> "CohomologyRelation":
        rows = [list(x) + list(y) for x, y in pairs]
        span = linalg.row_space(rows, source.dimension + target.dimension)
        return cls(source, target, tuple(tuple(r) for r in span))


@dataclass(frozen=True)
class LefschetzVerdict:
    """Graph-of-isomorphism diagnosis of a cohomology relation."""

    degree: int
    is_total: bool
    is_functional: bool
    is_injective: bool
    is_surjective: bool
    matrix: tuple[tuple[Fraction, ...], ...] | None

    @property
    def is_graph_of_isomorphism(self) -> bool:
        return (self.is_total and self.is_functional
                and self.is_injective and self.is_surjective)

    def to_dict(self):
        return {"k": self.degree, "total": self.is_total,
                "functional": self.is_functional,
                "injective": self.is_injective,
                "surjective": self.is_surjective,
                "graph_of_isomorphism": self.is_graph_of_isomorphism}


def is_graph_of_isomorphism(relation: CohomologyRelation) -> LefschetzVerdict:
    """Decide totality, functionality and invertibility by exact ranks."""
    da = relation.source.dimension
    db = relation.target.dimension
    rows = [list(r) for r in relation.span]
    x_rows = [r[:da] for r in rows]
    x_rank = linalg.rank(x_rows, da)
    total = x_rank == da
    functional = x_rank == len(rows)
    injective = surjective = False
    matrix = None
    if total and functional:
        y_rows = [r[da:] for r in rows]
        x_inv = linalg.inverse(x_rows)
        if x_inv is None:
            raise InternalConsistencyError("total functional relation with "
                                           "singular first projection")
        m = linalg.matmul(x_inv, y_rows, db)
        r = linalg.rank(m, db)
        injective = r == da
        surjective = r == db
        matrix = tuple(tuple(row) for row in m)
    return LefschetzVerdict(relation.source.degree, total, functional,
                            injective, surjective, matrix)


def _admissible_forms(cplx: Subcomplex, degree: int,
                      operators: Sequence[Callable[[Form], Form]]) -> list[Form]:
    """Canonical basis of the joint kernel of the operators on a slice."""
    basis = cplx.basis(degree)
    if not basis:
        return []
    rows = []
    for f in basis:
        row: list[Fraction] = []
        for op in operators:
            row.extend(form_coords(op(f)))
        rows.append(row)
    kernel = linalg.left_kernel(rows, len(rows[0]))
    n = cplx.model.n_gen
    out = []
    for coords in kernel:
        acc = Form.zero(n, degree)
        for f, c in zip(basis, coords):
            if c:
                acc = acc + c * f
        out.append(acc)
    return out


def de_rham_lefschetz_relation(struct: LcsStructure,
                               k: int) -> CohomologyRelation:
    """The degree-k relation between H^k and H^(2n+2-k)."""
    n = struct.n
    _check_k(k, n)
    model = struct.model
    cplx = _full(model)
    deta = model.d(struct.eta)
    src = cplx.space(k)
    dst = cplx.space(2 * n + 2 - k)
    l_high = wedge_power(deta, n - k + 2)
    l_mid = wedge_power(deta, n - k + 1)
    l_low = wedge_power(deta, n - k)
    ops = (model.d,
           lambda f: model.lie_derivative(struct.U, f),
           lambda f: contract(struct.V, f),
           lambda f: l_high.wedge(f),
           lambda f: l_mid.wedge(struct.omega.wedge(f)))
    pairs = []
    for gamma in _admissible_forms(cplx, k, ops):
        if gamma.degree > 0:
            liu = deta.wedge(contract(struct.U, gamma))
        else:
            liu = Form.zero(model.n_gen, 1)
        target = struct.eta.wedge(l_low.wedge(liu - struct.omega.wedge(gamma)))
        if not model.d(target).is_zero():
            raise InternalConsistencyError(
                f"relation target in degree {k} is not closed")
        pairs.append((src.class_of(gamma), dst.class_of(target)))
    return CohomologyRelation.from_pairs(src, dst, pairs)


def basic_lefschetz_relation(struct: LcsStructure,
                             k: int) -> CohomologyRelation:
    """The degree-k relation inside the Lee-basic complex."""
    n = struct.n
    _check_k(k, n)
    model = struct.model
    cplx = _basic(model, (struct.U,))
    deta = model.d(struct.eta)
    src = cplx.space(k)
    dst = cplx.space(2 * n + 1 - k)
    l_mid = wedge_power(deta, n - k + 1)
    l_low = wedge_power(deta, n - k)
    ops = (model.d,
           lambda f: contract(struct.V, f),
           lambda f: l_mid.wedge(f))
    pairs = []
    for beta in _admissible_forms(cplx, k, ops):
        target = struct.eta.wedge(l_low.wedge(beta))
        if not model.d(target).is_zero():
            raise InternalConsistencyError(
                f"basic relation target in degree {k} is not closed")
        pairs.append((src.class_of(beta), dst.class_of(target)))
    return CohomologyRelation.from_pairs(src, dst, pairs)


def contact_lefschetz_relation(contact: ContactStructure,
                               k: int) -> CohomologyRelation:
    """The degree-k relation between H^k(N) and H^(2n+1-k)(N)."""
    n = contact.n
    _check_k(k, n)
    model = contact.model
    cplx = _full(model)
    deta = model.d(contact.eta)
    src = cplx.space(k)
    dst = cplx.space(2 * n + 1 - k)
    l_mid = wedge_power(deta, n - k + 1)
    l_low = wedge_power(deta, n - k)
    ops = (model.d,
           lambda f: contract(contact.xi, f),
           lambda f: l_mid.wedge(f))
    pairs = []
    for beta in _admissible_forms(cplx, k, ops):
        target = contact.eta.wedge(l_low.wedge(beta))
        if not model.d(target).is_zero():
            raise InternalConsistencyError(
                f"contact relation target in degree {k} is not closed")
        pairs.append((src.class_of(beta), dst.class_of(target)))
    return CohomologyRelation.from_pairs(src, dst, pairs)


def lefschetz_map_de_rham(struct: LcsStructure, k: int):
    """Matrix of the degree-k Lefschetz isomorphism H^k -> H^(2n+2-k)."""
    verdict = is_graph_of_isomorphism(de_rham_lefschetz_relation(struct, k))
    if not verdict.is_graph_of_isomorphism:
        raise NotLefschetzError(k, verdict)
    return verdict.matrix


def lefschetz_map_basic(struct: LcsStructure, k: int):
    """Matrix of the degree-k Lee-basic Lefschetz isomorphism."""
    verdict = is_graph_of_isomorphism(basic_lefschetz_relation(struct, k))
    if not verdict.is_graph_of_isomorphism:
        raise NotLefschetzError(k, verdict)
    return verdict.matrix


# ----- transversal machinery -----------------------------------------------


@dataclass(frozen=True)
class TransversalLefschetz:
    """Cup with (d eta)^(n-k) on the (U,V)-basic cohomology."""

    degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    source_dim: int
    target_dim: int
    invertible: bool


def uv_basic_lefschetz(struct: LcsStructure, k: int) -> TransversalLefschetz:
    """The transversal Lefschetz map H^k_B(U,V) -> H^(2n-k)_B(U,V)."""
    n = struct.n
    _check_k(k, n)
    model = struct.model
    uv = _basic(model, (struct.U, struct.V))
    deta = model.d(struct.eta)
    src = uv.space(k)
    dst = uv.space(2 * n - k)
    power = wedge_power(deta, n - k)
    rows = [list(dst.class_of(power.wedge(rep)))
            for rep in src.representatives]
    invertible = (src.dimension == dst.dimension
                  and linalg.rank(rows, dst.dimension) == src.dimension)
    return TransversalLefschetz(k, tuple(tuple(r) for r in rows),
                                src.dimension, dst.dimension, invertible)


def _induced_relation(src_space: CohomologySpace, dst_space: CohomologySpace,
                      op: Callable[[Form], Form]) -> CohomologyRelation:
    """Class pairs ([x], [op x]) over every x the operator behaves on.

    x ranges over closed slice elements whose image lands in the target
    slice and is closed there.
    """
    cplx = src_space.complex
    dst_cplx = dst_space.complex
    a = src_space.degree
    b = dst_space.degree
    model = cplx.model
    basis = cplx.basis(a)
    if not basis:
        return CohomologyRelation.from_pairs(src_space, dst_space, [])
    in_range = 0 <= b <= model.n_gen
    dst_rref, dst_pivots = dst_cplx.slice_rref(b)
    rows = []
    for f in basis:
        g = op(f)
        row = list(form_coords(model.d(f)))
        if in_range:
            row.extend(linalg.reduce_mod_rows(form_coords(g), dst_rref,
                                              dst_pivots))
            row.extend(form_coords(model.d(g)))
        else:
            row.extend(form_coords(g))
        rows.append(row)
    kernel = linalg.left_kernel(rows, len(rows[0]))
    pairs = []
    n = model.n_gen
    for coords in kernel:
        acc = Form.zero(n, a)
        for f, c in zip(basis, coords):
            if c:
                acc = acc + c * f
        pairs.append((src_space.class_of(acc), dst_space.class_of(op(acc))))
    return CohomologyRelation.from_pairs(src_space, dst_space, pairs)


def _induced_map(src_space: CohomologySpace, dst_space: CohomologySpace,
                 op: Callable[[Form], Form], label: str) -> linalg.Matrix:
    """Matrix of the class map induced by op, or an error if ill defined."""
    rel = _induced_relation(src_space, dst_space, op)
    da = src_space.dimension
    db = dst_space.dimension
    rows = [list(r) for r in rel.span]
    x_rows = [r[:da] for r in rows]
    x_rank = linalg.rank(x_rows, da)
    if x_rank < da:
        raise InternalConsistencyError(
            f"{label} is not defined on every class in the invariant model")
    if x_rank < len(rows):
        raise InternalConsistencyError(
            f"{label} is not single valued on classes in the invariant model")
    if da == 0:
        return []
    x_inv = linalg.inverse(x_rows)
    return linalg.matmul(x_inv, [r[da:] for r in rows], db)


def t_map(struct: LcsStructure, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """The composite [id] . (transversal Lefschetz)^-1 . [i_V] from
    H^(2n+1-k)_B(U) to H^k_B(U); the two-sided inverse of the Lee-basic
    Lefschetz map whenever that map exists."""
    n = struct.n
    _check_k(k, n)
    model = struct.model
    u_cplx = _basic(model, (struct.U,))
    uv = _basic(model, (struct.U, struct.V))
    lef_uv = uv_basic_lefschetz(struct, k)
    if not lef_uv.invertible:
        raise PreconditionError(
            f"transversal Lefschetz map is not invertible in degree {k}")
    src = u_cplx.space(2 * n + 1 - k)
    mid = uv.space(2 * n - k)
    low = uv.space(k)
    dst = u_cplx.space(k)
    iv = _induced_map(src, mid, lambda f: contract(struct.V, f),
                      "[i_V] on Lee-basic classes")
    inc = _induced_map(low, dst, lambda f: f, "[id] on (U,V)-basic classes")
    l_inv = linalg.inverse([list(r) for r in lef_uv.matrix])
    t = linalg.matmul(linalg.matmul(iv, l_inv, low.dimension), inc,
                      dst.dimension)
    try:
        basic = lefschetz_map_basic(struct, k)
    except NotLefschetzError:
        basic = None
    if basic is not None:
        left = linalg.matmul([list(r) for r in basic], t, dst.dimension)
        right = linalg.matmul(t, [list(r) for r in basic], src.dimension)
        if left != linalg.identity(dst.dimension) or \
                right != linalg.identity(src.dimension):
            raise InternalConsistencyError(
                f"T_{k} is not inverse to the basic Lefschetz map")
    return tuple(tuple(row) for row in t)


# ----- flow exact sequences -------------------------------------------------


@dataclass(frozen=True)
class FlowChainReport:
    """Exactness data of one Gysin-type chain."""

    label: str
    node_labels: tuple[str, ...]
    dims: tuple[int, ...]
    well_defined: bool
    failures: tuple[str, ...]
    compositions_vanish: bool
    exact_at: tuple[bool, ...]
    exact: bool

    def to_dict(self):
        return {"label": self.label,
                "nodes": list(self.node_labels),
                "dims": list(self.dims),
                "well_defined": self.well_defined,
                "failures": list(self.failures),
                "compositions_vanish": self.compositions_vanish,
                "exact": self.exact}


@dataclass(frozen=True)
class GysinReport:
    """Both rows of the flow diagram plus their splitting linkage."""

    top: FlowChainReport
    bottom: FlowChainReport
    splitting_v: object
    splitting_full: object
    squares_commute: bool | None

    @property
    def ok(self) -> bool:
        return (self.top.well_defined and self.top.compositions_vanish
                and self.top.exact and self.bottom.well_defined
                and self.bottom.compositions_vanish and self.bottom.exact
                and self.splitting_v.ok and self.splitting_full.ok
                and bool(self.squares_commute))

    def to_dict(self):
        return {"ok": self.ok,
                "top": self.top.to_dict(),
                "bottom": self.bottom.to_dict(),
                "splitting_inner_v": self.splitting_v.to_dict(),
                "splitting_full": self.splitting_full.to_dict(),
                "squares_commute": self.squares_commute}


def _flow_chain(label: str, b_cplx: Subcomplex, a_cplx: Subcomplex,
                b_name: str, a_name: str,
                eps_op, inc_op, iv_op, top_k: int) -> FlowChainReport:
    spaces = [b_cplx.space(-2)]
    node_labels = [f"{b_name}(-2)"]
    maps: list[linalg.Matrix | None] = []
    failures: list[str] = []

    def append(space, name, op, desc):
        src = spaces[-1]
        try:
            maps.append(_induced_map(src, space, op, desc))
        except InternalConsistencyError as exc:
            maps.append(None)
            failures.append(str(exc))
        spaces.append(space)
        node_labels.append(name)

    for k in range(-2, top_k + 1):
        append(b_cplx.space(k + 2), f"{b_name}({k + 2})", eps_op,
               f"[eps_deta] {b_name}({k})->{b_name}({k + 2})")
        append(a_cplx.space(k + 2), f"{a_name}({k + 2})", inc_op,
               f"[id] {b_name}({k + 2})->{a_name}({k + 2})")
        append(b_cplx.space(k + 1), f"{b_name}({k + 1})", iv_op,
               f"[i_V] {a_name}({k + 2})->{b_name}({k + 1})")
    dims = tuple(sp.dimension for sp in spaces)
    well_defined = not failures
    if not well_defined:
        return FlowChainReport(label, tuple(node_labels), dims, False,
                               tuple(failures), False, (), False)
    comps_ok = True
    for i in range(len(maps) - 1):
        prod = linalg.matmul(maps[i], maps[i + 1], dims[i + 2])
        if not linalg.is_zero_matrix(prod):
            comps_ok = False
            failures.append(f"composition through {node_labels[i + 1]} "
                            f"does not vanish")
    exact_at = []
    for i in range(1, len(spaces) - 1):
        rank_in = linalg.rank(maps[i - 1], dims[i])
        rank_out = linalg.rank(maps[i], dims[i + 1])
        exact_at.append(rank_in == dims[i] - rank_out)
    exact = all(exact_at)
    if not exact:
        bad = [node_labels[i + 1] for i, ok in enumerate(exact_at) if not ok]
        failures.append(f"exactness fails at {', '.join(bad)}")
    return FlowChainReport(label, tuple(node_labels), dims, True,
                           tuple(failures), comps_ok, tuple(exact_at),
                           exact and comps_ok)


def _splitting_rows(w_form: Form, inner: Subcomplex, outer: Subcomplex,
                    k: int) -> linalg.Matrix:
    src1 = outer.space(k)
    src0 = outer.space(k - 1)
    dst = inner.space(k)
    rows = [list(dst.class_of(rep)) for rep in src1.representatives]
    rows += [list(dst.class_of(w_form.wedge(rep)))
             for rep in src0.representatives]
    return rows


def _squares_commute(struct: LcsStructure, v_cplx: Subcomplex,
                     full_c: Subcomplex, uv: Subcomplex,
                     u_cplx: Subcomplex) -> bool:
    model = struct.model
    deta = model.d(struct.eta)
    omega = struct.omega

    def eps_op(f):
        return deta.wedge(f)

    def iv_op(f):
        return contract(struct.V, f)

    def ident(f):
        return f

    n_gen = model.n_gen
    for k in range(0, n_gen + 1):
        sv_k = _splitting_rows(omega, v_cplx, uv, k)
        sv_k2 = _splitting_rows(omega, v_cplx, uv, k + 2)
        sv_km1 = _splitting_rows(omega, v_cplx, uv, k - 1)
        sf_k = _splitting_rows(omega, full_c, u_cplx, k)
        eps_v = _induced_map(v_cplx.space(k), v_cplx.space(k + 2), eps_op,
                             "[eps]")
        inc_v = _induced_map(v_cplx.space(k), full_c.space(k), ident, "[id]")
        iv_full = _induced_map(full_c.space(k), v_cplx.space(k - 1), iv_op,
                               "[i_V]")
        eps_uv_k = _induced_map(uv.space(k), uv.space(k + 2), eps_op, "[eps]")
        eps_uv_km1 = _induced_map(uv.space(k - 1), uv.space(k + 1), eps_op,
                                  "[eps]")
        inc_uvu_k = _induced_map(uv.space(k), u_cplx.space(k), ident, "[id]")
        inc_uvu_km1 = _induced_map(uv.space(k - 1), u_cplx.space(k - 1),
                                   ident, "[id]")
        iv_u_k = _induced_map(u_cplx.space(k), uv.space(k - 1), iv_op,
                              "[i_V]")
        iv_u_km1 = _induced_map(u_cplx.space(k - 1), uv.space(k - 2), iv_op,
                                "[i_V]")
        dim_v_k2 = v_cplx.space(k + 2).dimension
        lhs = linalg.matmul(sv_k, eps_v, dim_v_k2)
        rhs = linalg.matmul(
            linalg.block_diag(eps_uv_k, eps_uv_km1,
                              uv.space(k + 2).dimension,
                              uv.space(k + 1).dimension),
            sv_k2, dim_v_k2)
        if lhs != rhs:
            return False
        dim_full_k = full_c.space(k).dimension
        lhs = linalg.matmul(sv_k, inc_v, dim_full_k)
        rhs = linalg.matmul(
            linalg.block_diag(inc_uvu_k, inc_uvu_km1,
                              u_cplx.space(k).dimension,
                              u_cplx.space(k - 1).dimension),
            sf_k, dim_full_k)
        if lhs != rhs:
            return False
        # i_V crosses the 1-form omega in the second summand, hence the sign
        dim_v_km1 = v_cplx.space(k - 1).dimension
        lhs = linalg.matmul(sf_k, iv_full, dim_v_km1)
        rhs = linalg.matmul(
            linalg.block_diag(iv_u_k, linalg.negate(iv_u_km1),
                              uv.space(k - 1).dimension,
                              uv.space(k - 2).dimension),
            sv_km1, dim_v_km1)
        if lhs != rhs:
            return False
    return True


def gysin_sequence_check(struct: LcsStructure) -> GysinReport:
    """Verify both flow sequences and their splitting linkage.

    The top row runs through the anti-Lee-basic cohomology and the full
    cohomology; the bottom row through the (U,V)-basic and Lee-basic
    cohomologies.  Failures are reported, never raised.
    """
    model = struct.model
    v_cplx = _basic(model, (struct.V,))
    u_cplx = _basic(model, (struct.U,))
    uv = _basic(model, (struct.U, struct.V))
    full_c = _full(model)
    deta = model.d(struct.eta)

    def eps_op(f):
        return deta.wedge(f)

    def inc_op(f):
        return f

    def iv_op(f):
        return contract(struct.V, f)

    top = _flow_chain("anti-Lee flow sequence", v_cplx, full_c,
                      "H_B(V)", "H", eps_op, inc_op, iv_op, model.n_gen)
    bottom = _flow_chain("transversal flow sequence", uv, u_cplx,
                         "H_B(U,V)", "H_B(U)", eps_op, inc_op, iv_op,
                         model.n_gen)
    splitting_v = splitting_check(model, struct.omega, v_cplx, uv)
    splitting_full = splitting_check(model, struct.omega, full_c, u_cplx)
    squares = None
    if top.well_defined and bottom.well_defined:
        squares = _squares_commute(struct, v_cplx, full_c, uv, u_cplx)
    return GysinReport(top, bottom, splitting_v, splitting_full, squares)


# ----- pairing, parity, equivalence -----------------------------------------


@dataclass(frozen=True)
class PairingResult:
    """The bilinear form psi on degree-k Lee-basic cohomology."""

    degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    nondegenerate: bool
    parity_ok: bool
    symmetric: bool
    skew: bool

    def to_dict(self):
        return {"k": self.degree,
                "matrix": [[str(x) for x in row] for row in self.matrix],
                "nondegenerate": self.nondegenerate,
                "parity_ok": self.parity_ok,
                "symmetric": self.symmetric,
                "skew": self.skew}


def pairing_psi(struct: LcsStructure, k: int) -> PairingResult:
    """Gram matrix of psi([a], [b]) on the representative basis.

    psi pairs a class with the Lefschetz image of the other through the
    top coefficient of omega ^ lef(a) ^ b; defined whenever the Lee-basic
    Lefschetz map exists in degree k.
    """
    n = struct.n
    if not 1 <= k <= n:
        raise DegreeError(f"psi is defined for 1 <= k <= {n}, got {k}")
    lef = lefschetz_map_basic(struct, k)
    model = struct.model
    u_cplx = _basic(model, (struct.U,))
    src = u_cplx.space(k)
    dst = u_cplx.space(2 * n + 1 - k)
    lef_forms = []
    for i in range(src.dimension):
        acc = Form.zero(model.n_gen, 2 * n + 1 - k)
        for j, rep in enumerate(dst.representatives):
            if lef[i][j]:
                acc = acc + lef[i][j] * rep
        lef_forms.append(acc)
    psi = []
    for i in range(src.dimension):
        row = []
        for j, rep_j in enumerate(src.representatives):
            row.append(top_coefficient(
                struct.omega.wedge(lef_forms[i]).wedge(rep_j)))
        psi.append(row)
    d = src.dimension
    sign = -1 if k % 2 else 1
    parity_ok = all(psi[j][i] == sign * psi[i][j]
                    for i in range(d) for j in range(d))
    symmetric = all(psi[j][i] == psi[i][j]
                    for i in range(d) for j in range(d))
    skew = all(psi[j][i] == -psi[i][j]
               for i in range(d) for j in range(d))
    nondegenerate = linalg.rank(psi, d) == d
    return PairingResult(k, tuple(tuple(r) for r in psi), nondegenerate,
                         parity_ok, symmetric, skew)


@dataclass(frozen=True)
class BettiParityReport:
    """Betti numbers, Lee-basic Betti numbers and their two identities."""

    betti: tuple[int, ...]
    basic_betti: tuple[int, ...]
    parity_ok: bool
    odd_failures: tuple[int, ...]
    sum_identity_ok: bool

    def to_dict(self):
        return {"betti": list(self.betti),
                "basic_betti": list(self.basic_betti),
                "parity_ok": self.parity_ok,
                "odd_failures": list(self.odd_failures),
                "b_equals_c_sum": self.sum_identity_ok}


def betti_parity_check(struct: LcsStructure) -> BettiParityReport:
    """Evenness of b_k - b_(k-1) for odd k <= n, and b_k = c_k + c_(k-1)."""
    model = struct.model
    betti = betti_numbers(_full(model))
    basic = betti_numbers(_basic(model, (struct.U,)))
    failures = []
    for k in range(1, struct.n + 1, 2):
        if (betti[k] - betti[k - 1]) % 2:
            failures.append(k)
    sum_ok = all(betti[k] == basic[k] + (basic[k - 1] if k else 0)
                 for k in range(model.n_gen + 1))
    return BettiParityReport(betti, basic, not failures, tuple(failures),
                             sum_ok)


@dataclass(frozen=True)
class DegreeVerdicts:
    degree: int
    de_rham: bool
    basic: bool
    contact: bool | None


@dataclass(frozen=True)
class LefschetzEquivalenceReport:
    """Per-degree Lefschetz verdicts in the three pictures.

    The aggregates must agree for structures satisfying the parallel-Lee
    hypotheses; disagreement is reported as a model assumption violation,
    never reconciled silently.
    """

    per_degree: tuple[DegreeVerdicts, ...]
    de_rham_all: bool
    basic_all: bool
    contact_all: bool | None
    contact_available: bool
    agree: bool
    note: str

    def to_dict(self):
        return {"per_degree": [
                    {"k": v.degree, "de_rham": v.de_rham, "basic": v.basic,
                     "contact": v.contact} for v in self.per_degree],
                "de_rham_all": self.de_rham_all,
                "basic_all": self.basic_all,
                "contact_all": self.contact_all,
                "contact_available": self.contact_available,
                "agree": self.agree,
                "note": self.note}


def lefschetz_equivalence_report(struct: LcsStructure) -> LefschetzEquivalenceReport:
    """Evaluate all three verdict vectors and compare their aggregates."""
    n = struct.n
    contact = None
    try:
        contact = quotient_contact(struct)
    except NotProjectableError:
        contact = None
    per = []
    for k in range(n + 1):
        dr = is_graph_of_isomorphism(
            de_rham_lefschetz_relation(struct, k)).is_graph_of_isomorphism
        ba = is_graph_of_isomorphism(
            basic_lefschetz_relation(struct, k)).is_graph_of_isomorphism
        co = None
        if contact is not None:
            co = is_graph_of_isomorphism(
                contact_lefschetz_relation(contact, k)).is_graph_of_isomorphism
        per.append(DegreeVerdicts(k, dr, ba, co))
    de_rham_all = all(v.de_rham for v in per)
    basic_all = all(v.basic for v in per)
    contact_all = (all(v.contact for v in per)
                   if contact is not None else None)
    agree = de_rham_all == basic_all and (
        contact_all is None or contact_all == de_rham_all)
    note = ("" if agree else
            "model assumption violation: the Lefschetz verdicts disagree "
            "between the de Rham, Lee-basic and quotient contact pictures")
    return LefschetzEquivalenceReport(tuple(per), de_rham_all, basic_all,
                                      contact_all, contact is not None,
                                      agree, note)


def search_lefschetz_mismatches(structures) -> list:
    """Scan structures for disagreement between the de Rham and Lee-basic
    aggregates; returns the offending (structure, report) pairs."""
    out = []
    for struct in structures:
        report = lefschetz_equivalence_report(struct)
        if report.de_rham_all != report.basic_all:
            out.append((struct, report))
    return out
