"""Metric Lie algebras and their canonical quadratic-extension data.

Validation of invariant nondegenerate forms, the index, the canonical
isotropic ideal i(g) with its orthogonal complement j(g) computed from the
socle/radical filtration of the adjoint module, simple-ideal detection, and
extraction of the base algebra, orthogonal module, section and quadratic
cocycle from any metric Lie algebra without simple ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cohomology import Cochain, CochainComplex, QuadraticCocycle
from .lie import (InternalCheckError, LieAlgebra, is_ideal,
                  quotient_algebra, solvable_radical, subalgebra_restriction,
                  unit_vector)
from .linalg import (Matrix, Q, Subspace, SymmetricForm,
                     orthogonal_complement, signature, vec_scale, vec_sub)
from .modules import (ModuleFiltration, Representation, adjoint_representation,
                      filtration)


class MetricValidationError(ValueError):
    pass


class SimpleIdealError(ValueError):
    """The canonical extension is undefined when a simple ideal is present."""

    def __init__(self, ideal: Subspace):
        super().__init__(f"metric algebra contains a simple ideal of dim {ideal.dim}")
        self.ideal = ideal


class MetricLieAlgebra:
    """Lie algebra with an invariant nondegenerate symmetric form."""

    __slots__ = ("algebra", "form", "_cache")

    def __init__(self, algebra: LieAlgebra, form: SymmetricForm,
                 validate: bool = True):
        if form.dim != algebra.dim:
            raise MetricValidationError("form dimension differs from the algebra")
        self.algebra = algebra
        self.form = form
        self._cache = {}
        if validate:
            witness = metric_violation(algebra, form)
            if witness is not None:
                raise MetricValidationError(witness)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def index(self) -> int:
        return signature(self.form)[0]

    def adjoint_module(self) -> Representation:
        if "adjoint" not in self._cache:
            self._cache["adjoint"] = adjoint_representation(self.algebra,
                                                            form=self.form)
        return self._cache["adjoint"]

    def __repr__(self):
        return f"MetricLieAlgebra(dim {self.dim}, index {self.index()})"


def metric_violation(g: LieAlgebra, form: SymmetricForm) -> Optional[str]:
    """First degeneracy or invariance failure, or None when valid."""
    if not form.is_nondegenerate():
        return "form is degenerate"
    # invariance <[x,z],y> = <x,[z,y]> on all basis triples
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                lhs = form.evaluate(g.table[i][k], unit_vector(g.dim, j))
                rhs = form.evaluate(unit_vector(g.dim, i), g.table[k][j])
                if lhs != rhs:
                    return (f"invariance fails on basis triple ({i},{k},{j}): "
                            f"<[e{i},e{k}],e{j}> = {lhs} but <e{i},[e{k},e{j}]> = {rhs}")
    return None


def validate_metric(g: LieAlgebra, form: SymmetricForm) -> MetricLieAlgebra:
    return MetricLieAlgebra(g, form)


def index(metric: MetricLieAlgebra) -> int:
    return metric.index()


@dataclass(frozen=True)
class CanonicalIdeals:
    isotropic: Subspace      # i(g) = sum of R_k ∩ S_k
    coisotropic: Subspace    # j(g) = intersection of R_k + S_k = i(g)^perp
    filtration: ModuleFiltration
    simple_ideal: Optional[Subspace]


def canonical_ideals(metric: MetricLieAlgebra,
                     require_no_simple_ideal: bool = False) -> CanonicalIdeals:
    """i(g), j(g), and the adjoint filtration, with the dual/isotropy checks."""
    if "ideals" in metric._cache:
        ids = metric._cache["ideals"]
        if require_no_simple_ideal and ids.simple_ideal is not None:
            raise SimpleIdealError(ids.simple_ideal)
        return ids
    g = metric.algebra
    filt = filtration(metric.adjoint_module())
    iso = Subspace.zero(g.dim)
    coiso = Subspace.full(g.dim)
    depth = max(len(filt.socles), len(filt.radicals))
    for k in range(1, depth):
        r_k = filt.radical(k)
        s_k = filt.socle(k)
        iso = iso.add(r_k.intersect(s_k))
        coiso = coiso.intersect(r_k.add(s_k))
    if coiso != orthogonal_complement(iso, metric.form):
        raise InternalCheckError("canonical ideals: j(g) != i(g)^perp")
    if not metric.form.is_isotropic(iso):
        raise InternalCheckError("canonical ideals: i(g) is not isotropic")
    # duality of the filtration itself
    for k in range(depth):
        if filt.socle(k) != orthogonal_complement(filt.radical(k), metric.form):
            raise InternalCheckError(
                f"adjoint filtration: S_{k} != R_{k}^perp")
    simple = None
    if not _is_abelian_quotient(g, coiso, iso):
        simple = find_simple_ideal(metric)
        if simple is None:
            raise InternalCheckError(
                "j/i is non-abelian but no simple ideal was exhibited")
    out = CanonicalIdeals(iso, coiso, filt, simple)
    metric._cache["ideals"] = out
    if require_no_simple_ideal and simple is not None:
        raise SimpleIdealError(simple)
    return out


def _is_abelian_quotient(g: LieAlgebra, larger: Subspace, smaller: Subspace) -> bool:
    for u in larger.basis.data:
        for v in larger.basis.data:
            if not smaller.contains(g.bracket(u, v)):
                return False
    return True


def find_simple_ideal(metric: MetricLieAlgebra) -> Optional[Subspace]:
    """A simple ideal, or None; the square of the radical's form-complement
    is the candidate, confirmed by a vanishing solvable radical."""
    g = metric.algebra
    r = solvable_radical(g)
    k = orthogonal_complement(r, metric.form)
    square_rows = [g.bracket(u, v) for u in k.basis.data for v in k.basis.data]
    candidate = Subspace.span(g.dim, square_rows)
    if candidate.dim == 0:
        return None
    if not is_ideal(g, candidate):
        return None
    restricted = subalgebra_restriction(g, candidate)
    if solvable_radical(restricted).dim > 0:
        return None
    return candidate


@dataclass(frozen=True)
class ExtensionData:
    """Canonical quadratic-extension data of a metric Lie algebra.

    ``section`` has one column per basis vector of the base algebra; its
    columns span the chosen isotropic complement of the coisotropic ideal.
    ``a_lift`` columns realize the module basis inside the algebra.
    """
    metric: MetricLieAlgebra
    base: LieAlgebra
    module: Representation
    ideal: Subspace
    perp: Subspace
    section: Matrix
    a_lift: Matrix
    base_projection: Matrix
    cocycle: QuadraticCocycle

    @property
    def complex(self) -> CochainComplex:
        return self.cocycle.complex


def _hyperbolic_complement(metric: MetricLieAlgebra, iso: Subspace) -> Subspace:
    """Isotropic complement to iso^perp pairing hyperbolically with iso.

    Gram-style completion: each dual vector is solved for, orthogonalized
    against the previously chosen ones, and isotropized with its partner.
    """
    g_dim = metric.dim
    gram = metric.form.gram
    basis = iso.basis.data
    chosen = []
    for t, u in enumerate(basis):
        constraints = []
        rhs = []
        for s, v in enumerate(basis):
            constraints.append(gram.apply(v))
            rhs.append(Q(1) if s == t else Q(0))
        for w in chosen:
            constraints.append(gram.apply(w))
            rhs.append(Q(0))
        system = Matrix.from_rows(tuple(constraints), cols=g_dim)
        sol = system.solve(tuple(rhs))
        if sol is None:
            raise InternalCheckError("hyperbolic completion: dual solve failed")
        self_pair = metric.form.evaluate(sol, sol)
        if self_pair != 0:
            sol = vec_sub(sol, vec_scale(self_pair / 2, u))
        chosen.append(sol)
    return Subspace.span(g_dim, chosen)


def canonical_extension(metric: MetricLieAlgebra) -> ExtensionData:
    """Base algebra, orthogonal module, section, and extracted cocycle."""
    ideals = canonical_ideals(metric, require_no_simple_ideal=True)
    return extension_from_ideal(metric, ideals.isotropic, ideals.coisotropic)


def extension_from_ideal(metric: MetricLieAlgebra, iso: Subspace,
                         perp: Optional[Subspace] = None) -> ExtensionData:
    """Quadratic-extension data for a given isotropic ideal with abelian
    perp/ideal quotient (the canonical one, or any other valid choice)."""
    g = metric.algebra
    if perp is None:
        perp = orthogonal_complement(iso, metric.form)
    if not metric.form.is_isotropic(iso):
        raise ValueError("chosen ideal is not isotropic")
    if not is_ideal(g, iso):
        raise ValueError("chosen subspace is not an ideal")
    if not _is_abelian_quotient(g, perp, iso):
        raise ValueError("perp/ideal is not abelian; extension undefined")

    base, base_proj, _ = quotient_algebra(g, perp)
    n = base.dim

    # module a = perp/iso on a complement basis inside perp
    a_space = iso.complement_in(perp)
    m = a_space.dim
    a_lift = Matrix.from_columns(a_space.basis.data, rows=g.dim)
    # projection perp -> a-coordinates killing iso
    change = Matrix.from_columns(iso.basis.data + a_space.basis.data +
                                 _extension_complement(g, perp).basis.data,
                                 rows=g.dim)
    inv = change.inverse()
    a_proj = Matrix(inv.data[iso.dim: iso.dim + m], m, g.dim)

    gram = Matrix(tuple(tuple(metric.form.evaluate(u, v)
                              for v in a_space.basis.data)
                        for u in a_space.basis.data), m, m)
    a_form = SymmetricForm(gram)
    if not a_form.is_nondegenerate():
        raise InternalCheckError("induced form on perp/ideal is degenerate")

    section_space = _hyperbolic_complement(metric, iso)
    # reorder section columns so that base_proj ∘ section = Id
    raw = Matrix.from_columns(section_space.basis.data, rows=g.dim)
    coeff = base_proj @ raw
    section = raw @ coeff.inverse()

    action = []
    for i in range(n):
        lift_i = section.column(i)
        cols = [a_proj.apply(g.bracket(lift_i, a_lift.column(t)))
                for t in range(m)]
        action.append(Matrix.from_columns(cols, rows=m))
    module = Representation(base, tuple(action), form=a_form, validate=True)
    cx = CochainComplex(base, module)

    alpha_vals = {}
    gamma_vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = g.bracket(section.column(i), section.column(j))
            base_part = base_proj.apply(w)
            residual = vec_sub(w, section.apply(base_part))
            alpha_vals[(i, j)] = a_proj.apply(residual)
            for k in range(j + 1, n):
                gamma_vals[(i, j, k)] = (metric.form.evaluate(
                    g.bracket(section.column(i), section.column(j)),
                    section.column(k)),)
    alpha = Cochain.from_values(n, 2, m, alpha_vals)
    gamma = Cochain.from_values(n, 3, 1, gamma_vals)
    cocycle = QuadraticCocycle(cx, alpha, gamma, validate=True)

    return ExtensionData(metric=metric, base=base, module=module, ideal=iso,
                         perp=perp, section=section, a_lift=a_lift,
                         base_projection=base_proj, cocycle=cocycle)


def _extension_complement(g: LieAlgebra, perp: Subspace) -> Subspace:
    return perp.complement_in(Subspace.full(g.dim))


def extract_cocycle(data: ExtensionData,
                    section: Optional[Matrix] = None) -> QuadraticCocycle:
    """Cocycle of the extension, optionally with a user-supplied section.

    A replacement section must satisfy base_projection ∘ section = Id and
    have isotropic image; different sections give equivalent cocycles.
    """
    if section is None:
        return data.cocycle
    metric = data.metric
    g = metric.algebra
    n = data.base.dim
    check = data.base_projection @ section
    if check != Matrix.identity(n):
        raise ValueError("section does not split the base projection")
    sec_space = Subspace.span(g.dim, tuple(section.column(i) for i in range(n)))
    if not metric.form.is_isotropic(sec_space):
        raise ValueError("section image is not isotropic")

    m = data.module.module_dim
    change = Matrix.from_columns(
        data.ideal.basis.data +
        tuple(data.a_lift.column(t) for t in range(m)) +
        tuple(section.column(i) for i in range(n)), rows=g.dim)
    inv = change.inverse()
    a_proj = Matrix(inv.data[data.ideal.dim: data.ideal.dim + m], m, g.dim)

    alpha_vals = {}
    gamma_vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = g.bracket(section.column(i), section.column(j))
            base_part = data.base_projection.apply(w)
            residual = vec_sub(w, section.apply(base_part))
            alpha_vals[(i, j)] = a_proj.apply(residual)
            for k in range(j + 1, n):
                gamma_vals[(i, j, k)] = (metric.form.evaluate(
                    g.bracket(section.column(i), section.column(j)),
                    section.column(k)),)
    alpha = Cochain.from_values(n, 2, m, alpha_vals)
    gamma = Cochain.from_values(n, 3, 1, gamma_vals)
    return QuadraticCocycle(data.complex, alpha, gamma, validate=True)
