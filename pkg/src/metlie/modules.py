"""Finite-dimensional modules over a Lie algebra.

Validation of representations (with optional invariant symmetric form),
duals, sub/quotient modules, the module radical and socle, higher
socle/radical filtrations, and semisimplicity with the invariant split.

The radical R(W) of a submodule W is the minimal submodule with semisimple
quotient action.  It is computed in one pass as

    R = rho(N)·W + sum_i s_i(rho(z_i))·W

where N is the nilpotency radical of the algebra, the z_i lift a basis of
the centre of the reductive quotient, and s_i is the squarefree part of the
minimal polynomial of rho(z_i) on W / rho(N)·W.  A verification pass
re-applies the formula to the quotient and iterates in the (never yet
observed) event it is not already zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import polynomials as poly
from .lie import IdealChain, LieAlgebra, nilpotency_radical, quotient_algebra, center
from .linalg import (Matrix, Q, Subspace, SymmetricForm, Vector, unit_vector,
                     zero_vector)


class Representation:
    """Action matrices of a Lie algebra on Q^m, optionally orthogonal."""

    __slots__ = ("algebra", "module_dim", "action", "form",
                 "_radical_cache", "_socle_cache", "_filtration_cache")

    def __init__(self, algebra: LieAlgebra, action: Sequence[Matrix],
                 form: Optional[SymmetricForm] = None, validate: bool = True,
                 module_dim: Optional[int] = None):
        if len(action) != algebra.dim:
            raise ValueError("need one action matrix per basis element")
        dims = {(m.rows, m.cols) for m in action}
        if len(dims) > 1:
            raise ValueError("action matrices of mixed sizes")
        if action:
            m = action[0].rows
        elif module_dim is not None:
            m = module_dim
        else:
            m = form.dim if form else 0
        if action and action[0].rows != action[0].cols:
            raise ValueError("action matrices must be square")
        if form is not None and form.dim != m:
            raise ValueError("form dimension differs from module dimension")
        self.algebra = algebra
        self.module_dim = m
        self.action = tuple(action)
        self.form = form
        self._radical_cache = {}
        self._socle_cache = {}
        self._filtration_cache = None
        if validate:
            witness = self.violation()
            if witness is not None:
                raise ValueError(f"not a representation: {witness}")

    def rho(self, x: Vector) -> Matrix:
        acc = Matrix.zeros(self.module_dim, self.module_dim)
        for i, xi in enumerate(x):
            if xi != 0:
                acc = acc + self.action[i].scale(xi)
        return acc

    def violation(self) -> Optional[str]:
        """First failed homomorphism or skew-adjointness identity, if any."""
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.rho(g.table[i][j])
                rhs = self.action[i] @ self.action[j] - self.action[j] @ self.action[i]
                if lhs != rhs:
                    return f"rho([e{i},e{j}]) != [rho(e{i}),rho(e{j})]"
        if self.form is not None:
            gram = self.form.gram
            for i, a in enumerate(self.action):
                if not (a.transpose() @ gram + gram @ a).is_zero():
                    return f"rho(e{i}) is not skew-adjoint for the form"
        return None

    def is_submodule(self, W: Subspace) -> bool:
        if W.ambient != self.module_dim:
            raise ValueError("ambient dimension mismatch")
        return all(W.contains(a.apply(w)) for a in self.action for w in W.basis.data)

    def full_space(self) -> Subspace:
        return Subspace.full(self.module_dim)

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.algebra == other.algebra
                and self.action == other.action
                and self.form == other.form)

    def __repr__(self):
        return (f"Representation(dim {self.module_dim} over algebra of "
                f"dim {self.algebra.dim})")


def check_representation(rep: Representation) -> Optional[str]:
    return rep.violation()


def trivial_representation(g: LieAlgebra, m: int,
                           form: Optional[SymmetricForm] = None) -> Representation:
    zero = Matrix.zeros(m, m)
    return Representation(g, (zero,) * g.dim, form=form, validate=False,
                          module_dim=m)


def adjoint_representation(g: LieAlgebra,
                           form: Optional[SymmetricForm] = None) -> Representation:
    if form is None:
        # plain adjoint modules are shared so their filtrations cache
        if "adjoint_rep" not in g._cache:
            g._cache["adjoint_rep"] = Representation(
                g, tuple(g.ad(i) for i in range(g.dim)), validate=False)
        return g._cache["adjoint_rep"]
    return Representation(g, tuple(g.ad(i) for i in range(g.dim)),
                          form=form, validate=False)


def dual_representation(rep: Representation) -> Representation:
    return Representation(rep.algebra,
                          tuple(a.transpose().scale(-1) for a in rep.action),
                          validate=False)


def sub_representation(rep: Representation, U: Subspace
                       ) -> Tuple[Representation, Matrix]:
    """Action on a submodule in its own basis, plus the inclusion matrix.

    Inclusion columns are the chosen basis vectors of U, so
    ``inclusion @ (coords in U)`` recovers ambient coordinates.
    """
    if U.dim == rep.module_dim:
        return rep, Matrix.identity(rep.module_dim)
    if not rep.is_submodule(U):
        raise ValueError("not a submodule")
    rows = U.basis.data
    inclusion = Matrix.from_columns(rows, rows=rep.module_dim)
    mats = []
    for a in rep.action:
        cols = []
        for u in rows:
            coords = U.coordinates(a.apply(u))
            assert coords is not None
            cols.append(coords)
        mats.append(Matrix.from_columns(cols, rows=U.dim))
    return Representation(rep.algebra, tuple(mats), validate=False), inclusion


def quotient_representation(rep: Representation, U: Subspace
                            ) -> Tuple[Representation, Matrix, Matrix]:
    """Action on V/U: (representation, projection V->V/U, lift V/U->V)."""
    if not rep.is_submodule(U):
        raise ValueError("not a submodule")
    comp = U.complement_in(Subspace.full(rep.module_dim))
    lift = Matrix.from_columns(comp.basis.data, rows=rep.module_dim)
    basis_change = Matrix.from_columns(U.basis.data + comp.basis.data,
                                       rows=rep.module_dim)
    inv = basis_change.inverse()
    proj = Matrix(inv.data[U.dim:], comp.dim, rep.module_dim)
    mats = tuple(proj @ a @ lift for a in rep.action)
    return Representation(rep.algebra, mats, validate=False), proj, lift


def direct_sum_representations(r1: Representation, r2: Representation,
                               algebra: Optional[LieAlgebra] = None) -> Representation:
    """Blockwise sum of two representations of the same algebra."""
    g = algebra if algebra is not None else r1.algebra
    if r1.algebra != g or r2.algebra != g:
        raise ValueError("representations of different algebras")
    m1, m2 = r1.module_dim, r2.module_dim
    mats = []
    for a, b in zip(r1.action, r2.action):
        rows = [tuple(a.data[i]) + zero_vector(m2) for i in range(m1)]
        rows += [zero_vector(m1) + tuple(b.data[i]) for i in range(m2)]
        mats.append(Matrix(rows, m1 + m2, m1 + m2))
    form = None
    if r1.form is not None and r2.form is not None:
        rows = [tuple(r1.form.gram.data[i]) + zero_vector(m2) for i in range(m1)]
        rows += [zero_vector(m1) + tuple(r2.form.gram.data[i]) for i in range(m2)]
        form = SymmetricForm(Matrix(rows, m1 + m2, m1 + m2))
    return Representation(g, tuple(mats), form=form, validate=False,
                          module_dim=m1 + m2)


def submodule_generated(rep: Representation, vectors: Sequence[Vector]) -> Subspace:
    current = Subspace.span(rep.module_dim, vectors)
    while True:
        rows = list(current.basis.data)
        nxt = Subspace.span(rep.module_dim,
                            rows + [a.apply(v) for a in rep.action for v in rows])
        if nxt == current:
            return current
        current = nxt


def _central_lifts(g: LieAlgebra, nilrad: Subspace) -> Tuple[Vector, ...]:
    """Lifts to g of a basis of the centre of the reductive quotient g/N."""
    if "central_lifts" in g._cache:
        return g._cache["central_lifts"]
    if nilrad.dim == g.dim:
        out = ()
    else:
        quotient, _, lift = quotient_algebra(g, nilrad)
        out = tuple(lift.apply(z) for z in center(quotient).basis.data)
    g._cache["central_lifts"] = out
    return out


def _image_of_subspace(mat: Matrix, W: Subspace) -> Subspace:
    return Subspace.span(mat.rows, tuple(mat.apply(w) for w in W.basis.data))


def _radical_once(rep: Representation, W: Subspace,
                  nilrad: Subspace, lifts: Tuple[Vector, ...]) -> Subspace:
    m = rep.module_dim
    pieces = []
    for r in nilrad.basis.data:
        mat = rep.rho(r)
        pieces.extend(mat.apply(w) for w in W.basis.data)
    base = Subspace.span(m, pieces)

    if lifts and W.dim > 0:
        # quotient of W by rho(N)W, with induced central actions
        sub_rep, inclusion = sub_representation(rep, W)
        base_in_W = Subspace.span(W.dim,
                                  [W.coordinates(v) for v in base.basis.data])
        qrep, proj, lift = quotient_representation(sub_rep, base_in_W)
        for z in lifts:
            induced = proj @ sub_rep.rho(z) @ lift
            s = poly.squarefree_part(poly.minimal_polynomial(induced))
            mat = poly.evaluate_matrix(s, rep.rho(z))
            pieces.extend(mat.apply(w) for w in W.basis.data)
    return Subspace.span(m, pieces)


def module_radical(rep: Representation, W: Optional[Subspace] = None) -> Subspace:
    """Minimal submodule R of W such that the action on W/R is semisimple."""
    if W is None:
        W = rep.full_space()
    if not rep.is_submodule(W):
        raise ValueError("radical of a non-submodule")
    key = W.basis
    if key in rep._radical_cache:
        return rep._radical_cache[key]
    g = rep.algebra
    nilrad = nilpotency_radical(g)
    lifts = _central_lifts(g, nilrad)
    R = _radical_once(rep, W, nilrad, lifts)
    # Defensive verification: the formula applied to W/R must give zero.
    while True:
        qspace = _quotient_module_on(rep, W, R)
        if qspace is None:
            break
        again = _radical_once(qspace[0], qspace[0].full_space(), nilrad, lifts)
        if again.dim == 0:
            break
        lifted = [qspace[2].apply(v) for v in again.basis.data]
        R = R.add(Subspace.span(rep.module_dim, lifted))
    rep._radical_cache[key] = R
    return R


def _quotient_module_on(rep: Representation, W: Subspace, R: Subspace):
    """Representation on W/R plus (proj, lift to ambient); None when W == R."""
    if R.dim == W.dim:
        return None
    sub_rep, inclusion = sub_representation(rep, W)
    R_in_W = Subspace.span(W.dim, [W.coordinates(v) for v in R.basis.data])
    qrep, proj, lift = quotient_representation(sub_rep, R_in_W)
    return qrep, proj, inclusion @ lift


def module_socle(rep: Representation, W: Optional[Subspace] = None) -> Subspace:
    """Maximal semisimple submodule, via the dual radical: S(W) = R(W*)^perp."""
    if W is None:
        W = rep.full_space()
    key = W.basis
    if key in rep._socle_cache:
        return rep._socle_cache[key]
    sub_rep, inclusion = sub_representation(rep, W)
    dual = dual_representation(sub_rep)
    rad_dual = module_radical(dual)
    ann = rad_dual.annihilator()  # vectors of W killed by every radical functional
    out = Subspace.span(rep.module_dim,
                        tuple(inclusion.apply(v) for v in ann.basis.data))
    rep._socle_cache[key] = out
    return out


@dataclass(frozen=True)
class ModuleFiltration:
    socles: IdealChain       # S_0 = 0 ⊂ S_1 ⊂ ... ⊂ V, increasing
    radicals: IdealChain     # V = R_0 ⊃ R_1 ⊃ ... ⊃ 0, decreasing

    def socle(self, k: int) -> Subspace:
        return self.socles[min(k, len(self.socles) - 1)]

    def radical(self, k: int) -> Subspace:
        return self.radicals[min(k, len(self.radicals) - 1)]


def filtration(rep: Representation) -> ModuleFiltration:
    """Higher socles by socles of quotients, higher radicals by iteration."""
    if rep._filtration_cache is not None:
        return rep._filtration_cache
    V = rep.full_space()
    socles = [Subspace.zero(rep.module_dim)]
    while socles[-1].dim < rep.module_dim:
        qrep, proj, lift = quotient_representation(rep, socles[-1])
        s = module_socle(qrep)
        lifted = [lift.apply(v) for v in s.basis.data]
        nxt = socles[-1].add(Subspace.span(rep.module_dim, lifted))
        if nxt == socles[-1]:
            raise RuntimeError("socle chain stalled before reaching the module")
        socles.append(nxt)

    radicals = [V]
    while radicals[-1].dim > 0:
        nxt = module_radical(rep, radicals[-1])
        if nxt == radicals[-1]:
            raise RuntimeError("radical chain stalled before reaching zero")
        radicals.append(nxt)

    out = ModuleFiltration(IdealChain(tuple(socles), increasing=True),
                           IdealChain(tuple(radicals), increasing=False))
    rep._filtration_cache = out
    return out


def is_semisimple(rep: Representation) -> bool:
    return module_radical(rep).dim == 0


def invariant_split(rep: Representation) -> Tuple[Subspace, Subspace]:
    """a^l and rho(l)a; complementary for semisimple rep, orthogonal if formed."""
    if not is_semisimple(rep):
        raise ValueError("invariant_split requires a semisimple representation")
    m = rep.module_dim
    if rep.algebra.dim == 0:
        return Subspace.full(m), Subspace.zero(m)
    stacked = rep.action[0]
    for a in rep.action[1:]:
        stacked = stacked.vstack(a)
    invariants = Subspace(m, stacked.nullspace().rref()[0])
    image_rows = [a.apply(unit_vector(m, j)) for a in rep.action for j in range(m)]
    complement = Subspace.span(m, image_rows)
    return invariants, complement


def dual_and_sub_quotient(rep: Representation, U: Subspace):
    """Convenience bundle: dual, sub on U (with inclusion), quotient (proj, lift)."""
    dual = dual_representation(rep)
    sub, inclusion = sub_representation(rep, U)
    quot, proj, lift = quotient_representation(rep, U)
    return dual, (sub, inclusion), (quot, proj, lift)
