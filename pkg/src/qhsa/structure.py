"""Quasi-Hopf superalgebra structures and exact checkers for their axioms.

A structure bundles the algebra with the coproduct Delta, counit epsilon,
antipode S, coassociator Phi (arity 3), canonical elements alpha and beta
(arity 1) and an optional R-matrix (arity 2).  Identities quantified over all
of H are checked on basis elements; linearity makes that complete.
"""

from __future__ import annotations

from functools import cached_property

from .algebra import (
    AlgebraError,
    GradedAlgebra,
    SingularError,
    StructureMap,
    TensorElement,
    apply_map_legs,
    embed_legs,
    invert_structure_map,
    invert_tensor_element,
    multiply_adjacent_legs,
    outer,
    permute_legs,
)
from .reporting import (
    CheckReport,
    difference_witness,
    expect_equal,
    expect_equal_per_basis,
)


class QhsaStructure:
    """The full tuple (algebra, Delta, epsilon, S, Phi, alpha, beta [, R]).

    Immutable after construction; derived data (inverses, transposed and
    primed coproducts) is computed on first use and cached.
    """

    def __init__(self, algebra, delta, epsilon, antipode, phi, alpha, beta, r_matrix=None):
        self.algebra = algebra
        self.delta = delta
        self.epsilon = epsilon
        self.antipode = antipode
        self.phi = phi
        self.alpha = alpha
        self.beta = beta
        self.r_matrix = r_matrix

    def replace(self, **kwargs) -> "QhsaStructure":
        data = {
            "algebra": self.algebra,
            "delta": self.delta,
            "epsilon": self.epsilon,
            "antipode": self.antipode,
            "phi": self.phi,
            "alpha": self.alpha,
            "beta": self.beta,
            "r_matrix": self.r_matrix,
        }
        data.update(kwargs)
        return QhsaStructure(**data)

    # -- conveniences --------------------------------------------------------

    def unit(self, arity: int) -> TensorElement:
        return TensorElement.unit(self.algebra, arity)

    def basis(self, *word) -> TensorElement:
        return TensorElement.basis(self.algebra, word)

    def eps_of(self, x: TensorElement):
        """epsilon applied to an arity-1 element, as a field scalar."""
        return apply_map_legs(x, 0, self.epsilon).scalar_value()

    @property
    def has_r(self) -> bool:
        return self.r_matrix is not None

    @cached_property
    def phi_inv(self) -> TensorElement:
        return invert_tensor_element(self.phi)

    @cached_property
    def r_inv(self) -> TensorElement:
        if self.r_matrix is None:
            raise AlgebraError("structure has no R-matrix")
        return invert_tensor_element(self.r_matrix)

    @cached_property
    def antipode_inv(self) -> StructureMap:
        return invert_structure_map(self.antipode)

    @cached_property
    def delta_t(self) -> StructureMap:
        """Opposite coproduct: T composed with Delta."""
        return StructureMap(
            self.algebra,
            2,
            [permute_legs(img, (1, 0)) for img in self.delta.images],
        )

    @cached_property
    def ss_delta_t(self) -> StructureMap:
        """(S (x) S) applied to the opposite coproduct."""
        images = []
        for img in self.delta_t.images:
            y = apply_map_legs(img, 0, self.antipode)
            y = apply_map_legs(y, 1, self.antipode)
            images.append(y)
        return StructureMap(self.algebra, 2, images)

    @cached_property
    def delta_prime(self) -> StructureMap:
        """The coproduct (S (x) S) . T . Delta . S^{-1}."""
        sinv = self.antipode_inv
        images = []
        for i in range(self.algebra.dimension):
            y = apply_map_legs(sinv.images[i], 0, self.delta)
            y = permute_legs(y, (1, 0))
            y = apply_map_legs(y, 0, self.antipode)
            y = apply_map_legs(y, 1, self.antipode)
            images.append(y)
        return StructureMap(self.algebra, 2, images)

    @cached_property
    def eps_alpha(self):
        return self.eps_of(self.alpha)

    @cached_property
    def eps_beta(self):
        return self.eps_of(self.beta)

    def coproduct(self, x: TensorElement) -> TensorElement:
        return apply_map_legs(x, 0, self.delta)

    def s_of(self, x: TensorElement) -> TensorElement:
        return apply_map_legs(x, 0, self.antipode)


# -- recurring contraction patterns ------------------------------------------


def m_alpha_s(H: QhsaStructure, x: TensorElement) -> TensorElement:
    """m . (1 (x) alpha)(S (x) 1) applied to an arity-2 element."""
    z = apply_map_legs(x, 0, H.antipode)
    z = outer(H.unit(1), H.alpha) * z
    return multiply_adjacent_legs(z, 0)


def m_beta_s(H: QhsaStructure, x: TensorElement) -> TensorElement:
    """m . (1 (x) beta)(1 (x) S) applied to an arity-2 element."""
    z = apply_map_legs(x, 1, H.antipode)
    z = outer(H.unit(1), H.beta) * z
    return multiply_adjacent_legs(z, 0)


def phi_permuted(H: QhsaStructure, word, inverse=False) -> TensorElement:
    base = H.phi_inv if inverse else H.phi
    return permute_legs(base, word)


def mul_chain(first, *rest):
    acc = first
    for el in rest:
        acc = acc * el
    return acc


# -- validation ---------------------------------------------------------------


def validate_algebra(algebra: GradedAlgebra) -> CheckReport:
    """Grading additivity, two-sided unit, associativity on all basis triples."""
    report = CheckReport()
    par = algebra.parity
    bad = None
    for (i, j), row in algebra.mult.items():
        for k, c in row.items():
            if par[k] != (par[i] + par[j]) % 2:
                bad = (i, j, k)
                break
        if bad:
            break
    if bad:
        report.add_fail("algebra.grading", {"pair": [bad[0], bad[1]], "target": bad[2]})
    else:
        report.add_pass("algebra.grading")

    unit = TensorElement.unit(algebra, 1)
    unit_bad = None
    for i in range(algebra.dimension):
        e = TensorElement.basis(algebra, (i,))
        if unit * e != e:
            unit_bad = difference_witness(unit * e, e, basis=i)
            break
        if e * unit != e:
            unit_bad = difference_witness(e * unit, e, basis=i)
            break
    if unit_bad:
        report.add_fail("algebra.unit", unit_bad)
    else:
        report.add_pass("algebra.unit")

    d = algebra.dimension
    for i in range(d):
        ei = TensorElement.basis(algebra, (i,))
        for j in range(d):
            ej = TensorElement.basis(algebra, (j,))
            left = ei * ej
            for k in range(d):
                ek = TensorElement.basis(algebra, (k,))
                lhs = left * ek
                rhs = ei * (ej * ek)
                if lhs != rhs:
                    report.add_fail(
                        "algebra.assoc",
                        difference_witness(lhs, rhs, basis=[i, j, k]),
                    )
                    return report
    report.add_pass("algebra.assoc")
    return report


def validate_structure(H: QhsaStructure) -> CheckReport:
    """Delta, epsilon graded homomorphisms; S a graded antihomomorphism;
    parity preservation; evenness and invertibility of Phi, alpha, beta, R."""
    report = CheckReport()
    alg = H.algebra
    d = alg.dimension

    expect_equal(report, "structure.delta-unit", H.coproduct(H.unit(1)), H.unit(2))
    expect_equal_per_basis(
        report,
        "structure.delta-hom",
        lambda p: _hom_pair(H, H.delta, p),
        d * d,
    )
    if H.delta.is_parity_preserving():
        report.add_pass("structure.delta-parity")
    else:
        report.add_fail("structure.delta-parity", _parity_witness(H.delta))

    eps_unit = apply_map_legs(H.unit(1), 0, H.epsilon)
    expect_equal(
        report,
        "structure.epsilon-unit",
        eps_unit,
        TensorElement.from_scalar(alg, alg.field.one()),
    )
    expect_equal_per_basis(
        report,
        "structure.epsilon-hom",
        lambda p: _hom_pair(H, H.epsilon, p),
        d * d,
    )
    if H.epsilon.is_parity_preserving():
        report.add_pass("structure.epsilon-parity")
    else:
        report.add_fail("structure.epsilon-parity", _parity_witness(H.epsilon))

    expect_equal(report, "structure.antipode-unit", H.s_of(H.unit(1)), H.unit(1))
    par = alg.parity
    ok = True
    for i in range(d):
        for j in range(d):
            lhs = H.s_of(H.basis(i) * H.basis(j))
            rhs = H.s_of(H.basis(j)) * H.s_of(H.basis(i))
            if par[i] and par[j]:
                rhs = -rhs
            if lhs != rhs:
                report.add_fail(
                    "structure.antipode-antihom", difference_witness(lhs, rhs, basis=[i, j])
                )
                ok = False
                break
        if not ok:
            break
    if ok:
        report.add_pass("structure.antipode-antihom")
    if H.antipode.is_parity_preserving():
        report.add_pass("structure.antipode-parity")
    else:
        report.add_fail("structure.antipode-parity", _parity_witness(H.antipode))
    try:
        H.antipode_inv
        report.add_pass("structure.antipode-bijective")
    except SingularError:
        report.add_fail("structure.antipode-bijective", {"reason": "singular antipode"})

    _even_entry(report, "structure.phi-even", H.phi)
    _invertible_entry(report, "structure.phi-invertible", H, "phi_inv")
    _even_entry(report, "structure.alpha-even", H.alpha)
    _even_entry(report, "structure.beta-even", H.beta)
    if H.has_r:
        _even_entry(report, "structure.r-even", H.r_matrix)
        _invertible_entry(report, "structure.r-invertible", H, "r_inv")
    else:
        report.add_skip("structure.r-even", "no R-matrix")
        report.add_skip("structure.r-invertible", "no R-matrix")
    return report


def _hom_pair(H, f, flat_index):
    d = H.algebra.dimension
    i, j = divmod(flat_index, d)
    lhs = apply_map_legs(H.basis(i) * H.basis(j), 0, f)
    rhs = apply_map_legs(H.basis(i), 0, f) * apply_map_legs(H.basis(j), 0, f)
    return lhs, rhs


def _parity_witness(f):
    par = f.algebra.parity
    for i, img in enumerate(f.images):
        if f.out_arity == 0:
            if par[i] == 1 and not img.is_zero():
                return {"basis": i, "reason": "odd element with nonzero scalar image"}
        else:
            p = img.homogeneous_parity()
            if p is None or (img.terms and p != par[i]):
                return {"basis": i, "reason": "image not homogeneous of the right parity"}
    return {"reason": "parity violation"}


def _even_entry(report, check_id, element):
    if element.is_even():
        report.add_pass(check_id)
    else:
        report.add_fail(check_id, {"reason": "element not homogeneous even"})


def _invertible_entry(report, check_id, H, attr):
    try:
        getattr(H, attr)
        report.add_pass(check_id)
    except SingularError as exc:
        report.add_fail(check_id, {"reason": str(exc)})


# -- quasi-bialgebra axioms ----------------------------------------------------


def check_quasi_bialgebra(H: QhsaStructure) -> CheckReport:
    report = CheckReport()
    alg = H.algebra
    d = alg.dimension

    def fi_pair(a):
        da = H.coproduct(H.basis(a))
        lhs = apply_map_legs(da, 1, H.delta)
        rhs = H.phi_inv * apply_map_legs(da, 0, H.delta) * H.phi
        return lhs, rhs

    expect_equal_per_basis(report, "eq.fi", fi_pair, d)

    lhs = apply_map_legs(H.phi, 0, H.delta) * apply_map_legs(H.phi, 2, H.delta)
    rhs = mul_chain(
        embed_legs(H.phi, (0, 1, 2), 4),
        apply_map_legs(H.phi, 1, H.delta),
        embed_legs(H.phi, (1, 2, 3), 4),
    )
    expect_equal(report, "eq.fii", lhs, rhs)

    fiii_bad = None
    for a in range(d):
        da = H.coproduct(H.basis(a))
        for leg in (0, 1):
            contracted = apply_map_legs(da, leg, H.epsilon)
            if contracted != H.basis(a):
                fiii_bad = difference_witness(contracted, H.basis(a), basis=a)
                break
        if fiii_bad:
            break
    if fiii_bad:
        report.add_fail("eq.fiii", fiii_bad)
    else:
        report.add_pass("eq.fiii")

    expect_equal(report, "eq.fiv", apply_map_legs(H.phi, 1, H.epsilon), H.unit(2))
    expect_equal(
        report, "eq.phi-counit-left", apply_map_legs(H.phi, 0, H.epsilon), H.unit(2)
    )
    expect_equal(
        report, "eq.phi-counit-right", apply_map_legs(H.phi, 2, H.epsilon), H.unit(2)
    )
    return report


# -- antipode axioms ------------------------------------------------------------


def check_antipode_axioms(H: QhsaStructure) -> CheckReport:
    report = CheckReport()
    alg = H.algebra
    d = alg.dimension

    expect_equal_per_basis(
        report,
        "eq.5i1",
        lambda a: (
            m_alpha_s(H, H.coproduct(H.basis(a))),
            H.alpha.scaled(H.eps_of(H.basis(a))),
        ),
        d,
    )
    expect_equal_per_basis(
        report,
        "eq.5i",
        lambda a: (
            m_beta_s(H, H.coproduct(H.basis(a))),
            H.beta.scaled(H.eps_of(H.basis(a))),
        ),
        d,
    )

    # sum S(X) alpha Y beta S(Z) over Phi
    z = apply_map_legs(H.phi, 2, H.antipode)
    z = outer(H.unit(1), H.alpha, H.beta) * z
    z = apply_map_legs(z, 0, H.antipode)
    z = multiply_adjacent_legs(multiply_adjacent_legs(z, 0), 0)
    expect_equal(report, "eq.5ii1", z, H.unit(1))

    # sum Xbar beta S(Ybar) alpha Zbar over Phi^{-1}
    z = apply_map_legs(H.phi_inv, 1, H.antipode)
    z = outer(H.unit(1), H.beta, H.alpha) * z
    z = multiply_adjacent_legs(multiply_adjacent_legs(z, 0), 0)
    expect_equal(report, "eq.5ii", z, H.unit(1))

    one = alg.field.one()
    ok = H.eps_alpha * H.eps_beta == one and H.eps_of(H.alpha * H.beta) == one
    if ok:
        report.add_pass("eq.eps-alpha-beta")
    else:
        report.add_fail(
            "eq.eps-alpha-beta",
            {
                "eps_alpha": alg.field.format(H.eps_alpha),
                "eps_beta": alg.field.format(H.eps_beta),
            },
        )

    expect_equal_per_basis(
        report,
        "eq.eps-s",
        lambda a: (
            TensorElement.from_scalar(alg, H.eps_of(H.s_of(H.basis(a)))),
            TensorElement.from_scalar(alg, H.eps_of(H.basis(a))),
        ),
        d,
    )
    return report


# -- quasi-triangularity ---------------------------------------------------------


def _require_r(H, report, ids):
    if H.has_r:
        return True
    for check_id in ids:
        report.add_skip(check_id, "no R-matrix")
    return False


def check_quasi_triangular(H: QhsaStructure) -> CheckReport:
    report = CheckReport()
    if not _require_r(H, report, ["eq.6i", "eq.6ii", "eq.6iii", "eq.r-counit"]):
        return report
    d = H.algebra.dimension
    R = H.r_matrix

    expect_equal_per_basis(
        report,
        "eq.6i",
        lambda a: (
            apply_map_legs(H.basis(a), 0, H.delta_t) * R,
            R * H.coproduct(H.basis(a)),
        ),
        d,
    )

    lhs = apply_map_legs(R, 0, H.delta)
    rhs = mul_chain(
        phi_permuted(H, (1, 2, 0), inverse=True),
        embed_legs(R, (0, 2), 3),
        phi_permuted(H, (0, 2, 1)),
        embed_legs(R, (1, 2), 3),
        H.phi_inv,
    )
    expect_equal(report, "eq.6ii", lhs, rhs)

    lhs = apply_map_legs(R, 1, H.delta)
    rhs = mul_chain(
        phi_permuted(H, (2, 0, 1)),
        embed_legs(R, (0, 2), 3),
        phi_permuted(H, (1, 0, 2), inverse=True),
        embed_legs(R, (0, 1), 3),
        H.phi,
    )
    expect_equal(report, "eq.6iii", lhs, rhs)

    left = apply_map_legs(R, 0, H.epsilon)
    right = apply_map_legs(R, 1, H.epsilon)
    if left == H.unit(1) and right == H.unit(1):
        report.add_pass("eq.r-counit")
    else:
        report.add_fail("eq.r-counit", difference_witness(left, right))
    return report


def check_triangular(H: QhsaStructure) -> CheckReport:
    report = CheckReport()
    if not _require_r(H, report, ["eq.triangular"]):
        return report
    expect_equal(report, "eq.triangular", H.r_inv, permute_legs(H.r_matrix, (1, 0)))
    return report


def check_qqybe(H: QhsaStructure) -> CheckReport:
    """Graded quasi-quantum Yang-Baxter equation in arity 3."""
    report = CheckReport()
    if not _require_r(H, report, ["eq.7"]):
        return report
    R = H.r_matrix
    lhs = mul_chain(
        embed_legs(R, (0, 1), 3),
        phi_permuted(H, (1, 2, 0), inverse=True),
        embed_legs(R, (0, 2), 3),
        phi_permuted(H, (0, 2, 1)),
        embed_legs(R, (1, 2), 3),
        H.phi_inv,
    )
    rhs = mul_chain(
        phi_permuted(H, (2, 1, 0), inverse=True),
        embed_legs(R, (1, 2), 3),
        phi_permuted(H, (2, 0, 1)),
        embed_legs(R, (0, 2), 3),
        phi_permuted(H, (1, 0, 2), inverse=True),
        embed_legs(R, (0, 1), 3),
    )
    expect_equal(report, "eq.7", lhs, rhs)
    return report


# -- derived identities -----------------------------------------------------------


def check_pentagon_consequences(H: QhsaStructure) -> CheckReport:
    """Four rearrangements of the pentagon; the sharpest routine exercise of
    the sign engine because every product mixes split and unsplit legs."""
    report = CheckReport()
    phi, phi_inv = H.phi, H.phi_inv
    dl = H.delta

    expect_equal(
        report,
        "eq.6.1i",
        embed_legs(phi, (0, 1, 2), 4),
        mul_chain(
            apply_map_legs(phi, 0, dl),
            apply_map_legs(phi, 2, dl),
            embed_legs(phi_inv, (1, 2, 3), 4),
            apply_map_legs(phi_inv, 1, dl),
        ),
    )
    expect_equal(
        report,
        "eq.6.1ii",
        embed_legs(phi, (1, 2, 3), 4),
        mul_chain(
            apply_map_legs(phi_inv, 1, dl),
            embed_legs(phi_inv, (0, 1, 2), 4),
            apply_map_legs(phi, 0, dl),
            apply_map_legs(phi, 2, dl),
        ),
    )
    expect_equal(
        report,
        "eq.6.1iii",
        embed_legs(phi_inv, (0, 1, 2), 4),
        mul_chain(
            apply_map_legs(phi, 1, dl),
            embed_legs(phi, (1, 2, 3), 4),
            apply_map_legs(phi_inv, 2, dl),
            apply_map_legs(phi_inv, 0, dl),
        ),
    )
    expect_equal(
        report,
        "eq.6.1iv",
        embed_legs(phi_inv, (1, 2, 3), 4),
        mul_chain(
            apply_map_legs(phi_inv, 2, dl),
            apply_map_legs(phi_inv, 0, dl),
            embed_legs(phi, (0, 1, 2), 4),
            apply_map_legs(phi, 1, dl),
        ),
    )
    return report


def _sweedler3_left(H, a: TensorElement):
    """(Delta (x) 1)Delta applied to an arity-1 element."""
    return apply_map_legs(H.coproduct(a), 0, H.delta)


def _sweedler3_right(H, a: TensorElement):
    """(1 (x) Delta)Delta applied to an arity-1 element."""
    return apply_map_legs(H.coproduct(a), 1, H.delta)


def _basis_product(H, *indices):
    acc = H.basis(indices[0])
    for i in indices[1:]:
        acc = acc * H.basis(i)
    return acc


def lemma11_sides(H: QhsaStructure, which: str, a: TensorElement):
    """Both sides of one of the four exchange identities, evaluated term by
    term exactly as printed, explicit sign factors included."""
    alg = H.algebra
    par = alg.parity
    S = H.antipode
    zero2 = TensorElement.zero(alg, 2)

    def s_elem(x):
        return apply_map_legs(x, 0, S)

    lhs = zero2
    rhs = zero2
    if which in ("11i", "11ii"):
        words = H.phi.terms
        sweedler = _sweedler3_left(H, a) if which == "11i" else _sweedler3_right(H, a)
    else:
        words = H.phi_inv.terms
        sweedler = _sweedler3_left(H, a) if which == "11iii" else _sweedler3_right(H, a)

    for (x, y, z), c in words.items():
        if which == "11i":
            ybsz = H.basis(y) * H.beta * s_elem(H.basis(z))
            for (w,), ca in a.terms.items():
                sign = -1 if par[w] and par[x] else 1
                lhs = lhs + outer(H.basis(x) * H.basis(w), ybsz).scaled(c * ca * sign)
            for (u1, u2, u3), cu in sweedler.terms.items():
                sign = -1 if par[x] and par[u2] else 1
                term = outer(
                    H.basis(u1) * H.basis(x),
                    H.basis(u2) * ybsz * s_elem(H.basis(u3)),
                )
                rhs = rhs + term.scaled(c * cu * sign)
        elif which == "11ii":
            sxay = s_elem(H.basis(x)) * H.alpha * H.basis(y)
            for (w,), ca in a.terms.items():
                sign = -1 if par[w] and par[z] else 1
                lhs = lhs + outer(sxay, H.basis(w) * H.basis(z)).scaled(c * ca * sign)
            for (u1, u2, u3), cu in sweedler.terms.items():
                sign = -1 if par[z] and par[u2] else 1
                term = outer(
                    s_elem(H.basis(u1)) * sxay * H.basis(u2),
                    H.basis(z) * H.basis(u3),
                )
                rhs = rhs + term.scaled(c * cu * sign)
        elif which == "11iii":
            syaz = s_elem(H.basis(y)) * H.alpha * H.basis(z)
            for (w,), ca in a.terms.items():
                lhs = lhs + outer(H.basis(w) * H.basis(x), syaz).scaled(c * ca)
            for (u1, u2, u3), cu in sweedler.terms.items():
                sign = -1 if par[x] and (par[u1] + par[u2]) % 2 else 1
                term = outer(
                    H.basis(x) * H.basis(u1),
                    s_elem(H.basis(u2)) * syaz * H.basis(u3),
                )
                rhs = rhs + term.scaled(c * cu * sign)
        elif which == "11iv":
            xbsy = H.basis(x) * H.beta * s_elem(H.basis(y))
            for (w,), ca in a.terms.items():
                lhs = lhs + outer(xbsy, H.basis(z) * H.basis(w)).scaled(c * ca)
            for (u1, u2, u3), cu in sweedler.terms.items():
                sign = -1 if par[z] and (par[u2] + par[u3]) % 2 else 1
                term = outer(
                    H.basis(u1) * xbsy * s_elem(H.basis(u2)),
                    H.basis(u3) * H.basis(z),
                )
                rhs = rhs + term.scaled(c * cu * sign)
        else:
            raise AlgebraError(f"unknown identity {which!r}")
    return lhs, rhs


def check_lemma11(H: QhsaStructure) -> CheckReport:
    report = CheckReport()
    d = H.algebra.dimension
    for which in ("11i", "11ii", "11iii", "11iv"):
        expect_equal_per_basis(
            report,
            f"eq.{which}",
            lambda a, w=which: lemma11_sides(H, w, H.basis(a)),
            d,
        )
    return report


def check_eta_lemma(H: QhsaStructure) -> CheckReport:
    """Absorption of Delta(a) by the alpha/beta contractions, checked for
    every basis word eta of H (x) H and every basis a."""
    report = CheckReport()
    alg = H.algebra
    d = alg.dimension

    for check_id, contract, from_left in (
        ("eq.lem5i", m_alpha_s, True),
        ("eq.lem5ii", m_beta_s, False),
    ):
        failed = False
        for i in range(d):
            for j in range(d):
                eta = H.basis(i, j)
                base = contract(H, eta)
                for a in range(d):
                    da = H.coproduct(H.basis(a))
                    stacked = da * eta if from_left else eta * da
                    lhs = contract(H, stacked)
                    rhs = base.scaled(H.eps_of(H.basis(a)))
                    if lhs != rhs:
                        report.add_fail(
                            check_id,
                            difference_witness(lhs, rhs, basis=[a, i, j]),
                        )
                        failed = True
                        break
                if failed:
                    break
            if failed:
                break
        if not failed:
            report.add_pass(check_id)
    return report


# -- suite orchestration -----------------------------------------------------------

SUITES = (
    ("algebra", lambda H: validate_algebra(H.algebra)),
    ("structure", validate_structure),
    ("quasi-bialgebra", check_quasi_bialgebra),
    ("antipode", check_antipode_axioms),
    ("pentagon-consequences", check_pentagon_consequences),
    ("lemma11", check_lemma11),
    ("eta", check_eta_lemma),
    ("quasi-triangular", check_quasi_triangular),
    ("qqybe", check_qqybe),
)

OPTIONAL_SUITES = (("triangular", check_triangular),)

DEFAULT_SUITE_NAMES = tuple(name for name, _ in SUITES)


def suite_function(name):
    for n, fn in SUITES + OPTIONAL_SUITES:
        if n == name:
            return fn
    raise AlgebraError(f"unknown suite {name!r}")


def run_suites(H: QhsaStructure, names=None):
    """Run the named suites in order; returns [(name, CheckReport, seconds)].

    Validation failures short-circuit: once the algebra or structure layer is
    broken the later identities are not well posed, so they are skipped.
    """
    import time as _time

    if names is None:
        names = DEFAULT_SUITE_NAMES
    results = []
    validation_broken = False
    for name in names:
        fn = suite_function(name)
        start = _time.perf_counter()
        if validation_broken and name not in ("algebra", "structure"):
            report = CheckReport()
            report.add_skip(name, "validation failed earlier")
        else:
            report = fn(H)
        elapsed = _time.perf_counter() - start
        results.append((name, report, elapsed))
        if name in ("algebra", "structure") and not report.ok:
            validation_broken = True
    return results
