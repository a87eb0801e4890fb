"""Structure-to-structure transforms: twisting, opposite, primed structure,
twist-by-R comparison, and graded tensor products of structures.

A twistor is an even invertible F in H (x) H whose two counit legs are both 1.
Twisting transports one valid structure to another; the opposite structure
flips the coproduct and replaces the antipode by its inverse; the primed
structure conjugates everything through the antipode.  Callers verify the
outputs with the usual check suites rather than trusting these formulas.
"""

from __future__ import annotations

import itertools

from .algebra import (
    AlgebraError,
    GradedAlgebra,
    SingularError,
    StructureMap,
    TensorElement,
    apply_map_legs,
    embed_legs,
    invert_tensor_element,
    permute_legs,
)
from .reporting import CheckReport, element_terms_json, expect_equal, expect_equal_per_basis
from .structure import QhsaStructure, m_alpha_s, m_beta_s, mul_chain


class TwistorError(AlgebraError):
    """The given element does not qualify as a twistor."""


class Twistor:
    """An invertible even element of H (x) H with both counit legs equal to 1."""

    def __init__(self, element: TensorElement, inverse: TensorElement | None = None):
        if element.arity != 2:
            raise TwistorError("a twistor has arity 2")
        if inverse is None:
            try:
                inverse = invert_tensor_element(element)
            except SingularError as exc:
                raise TwistorError(f"twistor is not invertible: {exc}")
        self.element = element
        self.inverse = inverse

    def transpose(self) -> "Twistor":
        return Twistor(
            permute_legs(self.element, (1, 0)), permute_legs(self.inverse, (1, 0))
        )

    def scaled(self, c) -> "Twistor":
        field = self.element.algebra.field
        return Twistor(self.element.scaled(c), self.inverse.scaled(field.invert(c)))


def check_twistor(H: QhsaStructure, element: TensorElement) -> CheckReport:
    """Evenness, two-sided invertibility, and both counit legs equal to 1."""
    report = CheckReport()
    if element.is_even():
        report.add_pass("twistor.even")
    else:
        report.add_fail("twistor.even", {"reason": "element not homogeneous even"})
    try:
        invert_tensor_element(element)
        report.add_pass("twistor.invertible")
    except SingularError as exc:
        report.add_fail("twistor.invertible", {"reason": str(exc)})
    left = apply_map_legs(element, 0, H.epsilon)
    right = apply_map_legs(element, 1, H.epsilon)
    ok = left == H.unit(1) and right == H.unit(1)
    if ok:
        report.add_pass("eq.cup")
    else:
        report.add_fail(
            "eq.cup",
            {
                "eps-left": element_terms_json(left),
                "eps-right": element_terms_json(right),
            },
        )
    return report


def check_cocycle(H: QhsaStructure, F: Twistor) -> CheckReport:
    """(F (x) 1)(Delta (x) 1)F = (1 (x) F)(1 (x) Delta)F, one arity-3 equality."""
    report = CheckReport()
    lhs = embed_legs(F.element, (0, 1), 3) * apply_map_legs(F.element, 0, H.delta)
    rhs = embed_legs(F.element, (1, 2), 3) * apply_map_legs(F.element, 1, H.delta)
    expect_equal(report, "eq.ccc", lhs, rhs)
    return report


def twisted_coassociator(H: QhsaStructure, f: TensorElement, f_inv: TensorElement):
    return mul_chain(
        embed_legs(f, (0, 1), 3),
        apply_map_legs(f, 0, H.delta),
        H.phi,
        apply_map_legs(f_inv, 1, H.delta),
        embed_legs(f_inv, (1, 2), 3),
    )


def twist_structure(H: QhsaStructure, F: Twistor) -> QhsaStructure:
    """The twisted structure (Delta_F, epsilon, Phi_F, S, alpha_F, beta_F [, R_F]).

    The output is expected to pass the full check suites; tests and the CLI
    verify that instead of assuming it.
    """
    f, f_inv = F.element, F.inverse
    images = [f * img * f_inv for img in (H.coproduct(H.basis(i)) for i in range(H.algebra.dimension))]
    delta_f = StructureMap(H.algebra, 2, images)
    phi_f = twisted_coassociator(H, f, f_inv)
    alpha_f = m_alpha_s(H, f_inv)
    beta_f = m_beta_s(H, f)
    r_f = None
    if H.has_r:
        r_f = permute_legs(f, (1, 0)) * H.r_matrix * f_inv
    return H.replace(delta=delta_f, phi=phi_f, alpha=alpha_f, beta=beta_f, r_matrix=r_f)


def _compare_structures(report, prefix, A: QhsaStructure, B: QhsaStructure):
    expect_equal_per_basis(
        report,
        f"{prefix}.delta",
        lambda a: (A.delta.images[a], B.delta.images[a]),
        A.algebra.dimension,
    )
    expect_equal(report, f"{prefix}.phi", A.phi, B.phi)
    expect_equal(report, f"{prefix}.alpha", A.alpha, B.alpha)
    expect_equal(report, f"{prefix}.beta", A.beta, B.beta)
    if A.has_r and B.has_r:
        expect_equal(report, f"{prefix}.r", A.r_matrix, B.r_matrix)
    elif A.has_r != B.has_r:
        report.add_fail(f"{prefix}.r", {"reason": "one side lacks an R-matrix"})
    else:
        report.add_skip(f"{prefix}.r", "no R-matrix")


def twist_composition_check(H: QhsaStructure, F: Twistor, G: Twistor) -> CheckReport:
    """Twisting by F then by G equals twisting once by G*F, componentwise."""
    report = CheckReport()
    twice = twist_structure(twist_structure(H, F), G)
    combined = Twistor(G.element * F.element)
    once = twist_structure(H, combined)
    _compare_structures(report, "twist-composition", twice, once)
    return report


def opposite_structure(H: QhsaStructure) -> QhsaStructure:
    """(Delta^T, epsilon, Phi^T, S^{-1}, S^{-1}(alpha), S^{-1}(beta) [, R^T])."""
    sinv = H.antipode_inv  # raises SingularError for a singular antipode
    phi_t = permute_legs(H.phi_inv, (2, 1, 0))
    alpha_t = apply_map_legs(H.alpha, 0, sinv)
    beta_t = apply_map_legs(H.beta, 0, sinv)
    r_t = permute_legs(H.r_matrix, (1, 0)) if H.has_r else None
    return H.replace(
        delta=H.delta_t,
        phi=phi_t,
        antipode=sinv,
        alpha=alpha_t,
        beta=beta_t,
        r_matrix=r_t,
    )


def prime_structure(H: QhsaStructure) -> QhsaStructure:
    """(Delta', epsilon, Phi', S, S(beta), S(alpha) [, (S (x) S)R])."""
    H.antipode_inv  # fail early on a singular antipode
    phi_p = permute_legs(H.phi, (2, 1, 0))
    phi_p = apply_map_legs(phi_p, 0, H.antipode)
    phi_p = apply_map_legs(phi_p, 1, H.antipode)
    phi_p = apply_map_legs(phi_p, 2, H.antipode)
    alpha_p = H.s_of(H.beta)
    beta_p = H.s_of(H.alpha)
    r_p = None
    if H.has_r:
        r_p = apply_map_legs(apply_map_legs(H.r_matrix, 0, H.antipode), 1, H.antipode)
    return H.replace(delta=H.delta_prime, phi=phi_p, alpha=alpha_p, beta=beta_p, r_matrix=r_p)


def verify_twist_by_r(H: QhsaStructure) -> CheckReport:
    """Twisting a quasi-triangular structure by its own R-matrix lands on the
    opposite coproduct, coassociator and R-matrix.  The induced alpha_R and
    beta_R are reported informationally and compared to nothing: they are
    built with S, not with the opposite antipode."""
    report = CheckReport()
    if not H.has_r:
        for check_id in ("twist-by-r.delta", "twist-by-r.phi", "twist-by-r.r"):
            report.add_skip(check_id, "no R-matrix")
        return report
    R = Twistor(H.r_matrix, H.r_inv)
    twisted = twist_structure(H, R)
    expect_equal_per_basis(
        report,
        "twist-by-r.delta",
        lambda a: (twisted.delta.images[a], H.delta_t.images[a]),
        H.algebra.dimension,
    )
    expect_equal(report, "twist-by-r.phi", twisted.phi, permute_legs(H.phi_inv, (2, 1, 0)))
    expect_equal(report, "twist-by-r.r", twisted.r_matrix, permute_legs(H.r_matrix, (1, 0)))
    report.add_pass(
        "twist-by-r.alpha-beta",
        detail={
            "alpha_r": element_terms_json(twisted.alpha),
            "beta_r": element_terms_json(twisted.beta),
        },
    )
    return report


def check_prop6(H: QhsaStructure, F: Twistor) -> CheckReport:
    """Opposite of the twisted structure equals the opposite structure twisted
    by F^T: coproduct, coassociator, alpha, beta, and R when present."""
    report = CheckReport()
    lhs = opposite_structure(twist_structure(H, F))
    rhs = twist_structure(opposite_structure(H), F.transpose())
    _compare_structures(report, "prop6", lhs, rhs)
    return report


def tensor_product_structure(A: QhsaStructure, B: QhsaStructure) -> QhsaStructure:
    """Graded tensor product of two structures, with basis index (i, j) at
    flat position i*dim(B) + j and Koszul-sign multiplication.

    Phi, alpha, beta and R all come from the factor with the nontrivial
    coassociator; the other factor must be an honest Hopf superalgebra
    (trivial Phi, alpha = beta = 1), otherwise the output provably fails the
    antipode axioms.  The general two-sided formula is out of reach of the
    structure-constant data model, and this restricted product is all the
    graded fixtures need.
    """
    if A.algebra.field != B.algebra.field:
        raise AlgebraError("tensor product needs a common scalar field")

    a_trivial = A.phi == A.unit(3)
    b_trivial = B.phi == B.unit(3)
    if not a_trivial and not b_trivial:
        raise AlgebraError("tensor product needs at least one trivial coassociator")
    main, other, main_is_a = (A, B, True) if not a_trivial or b_trivial else (B, A, False)
    if not (
        other.phi == other.unit(3)
        and other.alpha == other.unit(1)
        and other.beta == other.unit(1)
    ):
        raise AlgebraError(
            "the trivial-coassociator factor must have alpha = beta = 1"
        )

    alg_a, alg_b = A.algebra, B.algebra
    da, db = alg_a.dimension, alg_b.dimension
    field = alg_a.field
    dim = da * db

    def flat(i, j):
        return i * db + j

    parity = tuple((alg_a.parity[i] + alg_b.parity[j]) % 2 for i in range(da) for j in range(db))
    unit = tuple(alg_a.unit[i] * alg_b.unit[j] for i in range(da) for j in range(db))

    mult = {}
    for (i, j), row_a in alg_a.mult.items():
        for (p, q), row_b in alg_b.mult.items():
            sign = -1 if alg_b.parity[p] and alg_a.parity[j] else 1
            pair = (flat(i, p), flat(j, q))
            row = mult.setdefault(pair, {})
            for k, ca in row_a.items():
                for r, cb in row_b.items():
                    coeff = ca * cb if sign == 1 else -(ca * cb)
                    key = flat(k, r)
                    row[key] = row[key] + coeff if key in row else coeff
    algebra = GradedAlgebra(dim, parity, unit, mult, field)

    delta_images = []
    eps_images = []
    s_images = []
    for i in range(da):
        for j in range(db):
            # Delta(a (x) b) = (1 (x) T (x) 1)(Delta_A a (x) Delta_B b)
            terms = {}
            for (k, l), ca in A.delta.images[i].terms.items():
                for (p, q), cb in B.delta.images[j].terms.items():
                    sign = -1 if alg_a.parity[l] and alg_b.parity[p] else 1
                    word = (flat(k, p), flat(l, q))
                    coeff = ca * cb if sign == 1 else -(ca * cb)
                    terms[word] = terms[word] + coeff if word in terms else coeff
            delta_images.append(TensorElement(algebra, 2, terms))

            ea = A.epsilon.images[i].scalar_value()
            eb = B.epsilon.images[j].scalar_value()
            eps_images.append(TensorElement(algebra, 0, {(): ea * eb}))

            # S(a (x) b) = (-1)^{[a][b]} S_A(a) (x) S_B(b)
            sign = -1 if alg_a.parity[i] and alg_b.parity[j] else 1
            terms = {}
            for (k,), ca in A.antipode.images[i].terms.items():
                for (p,), cb in B.antipode.images[j].terms.items():
                    coeff = ca * cb if sign == 1 else -(ca * cb)
                    word = (flat(k, p),)
                    terms[word] = terms[word] + coeff if word in terms else coeff
            s_images.append(TensorElement(algebra, 1, terms))

    def lift1(x: TensorElement, from_a: bool) -> TensorElement:
        unit_vec = alg_b.unit if from_a else alg_a.unit
        terms = {}
        support = [(k, cu) for k, cu in enumerate(unit_vec) if cu != 0]
        for word, c in x.terms.items():
            for combo in itertools.product(support, repeat=len(word)):
                coeff = c
                lifted = []
                for leg, (k, cu) in zip(word, combo):
                    coeff = coeff * cu
                    lifted.append(flat(leg, k) if from_a else flat(k, leg))
                key = tuple(lifted)
                terms[key] = terms[key] + coeff if key in terms else coeff
        return TensorElement(algebra, x.arity, terms)

    phi = lift1(main.phi, main_is_a)
    alpha = lift1(main.alpha, main_is_a)
    beta = lift1(main.beta, main_is_a)
    r = lift1(main.r_matrix, main_is_a) if main.has_r else None

    return QhsaStructure(
        algebra,
        StructureMap(algebra, 2, delta_images),
        StructureMap(algebra, 0, eps_images),
        StructureMap(algebra, 1, s_images),
        phi,
        alpha,
        beta,
        r,
    )


def random_twistor(H: QhsaStructure, rng, max_tries: int = 50) -> Twistor:
    """1 (x) 1 plus a random even perturbation with both counit legs zero,
    rejection-sampled until invertible.  Used by the property tests."""
    alg = H.algebra
    d = alg.dimension
    eps = [H.eps_of(H.basis(i)) for i in range(d)]
    candidates = [
        (i, j)
        for i in range(d)
        for j in range(d)
        if eps[i] == 0 and eps[j] == 0 and (alg.parity[i] + alg.parity[j]) % 2 == 0
    ]
    for _ in range(max_tries):
        terms = {}
        for w in candidates:
            k = rng.randint(-2, 2)
            if k:
                terms[w] = alg.field.from_int(k)
        element = H.unit(2) + TensorElement(alg, 2, terms)
        try:
            return Twistor(element)
        except TwistorError:
            continue
    raise TwistorError("could not sample an invertible twistor")
