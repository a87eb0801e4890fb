"""Construction and verification of the Drinfeld twist.

The pipeline builds gamma and gamma-bar from the coassociator, assembles the
twist F_D and its explicit inverse, and then machine-checks the whole circle
of identities connecting the primed structure (S-conjugated coproduct,
coassociator, canonical elements, R-matrix) with twisting by F_D.  Each
element is computed term by term over the sparse words of Phi with the
Sweedler legs expanded through the stored coproduct images; there is no
symbolic simplification anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    TensorElement,
    apply_map_legs,
    embed_legs,
    invert_tensor_element,
    multiply_adjacent_legs,
    outer,
    permute_legs,
)
from .reporting import CheckReport, expect_equal, expect_equal_per_basis
from .structure import QhsaStructure, check_quasi_triangular, m_alpha_s, m_beta_s, mul_chain
from .transforms import Twistor, prime_structure, twist_structure, twisted_coassociator


class DrinfeldError(ValueError):
    """A constructed element failed one of its defining identities, which
    points at a sign bug or an invalid input structure."""


@dataclass
class DrinfeldData:
    gamma: TensorElement
    gamma_bar: TensorElement
    f_d: TensorElement
    f_d_inverse: TensorElement
    eps_alpha: object
    eps_beta: object

    @property
    def f_d_bar(self) -> TensorElement:
        """The strictly normalized twistor eps(beta) * F_D."""
        return self.f_d.scaled(self.eps_beta)

    @property
    def f_d_bar_inverse(self) -> TensorElement:
        return self.f_d_inverse.scaled(self.eps_alpha)


def _gamma_post(H: QhsaStructure, w4: TensorElement) -> TensorElement:
    """(m (x) m)(1 (x) alpha (x) 1 (x) alpha)(S (x) 1 (x) S (x) 1)
    (1 (x) T (x) 1)(T (x) 1 (x) 1) applied to an arity-4 element."""
    z = permute_legs(w4, (1, 2, 0, 3))
    z = apply_map_legs(z, 0, H.antipode)
    z = apply_map_legs(z, 2, H.antipode)
    z = outer(H.unit(1), H.alpha, H.unit(1), H.alpha) * z
    return multiply_adjacent_legs(multiply_adjacent_legs(z, 0), 1)


def _gamma_bar_post(H: QhsaStructure, w4: TensorElement) -> TensorElement:
    """(m (x) m)(1 (x) beta S (x) 1 (x) beta S)(1 (x) T (x) 1)(1 (x) 1 (x) T)."""
    z = permute_legs(w4, (0, 3, 1, 2))
    z = apply_map_legs(z, 1, H.antipode)
    z = apply_map_legs(z, 3, H.antipode)
    z = outer(H.unit(1), H.beta, H.unit(1), H.beta) * z
    return multiply_adjacent_legs(multiply_adjacent_legs(z, 0), 1)


def compute_gamma(H: QhsaStructure) -> TensorElement:
    """gamma from (Phi^{-1} (x) 1)(Delta (x) 1 (x) 1)Phi, cross-checked against
    the second expression and against its absorption identity for every basis
    element.  A mismatch signals a sign-engine bug, so it raises."""
    w1 = embed_legs(H.phi_inv, (0, 1, 2), 4) * apply_map_legs(H.phi, 0, H.delta)
    gamma = _gamma_post(H, w1)
    w2 = embed_legs(H.phi, (1, 2, 3), 4) * apply_map_legs(H.phi_inv, 2, H.delta)
    alt = _gamma_post(H, w2)
    if gamma != alt:
        raise DrinfeldError("the two printed expressions for gamma disagree")
    for a in range(H.algebra.dimension):
        if _absorb_gamma(H, gamma, a) != gamma.scaled(H.eps_of(H.basis(a))):
            raise DrinfeldError(f"gamma fails its absorption identity at basis {a}")
    return gamma


def compute_gamma_bar(H: QhsaStructure) -> TensorElement:
    w1 = apply_map_legs(H.phi_inv, 0, H.delta) * embed_legs(H.phi, (0, 1, 2), 4)
    gamma_bar = _gamma_bar_post(H, w1)
    w2 = apply_map_legs(H.phi, 2, H.delta) * embed_legs(H.phi_inv, (1, 2, 3), 4)
    alt = _gamma_bar_post(H, w2)
    if gamma_bar != alt:
        raise DrinfeldError("the two printed expressions for gamma-bar disagree")
    for a in range(H.algebra.dimension):
        if _absorb_gamma_bar(H, gamma_bar, a) != gamma_bar.scaled(H.eps_of(H.basis(a))):
            raise DrinfeldError(f"gamma-bar fails its absorption identity at basis {a}")
    return gamma_bar


def _absorb_gamma(H, gamma, a):
    """sum over Delta(a): (S (x) S)Delta^T(a_1) * gamma * Delta(a_2)."""
    acc = TensorElement.zero(H.algebra, 2)
    for (j, k), c in H.delta.images[a].terms.items():
        term = H.ss_delta_t.images[j] * gamma * H.delta.images[k]
        acc = acc + term.scaled(c)
    return acc


def _absorb_gamma_bar(H, gamma_bar, a):
    """sum over Delta(a): Delta(a_1) * gamma-bar * (S (x) S)Delta^T(a_2)."""
    acc = TensorElement.zero(H.algebra, 2)
    for (j, k), c in H.delta.images[a].terms.items():
        term = H.delta.images[j] * gamma_bar * H.ss_delta_t.images[k]
        acc = acc + term.scaled(c)
    return acc


def _f_d_element(H: QhsaStructure, gamma: TensorElement) -> TensorElement:
    """F_D = sum over Phi of (S (x) S)Delta^T(X) * gamma * Delta(Y beta S(Z))."""
    acc = TensorElement.zero(H.algebra, 2)
    for (x, y, z), c in H.phi.terms.items():
        h = H.basis(y) * H.beta * H.s_of(H.basis(z))
        acc = acc + (H.ss_delta_t.images[x] * gamma * H.coproduct(h)).scaled(c)
    return acc


def _f_d_inverse_element(H: QhsaStructure, gamma_bar: TensorElement) -> TensorElement:
    """F_D^{-1} = sum over Phi^{-1} of Delta(Xbar) * gamma-bar * Delta'(S(Ybar) alpha Zbar)."""
    acc = TensorElement.zero(H.algebra, 2)
    for (x, y, z), c in H.phi_inv.terms.items():
        h = H.s_of(H.basis(y)) * H.alpha * H.basis(z)
        term = H.delta.images[x] * gamma_bar * apply_map_legs(h, 0, H.delta_prime)
        acc = acc + term.scaled(c)
    return acc


def compute_drinfeld_twist(H: QhsaStructure) -> DrinfeldData:
    """gamma, gamma-bar, F_D and F_D^{-1}, with the inverse property and the
    counit legs verified on the spot."""
    gamma = compute_gamma(H)
    gamma_bar = compute_gamma_bar(H)
    f_d = _f_d_element(H, gamma)
    f_d_inv = _f_d_inverse_element(H, gamma_bar)
    unit2 = H.unit(2)
    if f_d_inv * f_d != unit2 or f_d * f_d_inv != unit2:
        raise DrinfeldError("constructed F_D^{-1} is not a two-sided inverse of F_D")
    expected = H.unit(1).scaled(H.eps_alpha)
    if (
        apply_map_legs(f_d, 0, H.epsilon) != expected
        or apply_map_legs(f_d, 1, H.epsilon) != expected
    ):
        raise DrinfeldError("counit legs of F_D do not equal eps(alpha)")
    return DrinfeldData(gamma, gamma_bar, f_d, f_d_inv, H.eps_alpha, H.eps_beta)


# -- theorem battery -----------------------------------------------------------


def check_alt_expressions(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    """The alternative closed forms for F_D and F_D^{-1}."""
    report = CheckReport()
    acc = TensorElement.zero(H.algebra, 2)
    for (x, y, z), c in H.phi_inv.terms.items():
        h = H.basis(x) * H.beta * H.s_of(H.basis(y))
        term = apply_map_legs(h, 0, H.delta_prime) * D.gamma * H.delta.images[z]
        acc = acc + term.scaled(c)
    expect_equal(report, "altexpr.fd", acc, D.f_d)

    acc = TensorElement.zero(H.algebra, 2)
    for (x, y, z), c in H.phi.terms.items():
        h = H.s_of(H.basis(x)) * H.alpha * H.basis(y)
        term = H.coproduct(h) * D.gamma_bar * H.ss_delta_t.images[z]
        acc = acc + term.scaled(c)
    expect_equal(report, "altexpr.fd-inverse", acc, D.f_d_inverse)
    return report


def verify_thm2(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    """Delta' is conjugation of Delta by F_D, plus both intertwining forms."""
    report = CheckReport()
    d = H.algebra.dimension
    expect_equal_per_basis(
        report,
        "eq.8.6a",
        lambda a: (H.delta_prime.images[a] * D.f_d, D.f_d * H.delta.images[a]),
        d,
    )
    expect_equal_per_basis(
        report,
        "eq.8.8a",
        lambda a: (D.f_d_inverse * H.delta_prime.images[a], H.delta.images[a] * D.f_d_inverse),
        d,
    )
    expect_equal_per_basis(
        report,
        "thm2.conjugation",
        lambda a: (H.delta_prime.images[a], D.f_d * H.delta.images[a] * D.f_d_inverse),
        d,
    )
    return report


def verify_lemma13(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    report = CheckReport()
    expect_equal(report, "eq.lem13.gamma", D.f_d * H.coproduct(H.alpha), D.gamma)
    expect_equal(report, "eq.lem13.gamma-bar", H.coproduct(H.beta) * D.f_d_inverse, D.gamma_bar)
    return report


def verify_thm3(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    """The primed structure equals the F_D-twisted one: coassociator and both
    canonical elements, plus the two product forms of the coassociator identity."""
    report = CheckReport()
    primed = prime_structure(H)

    phi_fd = twisted_coassociator(H, D.f_d, D.f_d_inverse)
    expect_equal(report, "thm3.phi", primed.phi, phi_fd)

    expect_equal(
        report,
        "thm3.alpha",
        m_alpha_s(H, D.f_d_inverse),
        H.s_of(H.beta).scaled(H.eps_alpha),
    )
    expect_equal(
        report,
        "thm3.beta",
        m_beta_s(H, D.f_d),
        H.s_of(H.alpha).scaled(H.eps_beta),
    )

    lhs = mul_chain(
        primed.phi,
        embed_legs(D.f_d, (1, 2), 3),
        apply_map_legs(D.f_d, 1, H.delta),
    )
    rhs = mul_chain(
        embed_legs(D.f_d, (0, 1), 3),
        apply_map_legs(D.f_d, 0, H.delta),
        H.phi,
    )
    expect_equal(report, "eq.star", lhs, rhs)

    lhs = mul_chain(
        invert_tensor_element(primed.phi),
        embed_legs(D.f_d, (0, 1), 3),
        apply_map_legs(D.gamma, 0, H.delta),
    )
    rhs = mul_chain(
        embed_legs(D.f_d, (1, 2), 3),
        apply_map_legs(D.gamma, 1, H.delta),
        H.phi_inv,
    )
    expect_equal(report, "eq.sstar", lhs, rhs)
    return report


def verify_thm5(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    """(S (x) S)R equals the F_D-twisted R-matrix; the exchange identity for
    gamma; and quasi-triangularity of the full primed structure."""
    report = CheckReport()
    ids = ("thm5.r", "eq.lem8", "prop8.quasi-triangular")
    if not H.has_r:
        for check_id in ids:
            report.add_skip(check_id, "no R-matrix")
        return report
    r_prime = apply_map_legs(apply_map_legs(H.r_matrix, 0, H.antipode), 1, H.antipode)
    expect_equal(
        report,
        "thm5.r",
        r_prime,
        permute_legs(D.f_d, (1, 0)) * H.r_matrix * D.f_d_inverse,
    )
    expect_equal(
        report,
        "eq.lem8",
        r_prime * D.gamma,
        permute_legs(D.gamma, (1, 0)) * H.r_matrix,
    )
    primed = prime_structure(H)
    sub = check_quasi_triangular(primed)
    if sub.ok:
        report.add_pass("prop8.quasi-triangular")
    else:
        report.add_fail(
            "prop8.quasi-triangular",
            {"failed": sub.failed_ids()},
        )
    return report


def verify_prime_equivalence(H: QhsaStructure, D: DrinfeldData) -> CheckReport:
    """Componentwise: the primed structure is exactly the structure twisted by
    the normalized twistor eps(beta) F_D, including the R-matrix."""
    from .transforms import _compare_structures

    report = CheckReport()
    primed = prime_structure(H)
    twisted = twist_structure(H, Twistor(D.f_d_bar, D.f_d_bar_inverse))
    _compare_structures(report, "drinfeld.prime-equivalence", primed, twisted)
    return report


def drinfeld_report(H: QhsaStructure) -> tuple:
    """Run the full Drinfeld battery; returns (DrinfeldData | None, CheckReport).

    Construction failures (expression mismatch, absorption violations, inverse
    failures) become failing entries rather than exceptions, so corrupted
    fixtures produce a readable report.
    """
    report = CheckReport()
    try:
        D = compute_drinfeld_twist(H)
    except DrinfeldError as exc:
        report.add_fail("drinfeld.construction", {"reason": str(exc)})
        return None, report
    report.add_pass("drinfeld.gamma-alt")
    report.add_pass("eq.8.1")
    report.add_pass("drinfeld.gamma-bar-alt")
    report.add_pass("eq.8.7")
    report.add_pass("drinfeld.fd-inverse")
    report.add_pass("drinfeld.fd-counit")
    report.extend(verify_lemma13(H, D))
    report.extend(verify_thm2(H, D))
    report.extend(check_alt_expressions(H, D))
    report.extend(verify_thm3(H, D))
    report.extend(verify_thm5(H, D))
    report.extend(verify_prime_equivalence(H, D))
    return D, report
