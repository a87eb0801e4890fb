"""Programmatic builders for the bundled fixtures and twistors.

The data files under ``qhsa/fixtures/`` are generated from these builders and
kept byte-identical to them (there is a test for that).  Positive fixtures,
in increasing order of spice:

- trivial: the one-dimensional structure, everything is the identity;
- ext: the exterior algebra on one odd generator theta (a Hopf superalgebra),
  with the triangular R-matrix 1 (x) 1 + theta (x) theta;
- h2: two even orthogonal idempotents with the sign three-cocycle
  coassociator 1 - 2 e1 (x) e1 (x) e1 and alpha = e0 - e1;
- h2r: h2 over Q(zeta_4) with the quasi-triangular R-matrix whose (1,1)
  coefficient is zeta_4;
- h2ext: the graded tensor product h2 (x) ext, which has both a nontrivial
  coassociator and odd basis elements, so Koszul signs really bite.

Negatives are labeled with the single check they are built to violate.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import GradedAlgebra, StructureMap, TensorElement
from .scalars import FieldSpec
from .structure import QhsaStructure
from .transforms import Twistor, tensor_product_structure


def _map_from_rows(algebra, out_arity, rows):
    """rows: {basis index: {word: coefficient}} with plain ints/Fractions."""
    field = algebra.field
    images = []
    for i in range(algebra.dimension):
        terms = {
            tuple(word): field.from_fraction(Fraction(c))
            for word, c in rows.get(i, {}).items()
        }
        images.append(TensorElement(algebra, out_arity, terms))
    return StructureMap(algebra, out_arity, images)


def _element(algebra, arity, terms):
    field = algebra.field
    return TensorElement(
        algebra,
        arity,
        {tuple(w): field.from_fraction(Fraction(c)) for w, c in terms.items()},
    )


def trivial_structure(field=None) -> QhsaStructure:
    field = field or FieldSpec.rational()
    one = field.one()
    alg = GradedAlgebra(1, (0,), (one,), {(0, 0): {0: one}}, field)
    return QhsaStructure(
        alg,
        _map_from_rows(alg, 2, {0: {(0, 0): 1}}),
        _map_from_rows(alg, 0, {0: {(): 1}}),
        _map_from_rows(alg, 1, {0: {(0,): 1}}),
        _element(alg, 3, {(0, 0, 0): 1}),
        _element(alg, 1, {(0,): 1}),
        _element(alg, 1, {(0,): 1}),
    )


def ext_structure(with_r=True, field=None) -> QhsaStructure:
    """Exterior algebra on one odd theta: basis (1, theta), theta^2 = 0."""
    field = field or FieldSpec.rational()
    one = field.one()
    alg = GradedAlgebra(
        2,
        (0, 1),
        (one, field.zero()),
        {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}},
        field,
    )
    delta = _map_from_rows(alg, 2, {0: {(0, 0): 1}, 1: {(1, 0): 1, (0, 1): 1}})
    epsilon = _map_from_rows(alg, 0, {0: {(): 1}, 1: {}})
    antipode = _map_from_rows(alg, 1, {0: {(0,): 1}, 1: {(1,): -1}})
    r = _element(alg, 2, {(0, 0): 1, (1, 1): 1}) if with_r else None
    return QhsaStructure(
        alg,
        delta,
        epsilon,
        antipode,
        _element(alg, 3, {(0, 0, 0): 1}),
        _element(alg, 1, {(0,): 1}),
        _element(alg, 1, {(0,): 1}),
        r,
    )


def h2_structure(field=None, with_r=False) -> QhsaStructure:
    """Two orthogonal idempotents e0, e1 (both even) with the sign-cocycle
    coassociator.  The R-matrix needs zeta_4, so it only exists over a
    cyclotomic field of order divisible by 4."""
    field = field or FieldSpec.rational()
    one = field.one()
    alg = GradedAlgebra(
        2,
        (0, 0),
        (one, one),
        {(0, 0): {0: one}, (1, 1): {1: one}},
        field,
    )
    delta = _map_from_rows(alg, 2, {0: {(0, 0): 1, (1, 1): 1}, 1: {(0, 1): 1, (1, 0): 1}})
    epsilon = _map_from_rows(alg, 0, {0: {(): 1}, 1: {}})
    antipode = _map_from_rows(alg, 1, {0: {(0,): 1}, 1: {(1,): 1}})
    phi_terms = {}
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                phi_terms[(a, b, c)] = -1 if a and b and c else 1
    phi = _element(alg, 3, phi_terms)
    alpha = _element(alg, 1, {(0,): 1, (1,): -1})
    beta = _element(alg, 1, {(0,): 1, (1,): 1})
    r = None
    if with_r:
        if field.kind != "cyclotomic" or field.order % 4 != 0:
            raise ValueError("the h2 R-matrix needs zeta_4 in the field")
        zeta_power = field.order // 4
        from .scalars import Cyclotomic

        z4 = Cyclotomic(field.order, [0] * zeta_power + [1])
        r = TensorElement(
            alg,
            2,
            {(0, 0): one, (0, 1): one, (1, 0): one, (1, 1): z4},
        )
    return QhsaStructure(alg, delta, epsilon, antipode, phi, alpha, beta, r)


def h2r_structure() -> QhsaStructure:
    return h2_structure(FieldSpec.cyclotomic(4), with_r=True)


def h2ext_structure() -> QhsaStructure:
    """Graded tensor product h2 (x) ext; the ext R-matrix plays no role
    because every canonical element comes from the nontrivial factor."""
    return tensor_product_structure(h2_structure(), ext_structure())


def h2_broken_pentagon() -> QhsaStructure:
    """h2 with the coassociator support moved off the diagonal: the pentagon
    breaks, and with it everything the sign of phi(1,1,1) feeds."""
    H = h2_structure()
    phi_terms = {}
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                phi_terms[(a, b, c)] = 1
    phi_terms[(1, 1, 0)] = -1
    return H.replace(phi=_element(H.algebra, 3, phi_terms))


def h2_broken_antipode() -> QhsaStructure:
    """h2 with alpha flattened to 1; the canonical-element axioms fail."""
    H = h2_structure()
    return H.replace(alpha=_element(H.algebra, 1, {(0,): 1, (1,): 1}))


def ext_broken_grading() -> GradedAlgebra:
    """ext with theta^2 = theta: grading additivity fails at (theta, theta)."""
    field = FieldSpec.rational()
    one = field.one()
    return GradedAlgebra(
        2,
        (0, 1),
        (one, field.zero()),
        {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}, (1, 1): {1: one}},
        field,
    )


# -- bundled twistors -----------------------------------------------------------


def twistor_e11(field=None) -> Twistor:
    """1 (x) 1 + e1 (x) e1 on h2 (or h2r when built over Q(zeta_4))."""
    H = h2_structure(field)
    return Twistor(H.unit(2) + _element(H.algebra, 2, {(1, 1): 1}))


def twistor_theta() -> Twistor:
    """1 (x) 1 + theta (x) theta on ext; coincides with the R-matrix."""
    H = ext_structure()
    return Twistor(H.unit(2) + _element(H.algebra, 2, {(1, 1): 1}))


def twistor_u11() -> Twistor:
    """1 (x) 1 + u1 (x) u1 on h2ext, u1 = e1 (x) theta (flat index 3).

    A valid twistor that violates the cocycle identity, unlike every twistor
    on h2 itself (there any even element with unit counit legs is diagonal in
    the idempotent basis, and diagonal twistors are automatically cocycles).
    """
    H = h2ext_structure()
    return Twistor(H.unit(2) + _element(H.algebra, 2, {(3, 3): 1}))


def twistor_one(H: QhsaStructure) -> Twistor:
    return Twistor(H.unit(2), H.unit(2))


POSITIVE_FIXTURES = ("trivial", "ext", "h2", "h2r", "h2ext")

# negative name -> (builder, suite of the labeled check, labeled check id)
NEGATIVE_FIXTURES = {
    "h2-broken-pentagon": ("quasi-bialgebra", "eq.fii"),
    "h2-broken-antipode": ("antipode", "eq.5ii"),
}

# twistor negative: fails exactly the cocycle identity
NONCOCYCLE_TWISTOR = ("f-u11", "eq.ccc")


def build_structure(name: str) -> QhsaStructure:
    builders = {
        "trivial": trivial_structure,
        "ext": ext_structure,
        "h2": h2_structure,
        "h2r": h2r_structure,
        "h2ext": h2ext_structure,
        "h2-broken-pentagon": h2_broken_pentagon,
        "h2-broken-antipode": h2_broken_antipode,
    }
    return builders[name]()


def build_twistor(name: str):
    """name -> (structure fixture it applies to, Twistor)."""
    builders = {
        "f-one": ("trivial", lambda: twistor_one(trivial_structure())),
        "f-e11": ("h2", twistor_e11),
        "f-e11-zeta4": ("h2r", lambda: twistor_e11(FieldSpec.cyclotomic(4))),
        "f-theta": ("ext", twistor_theta),
        "f-u11": ("h2ext", twistor_u11),
    }
    target, fn = builders[name]
    return target, fn()


ALL_TWISTOR_NAMES = ("f-one", "f-e11", "f-e11-zeta4", "f-theta", "f-u11")
