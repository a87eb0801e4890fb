"""Finite-dimensional Z2-graded algebras and sparse elements of H^(tensor n).

Sign conventions, fixed once here and relied on everywhere else:

- multiplying basis words x = x_1 (x) ... (x) x_n and y = y_1 (x) ... (x) y_n
  costs the Koszul sign (-1)^E with E = sum over i < j of parity(y_i)*parity(x_j),
  the unique bilinear extension of (a(x)b)(c(x)d) = (-1)^{[b][c]} ac (x) bd;
- ``permute_legs(x, word)`` places original leg word[i] at position i, realized
  by adjacent transpositions each costing (-1)^{[a][b]}; the transposition
  (1, 0) is the twist map T;
- structure maps (coproduct, counit, antipode and friends) are even operators,
  so applying one to a leg never creates a sign.

Everything is exact: scalars are Fractions or cyclotomic field elements, and
all comparisons are equalities of canonical forms.
"""

from __future__ import annotations

import itertools

from .scalars import FieldSpec


class AlgebraError(ValueError):
    """Structural misuse: mismatched algebras, arities, fields, bad indices."""


class SingularError(AlgebraError):
    """An element or map that was required to be invertible is not."""


class GradedAlgebra:
    """Associative superalgebra given by a basis, parity vector, unit vector
    and sparse multiplication table (i, j) -> {k: coefficient}."""

    def __init__(self, dimension, parity, unit, mult, field: FieldSpec):
        if dimension < 1:
            raise AlgebraError("dimension must be >= 1")
        parity = tuple(int(p) for p in parity)
        if len(parity) != dimension or any(p not in (0, 1) for p in parity):
            raise AlgebraError("parity must be a 0/1 vector of length dimension")
        unit = tuple(unit)
        if len(unit) != dimension:
            raise AlgebraError("unit vector has wrong length")
        table = {}
        for (i, j), row in mult.items():
            if not (0 <= i < dimension and 0 <= j < dimension):
                raise AlgebraError(f"mult index ({i}, {j}) out of range")
            cleaned = {}
            for k, c in row.items():
                if not 0 <= k < dimension:
                    raise AlgebraError(f"mult target {k} out of range")
                if c != 0:
                    cleaned[k] = c
            if cleaned:
                table[(i, j)] = cleaned
        self.dimension = dimension
        self.parity = parity
        self.unit = unit
        self.mult = table
        self.field = field

    def product(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def __eq__(self, other):
        return (
            isinstance(other, GradedAlgebra)
            and self.dimension == other.dimension
            and self.parity == other.parity
            and self.unit == other.unit
            and self.mult == other.mult
            and self.field == other.field
        )

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dimension}, parity={self.parity})"


class TensorElement:
    """Sparse element of H^(tensor n): a map from basis words to nonzero scalars.

    Values are immutable by convention; operations always build new elements.
    Arity 0 elements are scalars (the empty word).
    """

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra: GradedAlgebra, arity: int, terms: dict):
        if arity < 0:
            raise AlgebraError("arity must be >= 0")
        d = algebra.dimension
        cleaned = {}
        for word, coeff in terms.items():
            if len(word) != arity or any(not 0 <= i < d for i in word):
                raise AlgebraError(f"bad word {word} for arity {arity}")
            if coeff != 0:
                cleaned[tuple(word)] = coeff
        self.algebra = algebra
        self.arity = arity
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(algebra, arity):
        return TensorElement(algebra, arity, {})

    @staticmethod
    def unit(algebra, arity):
        support = [(k, c) for k, c in enumerate(algebra.unit) if c != 0]
        terms = {}
        for combo in itertools.product(support, repeat=arity):
            coeff = algebra.field.one()
            for _, c in combo:
                coeff = coeff * c
            terms[tuple(k for k, _ in combo)] = coeff
        return TensorElement(algebra, arity, terms)

    @staticmethod
    def basis(algebra, word):
        word = tuple(word)
        return TensorElement(algebra, len(word), {word: algebra.field.one()})

    @staticmethod
    def from_scalar(algebra, value):
        return TensorElement(algebra, 0, {(): value})

    # -- linear structure --------------------------------------------------

    def _require_same_shape(self, other):
        if not isinstance(other, TensorElement):
            raise AlgebraError(f"expected TensorElement, got {other!r}")
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraError("elements live over different algebras")
        if self.arity != other.arity:
            raise AlgebraError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._require_same_shape(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return TensorElement(self.algebra, self.arity, terms)

    def __sub__(self, other):
        self._require_same_shape(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] - c if w in terms else -c
        return TensorElement(self.algebra, self.arity, terms)

    def __neg__(self):
        return TensorElement(
            self.algebra, self.arity, {w: -c for w, c in self.terms.items()}
        )

    def scaled(self, scalar):
        if scalar == 0:
            return TensorElement.zero(self.algebra, self.arity)
        return TensorElement(
            self.algebra, self.arity, {w: c * scalar for w, c in self.terms.items()}
        )

    def __mul__(self, other):
        return tensor_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.terms == other.terms
            and (self.algebra is other.algebra or self.algebra == other.algebra)
        )

    def __repr__(self):
        if not self.terms:
            return f"TensorElement(arity={self.arity}, 0)"
        items = ", ".join(f"{w}: {c}" for w, c in sorted(self.terms.items()))
        return f"TensorElement(arity={self.arity}, {{{items}}})"

    # -- grading -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def word_parity(self, word):
        par = self.algebra.parity
        return sum(par[i] for i in word) % 2

    def homogeneous_parity(self):
        """Parity if homogeneous, else None; the zero element counts as even."""
        parities = {self.word_parity(w) for w in self.terms}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def is_even(self):
        return self.homogeneous_parity() == 0

    def scalar_value(self):
        if self.arity != 0:
            raise AlgebraError("scalar_value needs an arity-0 element")
        return self.terms.get((), self.algebra.field.zero())


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """Graded product in H^(tensor n); see the module docstring for the sign."""
    x._require_same_shape(y)
    alg = x.algebra
    par = alg.parity
    n = x.arity
    out = {}
    for wy, cy in y.terms.items():
        # prefix[j] = number of odd y-legs strictly left of j, mod 2
        prefix = []
        acc = 0
        for i in range(n):
            prefix.append(acc)
            acc ^= par[wy[i]]
        for wx, cx in x.terms.items():
            sign = 0
            for j in range(n):
                if par[wx[j]]:
                    sign ^= prefix[j]
            coeff = -cx * cy if sign else cx * cy
            partial = [((), coeff)]
            for i in range(n):
                row = alg.product(wx[i], wy[i])
                if not row:
                    partial = []
                    break
                partial = [
                    (w + (k,), c * ck) for (w, c) in partial for k, ck in row.items()
                ]
            for w, c in partial:
                out[w] = out[w] + c if w in out else c
    return TensorElement(alg, n, out)


def permute_legs(x: TensorElement, word) -> TensorElement:
    """Rearrange legs so position i holds original leg word[i] (0-based).

    The Koszul sign counts pairs of odd legs whose order flips; it equals the
    product of transposition signs along any adjacent-swap decomposition.
    """
    n = x.arity
    word = tuple(word)
    if sorted(word) != list(range(n)):
        raise AlgebraError(f"{word} is not a permutation of 0..{n - 1}")
    pos = [0] * n
    for p, leg in enumerate(word):
        pos[leg] = p
    par = x.algebra.parity
    out = {}
    for w, c in x.terms.items():
        odd = [i for i in range(n) if par[w[i]]]
        sign = 0
        for a in range(len(odd)):
            for b in range(a + 1, len(odd)):
                if pos[odd[a]] > pos[odd[b]]:
                    sign ^= 1
        new_word = tuple(w[word[p]] for p in range(n))
        out[new_word] = -c if sign else c
    return TensorElement(x.algebra, n, out)


def embed_legs(x: TensorElement, positions, arity: int) -> TensorElement:
    """Place legs of x at the given strictly increasing 0-based positions,
    filling the rest with the unit.  The unit is even, so no sign arises."""
    positions = tuple(positions)
    if len(positions) != x.arity:
        raise AlgebraError("positions must match the arity of x")
    if list(positions) != sorted(set(positions)):
        raise AlgebraError("positions must be strictly increasing")
    if positions and not (0 <= positions[0] and positions[-1] < arity):
        raise AlgebraError("positions out of range")
    alg = x.algebra
    free = [p for p in range(arity) if p not in positions]
    support = [(k, c) for k, c in enumerate(alg.unit) if c != 0]
    out = {}
    for w, c in x.terms.items():
        for combo in itertools.product(support, repeat=len(free)):
            new_word = [0] * arity
            coeff = c
            for p, leg in zip(positions, w):
                new_word[p] = leg
            for p, (k, ck) in zip(free, combo):
                new_word[p] = k
                coeff = coeff * ck
            key = tuple(new_word)
            out[key] = out[key] + coeff if key in out else coeff
    return TensorElement(alg, arity, out)


def outer(*elements) -> TensorElement:
    """Concatenate legs: (p, q) -> p (x) q.  Pure placement, no sign."""
    if not elements:
        raise AlgebraError("outer needs at least one element")
    alg = elements[0].algebra
    terms = {(): alg.field.one()}
    arity = 0
    for el in elements:
        if el.algebra is not alg and el.algebra != alg:
            raise AlgebraError("outer across different algebras")
        terms = {
            w + w2: c * c2 for w, c in terms.items() for w2, c2 in el.terms.items()
        }
        arity += el.arity
    return TensorElement(alg, arity, terms)


class StructureMap:
    """A linear map H -> H^(tensor out_arity), stored by basis images.

    out_arity 0 encodes scalar-valued maps (the counit), 1 endomorphisms
    (the antipode), 2 coproducts.  Maps are assumed parity-preserving; that
    is validated when a structure is loaded, not on every application.
    """

    def __init__(self, algebra: GradedAlgebra, out_arity: int, images):
        images = tuple(images)
        if len(images) != algebra.dimension:
            raise AlgebraError("need one image per basis element")
        for img in images:
            if img.arity != out_arity:
                raise AlgebraError("image arity disagrees with out_arity")
            if img.algebra is not algebra and img.algebra != algebra:
                raise AlgebraError("image over a different algebra")
        self.algebra = algebra
        self.out_arity = out_arity
        self.images = images

    def image(self, i: int) -> TensorElement:
        return self.images[i]

    def __call__(self, x: TensorElement) -> TensorElement:
        if x.arity != 1:
            raise AlgebraError("structure maps apply to arity-1 elements")
        return apply_map_legs(x, 0, self)

    def is_parity_preserving(self) -> bool:
        par = self.algebra.parity
        for i, img in enumerate(self.images):
            if self.out_arity == 0:
                if par[i] == 1 and not img.is_zero():
                    return False
            else:
                p = img.homogeneous_parity()
                if p is None or (img.terms and p != par[i]):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, StructureMap)
            and self.out_arity == other.out_arity
            and self.images == other.images
        )

    def __repr__(self):
        return f"StructureMap(out_arity={self.out_arity}, dim={self.algebra.dimension})"


def identity_map(algebra: GradedAlgebra) -> StructureMap:
    return StructureMap(
        algebra, 1, [TensorElement.basis(algebra, (i,)) for i in range(algebra.dimension)]
    )


def apply_map_legs(x: TensorElement, leg: int, f: StructureMap) -> TensorElement:
    """Apply f to one leg of every word, linearly.  Structure maps are even,
    so no Koszul sign appears regardless of what they pass over."""
    if not 0 <= leg < x.arity:
        raise AlgebraError(f"leg {leg} out of range for arity {x.arity}")
    if f.algebra is not x.algebra and f.algebra != x.algebra:
        raise AlgebraError("map belongs to a different algebra")
    out = {}
    for w, c in x.terms.items():
        img = f.images[w[leg]]
        for iw, ic in img.terms.items():
            key = w[:leg] + iw + w[leg + 1 :]
            coeff = c * ic
            out[key] = out[key] + coeff if key in out else coeff
    return TensorElement(x.algebra, x.arity - 1 + f.out_arity, out)


def multiply_adjacent_legs(x: TensorElement, leg: int) -> TensorElement:
    """Contract legs (leg, leg+1) with the algebra product; adjacency means
    nothing moves past anything, so there is no sign."""
    if not 0 <= leg < x.arity - 1:
        raise AlgebraError(f"cannot contract legs ({leg}, {leg + 1})")
    alg = x.algebra
    out = {}
    for w, c in x.terms.items():
        row = alg.product(w[leg], w[leg + 1])
        for k, ck in row.items():
            key = w[:leg] + (k,) + w[leg + 2 :]
            coeff = c * ck
            out[key] = out[key] + coeff if key in out else coeff
    return TensorElement(alg, x.arity - 1, out)


# -- exact linear algebra ---------------------------------------------------


def solve_linear_system(matrix, rhs, field: FieldSpec):
    """Gauss-Jordan over the exact field; matrix is a list of row lists.

    Returns the unique solution or raises SingularError.  Pivoting just takes
    the first nonzero entry; there is no rounding to worry about.
    """
    n = len(matrix)
    rows = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularError("singular linear system")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        inv = field.invert(rows[col][col])
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


def invert_matrix(matrix, field: FieldSpec):
    n = len(matrix)
    zero, one = field.zero(), field.one()
    rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularError("singular matrix")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        inv = field.invert(rows[col][col])
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [row[n:] for row in rows]


def invert_tensor_element(x: TensorElement) -> TensorElement:
    """Two-sided inverse in the algebra H^(tensor n).

    Solves the dense linear system Y * x = unit, then checks x * Y = unit;
    raises SingularError if either side fails.  Dimension d^n stays small
    (at most a few hundred) for everything this library handles.
    """
    alg = x.algebra
    n = x.arity
    if n == 0:
        return TensorElement.from_scalar(alg, alg.field.invert(x.scalar_value()))
    words = list(itertools.product(range(alg.dimension), repeat=n))
    index = {w: i for i, w in enumerate(words)}
    size = len(words)
    zero = alg.field.zero()
    matrix = [[zero] * size for _ in range(size)]
    for col, v in enumerate(words):
        prod = tensor_multiply(TensorElement.basis(alg, v), x)
        for w, c in prod.terms.items():
            matrix[index[w]][col] = c
    unit = TensorElement.unit(alg, n)
    rhs = [zero] * size
    for w, c in unit.terms.items():
        rhs[index[w]] = c
    try:
        solution = solve_linear_system(matrix, rhs, alg.field)
    except SingularError:
        raise SingularError("element has no left inverse")
    inverse = TensorElement(
        alg, n, {w: c for w, c in zip(words, solution) if c != 0}
    )
    if tensor_multiply(x, inverse) != unit:
        raise SingularError("element has a left inverse but no right inverse")
    return inverse


def invert_structure_map(f: StructureMap) -> StructureMap:
    """Inverse of a bijective H -> H map; f must have out_arity 1."""
    if f.out_arity != 1:
        raise AlgebraError("only out_arity 1 maps can be inverted")
    alg = f.algebra
    d = alg.dimension
    zero = alg.field.zero()
    matrix = [[zero] * d for _ in range(d)]
    for i in range(d):
        for (j,), c in f.images[i].terms.items():
            matrix[j][i] = c
    try:
        inv = invert_matrix(matrix, alg.field)
    except SingularError:
        raise SingularError("structure map is singular")
    images = [
        TensorElement(alg, 1, {(j,): inv[j][i] for j in range(d) if inv[j][i] != 0})
        for i in range(d)
    ]
    return StructureMap(alg, 1, images)
