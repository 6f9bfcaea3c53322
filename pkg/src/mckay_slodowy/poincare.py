"""Poincare series of tensor-algebra multiplicities for a normal pair:
coefficient streams by the fusion-matrix recursion, rational closed
forms by Cramer's rule over integer polynomial matrices, the product
formula for the common denominator, and the relations between the
restriction-side and induction-side series.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .characters import Character, table
from .cyclotomic import Cyclotomic
from .errors import CheckFailure, DomainError
from .groups import NormalPair
from .mckay import FusionData, default_module, fusion_matrices
from .polynomials import IntPoly, det_poly, identity_minus_t, poly_from_fractions, poly_gcd

SIDES = ("restriction", "induction")


def _side_matrix(data: FusionData, side: str):
    if side not in SIDES:
        raise DomainError(f"side must be one of {SIDES}")
    # the series identities need Hom(-, V ox W) = Hom(V ox -, W), i.e. V = V*
    _require_self_dual(data.V)
    return data.A if side == "restriction" else data.B


class RationalSeries:
    """numerator/denominator in Z[t] (reduced, denominator constant term 1)
    together with a lazily extended coefficient stream."""

    def __init__(self, numerator: IntPoly, denominator: IntPoly):
        if denominator.is_zero() or denominator[0] == 0:
            raise DomainError("denominator must have nonzero constant term")
        g = poly_gcd(numerator, denominator)
        if g.degree >= 1:
            numerator = numerator.divmod_exact(g)
            denominator = denominator.divmod_exact(g)
        if denominator[0] == -1:
            numerator, denominator = -numerator, -denominator
        if denominator[0] != 1:
            raise DomainError(
                f"denominator constant term {denominator[0]} cannot be normalized to 1"
            )
        self.numerator = numerator
        self.denominator = denominator
        self._stream: list[int] = []
        self._lock = threading.Lock()

    def coefficient(self, k: int) -> int:
        self._extend(k)
        return self._stream[k]

    def coefficients(self, count: int) -> list[int]:
        self._extend(count - 1)
        return self._stream[:count]

    def _extend(self, upto: int) -> None:
        if upto < len(self._stream):
            return
        with self._lock:
            d = self.denominator
            while len(self._stream) <= upto:
                k = len(self._stream)
                acc = self.numerator[k]
                for i in range(1, min(k, d.degree) + 1):
                    acc -= d[i] * self._stream[k - i]
                self._stream.append(acc)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def scaled(self, c: int) -> "RationalSeries":
        return RationalSeries(c * self.numerator, self.denominator)

    def __repr__(self):
        return f"({self.numerator.pretty()}) / ({self.denominator.pretty()})"

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "denominator": list(self.denominator.coeffs),
        }


@dataclass(frozen=True)
class MultiplicityVector:
    """All basis-member multiplicities inside V^(tensor k), one integer per
    basis index."""

    k: int
    values: tuple[int, ...]


def multiplicity_vector(data: FusionData, side: str, k: int) -> MultiplicityVector:
    """The k-th recursion vector c_k = (M^T)^k e_0, exact integers."""
    M = _side_matrix(data, side)
    size = len(M)
    c = [0] * size
    c[0] = 1
    for _ in range(k):
        c = [sum(M[j][i] * c[j] for j in range(size)) for i in range(size)]
    return MultiplicityVector(k, tuple(c))


def series_recursion(data: FusionData, side: str, vertex: int, K: int) -> list[int]:
    """First K+1 multiplicity coefficients by iterating c_k = M^T c_{k-1}
    from the unit vector at index 0 (exact integers)."""
    M = _side_matrix(data, side)
    k = len(M)
    if not 0 <= vertex < k:
        raise DomainError(f"vertex {vertex} out of range for size {k}")
    c = [0] * k
    c[0] = 1
    out = [c[vertex]]
    for _ in range(K):
        c = [sum(M[j][i] * c[j] for j in range(k)) for i in range(k)]
        out.append(c[vertex])
    return out


def series_cramer(data: FusionData, side: str, vertex: int) -> RationalSeries:
    """Closed form: numerator is det of (I - tM^T) with the vertex column
    replaced by the unit vector, denominator det(I - tM^T)."""
    M = _side_matrix(data, side)
    k = len(M)
    if not 0 <= vertex < k:
        raise DomainError(f"vertex {vertex} out of range for size {k}")
    full = identity_minus_t([list(r) for r in M], transpose=True)
    den = det_poly(full)
    replaced = [
        [IntPoly.const(1 if i == 0 else 0) if j == vertex else full[i][j] for j in range(k)]
        for i in range(k)
    ]
    num = det_poly(replaced)
    return RationalSeries(num, den)


def denominator_product(pair: NormalPair, V: Character | None = None) -> IntPoly:
    """prod over g in Upsilon(N) of (1 - chi_V(g) t), expanded exactly; the
    coefficients must come out rational integers."""
    if V is None:
        V = default_module(pair)
    _require_self_dual(V)
    coeffs = [Cyclotomic(1)]
    for gc in pair.upsilonN:
        root = V.values[gc]
        new = [Cyclotomic(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] = new[i] + c
            new[i + 1] = new[i + 1] - c * root
        coeffs = new
    rationals = []
    for c in coeffs:
        if not c.is_rational():
            raise CheckFailure(f"non-rational coefficient {c} in denominator product")
        rationals.append(c.to_rational())
    try:
        return poly_from_fractions(rationals)
    except ArithmeticError as exc:
        raise CheckFailure(str(exc)) from None


def _require_self_dual(V: Character) -> None:
    if any(v != v.conj() for v in V.values):
        raise DomainError(
            f"module {V.label} is not self-dual (character is not real-valued)"
        )


def denominator_identity_check(pair: NormalPair, V: Character | None = None) -> IntPoly:
    """det(I - t A^T) == det(I - t B^T) == prod (1 - chi_V(g) t), exactly."""
    if V is None:
        V = default_module(pair)
    data = fusion_matrices(pair, V)
    det_a = det_poly(identity_minus_t([list(r) for r in data.A], transpose=True))
    det_b = det_poly(identity_minus_t([list(r) for r in data.B], transpose=True))
    prod = denominator_product(pair, V)
    if det_a != det_b:
        raise CheckFailure(f"det(I-tA^T) = {det_a} differs from det(I-tB^T) = {det_b}")
    if det_a != prod:
        raise CheckFailure(
            f"det(I-tA^T) = {det_a} differs from the character product {prod}"
        )
    return det_a


DEFAULT_BRUTE_FORCE_BOUND = 20


def brute_force_multiplicity(
    data: FusionData, side: str, vertex: int, k: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> int:
    """dim Hom(basis member, V^(tensor k)) summed over the member's irreducible
    constituents, straight from the character inner products."""
    if k > bound:
        raise DomainError(f"tensor power {k} exceeds the bound {bound}")
    _require_self_dual(data.V)
    pair = data.pair
    if side == "restriction":
        group, tbl = pair.N, table(pair.N)
        chi_v = [data.V.values[gc] for gc in pair.n_class_to_g_class]
        mults = data.rbasis.mult_vectors[vertex]
    elif side == "induction":
        group, tbl = pair.G, table(pair.G)
        chi_v = list(data.V.values)
        mults = data.ibasis.mult_vectors[vertex]
    else:
        raise DomainError(f"side must be one of {SIDES}")
    sizes = group.class_sizes()
    powers = [Cyclotomic(1)] * len(chi_v)
    for _ in range(k):
        powers = [p * v for p, v in zip(powers, chi_v)]
    total = 0
    for const_idx, mult in enumerate(mults):
        if not mult:
            continue
        acc = Cyclotomic(0)
        const_vals = tbl.irreducibles[const_idx].values
        for size, pw, cv in zip(sizes, powers, const_vals):
            acc = acc + size * pw * cv.conj()
        val = Fraction(1, group.order) * acc
        if not val.is_integer() or val.to_integer() < 0:
            raise CheckFailure(f"brute-force multiplicity {val} is not a non-negative integer")
        total += mult * val.to_integer()
    return total


def invariants_series_check(pair: NormalPair, V: Character | None = None) -> RationalSeries:
    """The two invariants series coincide: m_check^0 == m_hat^0 as reduced
    rational functions."""
    data = fusion_matrices(pair, V)
    res = series_cramer(data, "restriction", 0)
    ind = series_cramer(data, "induction", 0)
    if res != ind:
        raise CheckFailure(
            f"invariants series differ for {pair.name}: {res} vs {ind}"
        )
    return res


# -- long/short classification and the index-correspondence relations --------

MAIN_RELATION_PAIRS = ("A2n-1^2", "Dn+1^2", "E6^2", "D4^3")
SPECIAL_RELATION_PAIRS = ("A2^2", "A2n^2")


def root_lengths(cartan: tuple[tuple[int, ...], ...]) -> list[str]:
    """Classify nodes of a connected non-simply-laced Cartan matrix as
    "long"/"short" via the symmetrizer; all "long" when simply laced."""
    k = len(cartan)
    eps: list[Fraction | None] = [None] * k
    eps[0] = Fraction(1)
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for j in range(k):
                if i != j and cartan[i][j] != 0 and eps[j] is None:
                    eps[j] = eps[i] * Fraction(cartan[i][j], cartan[j][i])
                    nxt.append(j)
        frontier = nxt
    if any(e is None for e in eps):
        raise CheckFailure("Cartan matrix graph is not connected")
    top = max(eps)
    bottom = min(eps)
    if top == bottom:
        return ["long"] * k
    out = []
    for e in eps:
        if e == top:
            out.append("long")
        elif e == bottom:
            out.append("short")
        else:
            out.append("middle")
    return out


@dataclass(frozen=True)
class RelationReport:
    pair_name: str
    kind: str  # "main" or "special"
    relations: tuple[tuple[int, str, int], ...]  # (vertex, length class, factor)


def corollary_relation_check(pair: NormalPair, pair_family: str | None = None) -> RelationReport:
    """Exact relations between m_check^i and m_hat^i under the index
    correspondence: equal on long roots, scaled by |G:N| on short roots; for
    the (D_2, C_2) and (D_2n, C_2n) pairs the invariants agree and every other
    vertex satisfies m_check^i = 2 m_hat^i."""
    name = pair_family or _family_of(pair)
    data = fusion_matrices(pair)
    k = data.size
    res = [series_cramer(data, "restriction", i) for i in range(k)]
    ind = [series_cramer(data, "induction", i) for i in range(k)]
    relations = []
    if name in MAIN_RELATION_PAIRS:
        lengths = root_lengths(data.cartanB)
        for i in range(k):
            if lengths[i] == "long":
                factor = 1
            elif lengths[i] == "short":
                factor = pair.index
            else:
                raise CheckFailure(f"unexpected middle-length root at vertex {i}")
            if res[i] != ind[i].scaled(factor):
                raise CheckFailure(
                    f"{pair.name} vertex {i}: m_check = {res[i]} is not "
                    f"{factor} * m_hat = {ind[i]}"
                )
            relations.append((i, lengths[i], factor))
        return RelationReport(pair.name, "main", tuple(relations))
    if name in SPECIAL_RELATION_PAIRS:
        if res[0] != ind[0]:
            raise CheckFailure(f"{pair.name}: invariants series differ")
        relations.append((0, "special", 1))
        for i in range(1, k):
            if res[i] != ind[i].scaled(2):
                raise CheckFailure(
                    f"{pair.name} vertex {i}: m_check = {res[i]} is not 2 * m_hat = {ind[i]}"
                )
            relations.append((i, "finite", 2))
        return RelationReport(pair.name, "special", tuple(relations))
    raise DomainError(
        f"index-correspondence relations are only stated for "
        f"{MAIN_RELATION_PAIRS + SPECIAL_RELATION_PAIRS}"
    )


def _family_of(pair: NormalPair) -> str:
    gi = pair.G.family_info or (None, None)
    ni = pair.N.family_info or (None, None)
    if gi[0] == "binary_dihedral" and ni[0] == "binary_dihedral":
        return "A2n-1^2"
    if gi[0] == "binary_octahedral":
        return "E6^2"
    if gi[0] == "binary_tetrahedral" and ni[0] == "binary_dihedral":
        return "D4^3"
    if gi[0] == "binary_dihedral" and ni[0] == "cyclic":
        if gi[1] == 2 and ni[1] == 2:
            return "A2^2"
        if ni[1] == 2 * gi[1]:
            return "Dn+1^2"
        if ni[1] == gi[1]:
            return "A2n^2"
        return "unknown"
    if gi[0] == "symmetric4":
        return "S4A4"
    return "unknown"
