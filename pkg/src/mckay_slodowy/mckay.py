"""McKay-Slodowy data of a normal pair: the pared-down restriction and
induction bases, the two fusion matrices from tensoring with the defining
module, Cartan matrices, representation graphs and their identification
in the affine catalog, null vectors and eigenvector structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import dynkin
from .characters import Character, ClassFunction, induce, restrict, table
from .cyclotomic import Cyclotomic
from .errors import CheckFailure, DomainError
from .groups import NormalPair
from .linalg import nullspace, rank, solve_exact


@dataclass(frozen=True)
class RestrictionBasis:
    """Distinct restrictions of the irreducible G-characters, trivial first."""

    pair: NormalPair
    members: tuple[ClassFunction, ...]
    mult_vectors: tuple[tuple[int, ...], ...]  # N-irreducible multiplicities
    origins: tuple[tuple[int, ...], ...]  # G-irreducible indices restricting to each
    labels: tuple[str, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.values[0].to_integer() for m in self.members)

    def index_of_origin(self, g_label: str) -> int:
        gt = table(self.pair.G)
        gi = gt.labels.index(g_label)
        for i, orig in enumerate(self.origins):
            if gi in orig:
                return i
        raise DomainError(f"{g_label} does not restrict to a basis member")


@dataclass(frozen=True)
class InductionBasis:
    """Distinct inductions of the irreducible N-characters, ordered by the
    correspondence with the restriction basis (trivial-origin first)."""

    pair: NormalPair
    members: tuple[ClassFunction, ...]
    mult_vectors: tuple[tuple[int, ...], ...]  # G-irreducible multiplicities
    origins: tuple[tuple[int, ...], ...]  # N-irreducible indices inducing to each
    labels: tuple[str, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.values[0].to_integer() for m in self.members)

    def index_of_origin(self, n_label: str) -> int:
        nt = table(self.pair.N)
        ni = nt.labels.index(n_label)
        for i, orig in enumerate(self.origins):
            if ni in orig:
                return i
        raise DomainError(f"{n_label} does not induce to a basis member")


def restriction_basis(pair: NormalPair) -> RestrictionBasis:
    cached = getattr(pair, "_restriction_basis", None)
    if cached is not None:
        return cached
    gt = table(pair.G)
    members: list[ClassFunction] = []
    mults: list[tuple[int, ...]] = []
    origins: list[list[int]] = []
    for gi, rho in enumerate(gt):
        dec = restrict(pair, rho)
        if dec.function in members:
            origins[members.index(dec.function)].append(gi)
        else:
            members.append(dec.function)
            mults.append(dec.multiplicities)
            origins.append([gi])
    expected = len(pair.upsilonN)
    if len(members) != expected:
        raise CheckFailure(
            f"{len(members)} distinct restrictions but |Upsilon(N)| = {expected}"
        )
    matrix = [[Fraction(x) for x in row] for row in mults]
    if rank(matrix) != len(members):
        raise CheckFailure("restriction members are linearly dependent")
    basis = RestrictionBasis(
        pair,
        tuple(members),
        tuple(mults),
        tuple(tuple(o) for o in origins),
        tuple("check(" + gt.labels[o[0]] + ")" for o in origins),
    )
    pair._restriction_basis = basis
    return basis


def induction_basis(pair: NormalPair) -> InductionBasis:
    cached = getattr(pair, "_induction_basis", None)
    if cached is not None:
        return cached
    nt = table(pair.N)
    rbasis = restriction_basis(pair)
    members: list[ClassFunction] = []
    mults: list[tuple[int, ...]] = []
    origins: list[list[int]] = []
    for ni, phi in enumerate(nt):
        dec = induce(pair, phi)
        if dec.function in members:
            origins[members.index(dec.function)].append(ni)
        else:
            members.append(dec.function)
            mults.append(dec.multiplicities)
            origins.append([ni])
    if len(members) != len(pair.upsilonN):
        raise CheckFailure(
            f"{len(members)} distinct inductions but |Upsilon(N)| = {len(pair.upsilonN)}"
        )
    # order by the bijection f(check rho_i) = hat phi_k for any constituent
    # phi_k of check rho_i; all constituents must induce to one member
    order: list[int] = []
    for i, rvec in enumerate(rbasis.mult_vectors):
        targets = set()
        for ni, m in enumerate(rvec):
            if m:
                for mi, orig in enumerate(origins):
                    if ni in orig:
                        targets.add(mi)
        if len(targets) != 1:
            raise CheckFailure(
                f"restriction member {i} has constituents inducing to {len(targets)} members"
            )
        order.append(targets.pop())
    if sorted(order) != list(range(len(members))):
        raise CheckFailure("induction/restriction correspondence is not a bijection")
    basis = InductionBasis(
        pair,
        tuple(members[i] for i in order),
        tuple(mults[i] for i in order),
        tuple(tuple(origins[i]) for i in order),
        tuple("hat(" + nt.labels[origins[i][0]] + ")" for i in order),
    )
    pair._induction_basis = basis
    return basis


@dataclass(frozen=True)
class FusionData:
    """The two fusion matrices of a pair for a fixed module V, with bases."""

    pair: NormalPair
    V: Character
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    rbasis: RestrictionBasis
    ibasis: InductionBasis

    @property
    def size(self) -> int:
        return len(self.A)

    @property
    def cartanA(self) -> tuple[tuple[int, ...], ...]:
        return _cartan(self.A)

    @property
    def cartanB(self) -> tuple[tuple[int, ...], ...]:
        return _cartan(self.B)

    def v_values_on_upsilon(self) -> list[Cyclotomic]:
        """chi_V(g) for g running over Upsilon(N) (as G-class representatives)."""
        return [self.V.values[gc] for gc in self.pair.upsilonN]

    def to_json(self) -> dict:
        return {
            "pair": self.pair.name,
            "V": self.V.label,
            "A": [list(r) for r in self.A],
            "B": [list(r) for r in self.B],
            "cartan_A": [list(r) for r in self.cartanA],
            "cartan_B": [list(r) for r in self.cartanB],
            "restriction_labels": list(self.rbasis.labels),
            "induction_labels": list(self.ibasis.labels),
            "restriction_degrees": list(self.rbasis.degrees),
            "induction_degrees": list(self.ibasis.degrees),
        }


def _cartan(A) -> tuple[tuple[int, ...], ...]:
    n = len(A)
    return tuple(
        tuple((2 if i == j else 0) - A[i][j] for j in range(n)) for i in range(n)
    )


def _solve_in_basis(vectors, target) -> tuple[int, ...]:
    """Write target as an integer combination of the (independent) vectors."""
    k = len(vectors)
    m = len(target)
    rows = [[Fraction(vectors[j][i]) for j in range(k)] for i in range(m)]
    sol = solve_exact(rows, [Fraction(x) for x in target])
    out = []
    for c in sol:
        if c.denominator != 1 or c < 0:
            raise CheckFailure(f"fusion coefficient {c} is not a non-negative integer")
        out.append(int(c))
    return tuple(out)


def default_module(pair: NormalPair) -> Character:
    """The pair's defining module (the 2-dimensional imbedding character,
    or rho_2^+ for (S_4, A_4))."""
    if pair.default_v_label is None:
        raise DomainError(
            "no default module for a generic pair; pass V explicitly"
        )
    return table(pair.G)[pair.default_v_label]


def fusion_matrices(pair: NormalPair, V: Character | None = None) -> FusionData:
    """Decompose V tensor (each basis member) in the basis, on both sides."""
    if V is None:
        V = default_module(pair)
    if V.group is not pair.G:
        raise DomainError("V must be a character of the pair's big group")
    cache = getattr(pair, "_fusion_cache", None)
    if cache is None:
        cache = pair._fusion_cache = {}
    if V.label in cache:
        return cache[V.label]
    rbasis = restriction_basis(pair)
    ibasis = induction_basis(pair)
    nt, gt = table(pair.N), table(pair.G)
    v_res = restrict(pair, V).function

    k = len(rbasis.members)
    A_cols = []
    for j in range(k):
        product = v_res * rbasis.members[j]
        A_cols.append(_solve_in_basis(rbasis.mult_vectors, nt.decompose(product)))
    B_cols = []
    for j in range(k):
        product = V.base * ibasis.members[j]
        B_cols.append(_solve_in_basis(ibasis.mult_vectors, gt.decompose(product)))
    A = tuple(tuple(A_cols[j][i] for j in range(k)) for i in range(k))
    B = tuple(tuple(B_cols[j][i] for j in range(k)) for i in range(k))
    data = FusionData(pair, V, A, B, rbasis, ibasis)
    cache[V.label] = data
    return data


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    multiplicity: int
    arrow_to: int | None  # None for symmetric edges


@dataclass(frozen=True)
class RepresentationGraph:
    side: str
    node_labels: tuple[str, ...]
    degrees: tuple[int, ...]
    edges: tuple[Edge, ...]
    dynkin_type: str

    def to_dot(self) -> str:
        lines = ["digraph representation_graph {"]
        for i, (lbl, deg) in enumerate(zip(self.node_labels, self.degrees)):
            lines.append(f'  {i} [label="{lbl} ({deg})"];')
        for e in self.edges:
            if e.arrow_to is None:
                lines.append(
                    f"  {e.i} -> {e.j} [dir=none, multiplicity={e.multiplicity}];"
                )
            else:
                src = e.j if e.arrow_to == e.i else e.i
                lines.append(
                    f"  {src} -> {e.arrow_to} [multiplicity={e.multiplicity}];"
                )
        lines.append("}")
        return "\n".join(lines)


def graph(data: FusionData, side: str = "restriction") -> RepresentationGraph:
    """Representation graph of one side, identified against the affine catalog."""
    if side not in ("restriction", "induction"):
        raise DomainError("side must be 'restriction' or 'induction'")
    M = data.A if side == "restriction" else data.B
    basis = data.rbasis if side == "restriction" else data.ibasis
    k = len(M)
    edges = []
    for i in range(k):
        if M[i][i]:
            edges.append(Edge(i, i, M[i][i], i if M[i][i] > 1 else None))
        for j in range(i + 1, k):
            m = max(M[i][j], M[j][i])
            if m == 0:
                continue
            if M[i][j] == M[j][i]:
                edges.append(Edge(i, j, m, None))
            else:
                arrow_to = i if M[i][j] > M[j][i] else j
                edges.append(Edge(i, j, m, arrow_to))
    label = dynkin.identify([list(r) for r in M])
    return RepresentationGraph(
        side, basis.labels, basis.degrees, tuple(edges), label
    )


@dataclass(frozen=True)
class NullVectorReport:
    variant: str  # "standard", "transposed", or "both"
    alpha_A: tuple[int, ...]
    alpha_B: tuple[int, ...]
    kernel_dims: tuple[int, int]
    annihilations: dict = field(hash=False, default_factory=dict)


def _mat_vec(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _is_zero(v) -> bool:
    return all(x == 0 for x in v)


def null_vector_check(data: FusionData) -> NullVectorReport:
    """Verify the degree vectors annihilated by the Cartan matrices, in one of
    the two documented variants, and that both kernels are 1-dimensional."""
    from math import gcd

    pair = data.pair
    CA, CB = data.cartanA, data.cartanB
    ind_degs = data.ibasis.degrees
    if any(d % pair.index for d in ind_degs):
        raise CheckFailure("induced degrees are not divisible by |G:N|")
    alpha_A = tuple(d // pair.index for d in ind_degs)
    alpha_B = data.rbasis.degrees
    for v, nm in ((alpha_A, "alpha_A"), (alpha_B, "alpha_B")):
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            raise CheckFailure(f"{nm} = {v} is not a coprime integer vector")
    dims = []
    for C in (CA, CB):
        ker = nullspace([[Fraction(x) for x in row] for row in C])
        dims.append(len(ker))
    if dims != [1, 1]:
        raise CheckFailure(f"Cartan kernels have dimensions {dims}, expected 1 and 1")

    CAt = tuple(tuple(CA[j][i] for j in range(data.size)) for i in range(data.size))
    CBt = tuple(tuple(CB[j][i] for j in range(data.size)) for i in range(data.size))
    ann = {
        "C_A.alpha_A": _is_zero(_mat_vec(CA, alpha_A)),
        "C_B.alpha_B": _is_zero(_mat_vec(CB, alpha_B)),
        "C_A^T.alpha_B": _is_zero(_mat_vec(CAt, alpha_B)),
        "C_B^T.alpha_A": _is_zero(_mat_vec(CBt, alpha_A)),
    }
    standard = ann["C_A.alpha_A"] and ann["C_B.alpha_B"]
    transposed = ann["C_A^T.alpha_B"] and ann["C_B^T.alpha_A"]
    if standard and transposed:
        variant = "both"
    elif standard:
        variant = "standard"
    elif transposed:
        variant = "transposed"
    else:
        raise CheckFailure(
            f"neither null-vector variant holds for {pair.name}: {ann}"
        )
    return NullVectorReport(variant, alpha_A, alpha_B, (1, 1), ann)


def characteristic_identity_check(data: FusionData):
    """char(A) == char(B) == prod over Upsilon(N) of (t - chi_V(g)), exactly."""
    from .polynomials import char_poly, poly_from_fractions

    pa = char_poly([list(r) for r in data.A])
    pb = char_poly([list(r) for r in data.B])
    if pa != pb:
        raise CheckFailure(
            f"characteristic polynomials differ: {pa} vs {pb}"
        )
    coeffs = [Cyclotomic(1)]
    for val in data.v_values_on_upsilon():
        new = [Cyclotomic(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * val
        coeffs = new
    rationals = []
    for c in coeffs:
        if not c.is_rational():
            raise CheckFailure(f"non-rational coefficient {c} in the eigenvalue product")
        rationals.append(c.to_rational())
    try:
        prod = poly_from_fractions(rationals)
    except ArithmeticError as exc:
        raise CheckFailure(str(exc)) from None
    if pa != prod:
        raise CheckFailure(
            f"char poly {pa} differs from the eigenvalue product {prod}"
        )
    return pa


def eigenvector_check(data: FusionData) -> list[Cyclotomic]:
    """Restricted/induced character-value vectors are exact eigenvectors of
    (dI - A^T) resp. (dI - B^T) with eigenvalue d - chi_V(g); the degree
    vectors (g = identity) lie in the kernels.  Returns the eigenvalue list,
    one per Upsilon(N) class."""
    pair = data.pair
    d = data.V.degree
    k = data.size
    At = [[data.A[j][i] for j in range(k)] for i in range(k)]
    Bt = [[data.B[j][i] for j in range(k)] for i in range(k)]
    eigenvalues = []
    for gc in pair.upsilonN:
        chi_v = data.V.values[gc]
        lam = d - chi_v
        eigenvalues.append(lam)
        nc = pair.g_class_with_n_values(gc)
        v = [m.values[nc] for m in data.rbasis.members]
        w = [m.values[gc] for m in data.ibasis.members]
        for i in range(k):
            lhs = d * v[i] - sum((At[i][j] * v[j] for j in range(k)), Cyclotomic(0))
            if lhs != lam * v[i]:
                raise CheckFailure(
                    f"restriction eigenvector fails at class {gc}, row {i}"
                )
            lhs = d * w[i] - sum((Bt[i][j] * w[j] for j in range(k)), Cyclotomic(0))
            if lhs != lam * w[i]:
                raise CheckFailure(
                    f"induction eigenvector fails at class {gc}, row {i}"
                )
    return eigenvalues
