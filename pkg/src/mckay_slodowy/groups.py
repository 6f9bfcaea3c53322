"""Finite groups with exact element arithmetic.

Two element backends: 2x2 matrices over cyclotomic numbers (the SU(2)
subgroups, built from their standard generators) and permutations of
{1..m} (S4, A4).  Groups are closed by breadth-first multiplication from
the identity; conjugacy classes come from orbit enumeration.  Normal
pairs carry the embedding of N into G and the set Upsilon(N) of G-class
representatives lying in N.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Cyclotomic, root_of_unity, sqrt2, sqrt_minus1
from .errors import CheckFailure, ClosureBoundExceeded, DomainError

DEFAULT_MAX_ORDER = 10000


def _max_order(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("MSC_MAX_GROUP_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


class Matrix2:
    """2x2 matrix over Cyclotomic, row-major entries (a, b, c, d)."""

    __slots__ = ("entries",)

    def __init__(self, a, b, c, d):
        object.__setattr__(
            self, "entries", tuple(Cyclotomic(x) if not isinstance(x, Cyclotomic) else x for x in (a, b, c, d))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Matrix2 is immutable")

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, x, y) -> "Matrix2":
        return cls(x, 0, 0, y)

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Matrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self) -> Cyclotomic:
        a, b, c, d = self.entries
        return a * d - b * c

    def inverse(self) -> "Matrix2":
        a, b, c, d = self.entries
        dt = self.det()
        return Matrix2(d / dt, -b / dt, -c / dt, a / dt)

    def trace(self) -> Cyclotomic:
        return self.entries[0] + self.entries[3]

    def is_unitary(self) -> bool:
        a, b, c, d = self.entries
        conj_t = Matrix2(a.conj(), c.conj(), b.conj(), d.conj())
        return conj_t * self == Matrix2.identity()

    def __eq__(self, other):
        return isinstance(other, Matrix2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix2{self.entries}"

    def serialize(self) -> list[str]:
        return [e.to_text() for e in self.entries]


class Permutation:
    """Permutation of {1..m}, stored as the 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise DomainError(f"not a bijection: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def from_cycles(cls, m: int, *cycles) -> "Permutation":
        """Build from 1-based cycles, e.g. from_cycles(4, (1,2,3))."""
        imgs = list(range(m))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                imgs[a - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls(imgs)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p*q)(i) = p(q(i)): apply q first
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{tuple(i + 1 for i in self.images)}"

    def serialize(self) -> list[int]:
        return [i + 1 for i in self.images]


class FiniteGroup:
    """A concrete finite group: ordered elements (identity first), conjugacy
    classes and chosen class representatives."""

    def __init__(self, elements, generators, name=""):
        self.elements = list(elements)
        self.order = len(self.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.generators = list(generators)
        self.name = name
        self.family_info: tuple[str, int | None] | None = None
        self.class_labels: list[str] | None = None
        self._inverses: list[int] | None = None
        self._element_orders: list[int] | None = None
        self._mul_cache: dict[tuple[int, int], int] = {}
        self.classes: list[list[int]] = []
        self.class_reps: list[int] = []
        self.class_of: list[int] = []
        self._compute_classes()

    # -- basic operations ------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._mul_cache.get(key)
        if out is None:
            out = self.index[self.elements[i] * self.elements[j]]
            self._mul_cache[key] = out
        return out

    def inv(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = [self.index[e.inverse()] for e in self.elements]
        return self._inverses[i]

    def element_order(self, i: int) -> int:
        if self._element_orders is None:
            self._element_orders = [0] * self.order
        if self._element_orders[i] == 0:
            k, j = 1, i
            while j != 0:
                j = self.mul(j, i)
                k += 1
            self._element_orders[i] = k
        return self._element_orders[i]

    def exponent(self) -> int:
        from math import lcm

        e = 1
        for c in self.class_reps:
            e = lcm(e, self.element_order(c))
        return e

    def _compute_classes(self) -> None:
        # conjugation by generators generates conjugation by the whole group
        gen_idx = [self.index[g] for g in self.generators]
        gen_inv = [self.index[self.elements[g].inverse()] for g in gen_idx]
        seen = [False] * self.order
        classes = []
        for start in range(self.order):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            frontier = [start]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in zip(gen_idx, gen_inv):
                        y = self.mul(self.mul(g, x), gi)
                        if not seen[y]:
                            seen[y] = True
                            orbit.append(y)
                            nxt.append(y)
                frontier = nxt
            classes.append(sorted(orbit))
        classes.sort(key=lambda c: c[0])
        self.classes = classes
        self.class_reps = [c[0] for c in classes]
        self.class_of = [0] * self.order
        for ci, members in enumerate(classes):
            for m in members:
                self.class_of[m] = ci

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def set_class_reps(self, reps: list[int], labels: list[str] | None = None) -> None:
        """Reorder the conjugacy classes to follow the given representatives."""
        if len(reps) != len(self.classes):
            raise DomainError(
                f"{len(reps)} representatives given for {len(self.classes)} classes"
            )
        class_ids = [self.class_of[r] for r in reps]
        if sorted(class_ids) != list(range(len(self.classes))):
            raise DomainError("representatives do not hit every class exactly once")
        self.classes = [self.classes[ci] for ci in class_ids]
        self.class_reps = list(reps)
        for ci, members in enumerate(self.classes):
            for m in members:
                self.class_of[m] = ci
        if labels is not None:
            self.class_labels = list(labels)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "classes": [
                {"rep": self.elements[r].serialize(), "size": len(c)}
                for r, c in zip(self.class_reps, self.classes)
            ],
        }

    def __repr__(self):
        return f"FiniteGroup({self.name or 'unnamed'}, order={self.order})"


def generate(gens, max_order: int | None = None, name: str = "") -> FiniteGroup:
    """Close a nonempty generator list under multiplication (breadth-first
    from the identity, generator order as given)."""
    gens = list(gens)
    if not gens:
        raise DomainError("at least one generator required")
    first = gens[0]
    if isinstance(first, Matrix2):
        identity = Matrix2.identity()
    elif isinstance(first, Permutation):
        identity = Permutation.identity(len(first.images))
    else:
        raise DomainError(f"unsupported element type {type(first).__name__}")
    for g in gens:
        if type(g) is not type(first):
            raise DomainError("mixed element backends")
    bound = _max_order(max_order)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                p = w * g
                if p not in index:
                    if len(elements) >= bound:
                        raise ClosureBoundExceeded(
                            f"closure exceeded the bound of {bound} elements"
                        )
                    index[p] = len(elements)
                    elements.append(p)
                    nxt.append(p)
        frontier = nxt
    return FiniteGroup(elements, gens, name=name)


# -- the named families ---------------------------------------------------

FAMILY_NAMES = (
    "cyclic",
    "binary_dihedral",
    "binary_tetrahedral",
    "binary_octahedral",
    "symmetric4",
    "alternating4",
)


def _tetra_generators() -> tuple[Matrix2, Matrix2, Matrix2]:
    i = sqrt_minus1()
    half_inv_s2 = Fraction(1, 2) * sqrt2()  # 1/sqrt(2)
    t8, t8i = root_of_unity(8, 1), root_of_unity(8, -1)
    x = Matrix2.diagonal(i, -i)
    y = Matrix2(0, i, i, 0)
    z = Matrix2(
        half_inv_s2 * t8i, half_inv_s2 * t8i, -(half_inv_s2 * t8), half_inv_s2 * t8
    )
    return x, y, z


def family(name: str, n: int | None = None, max_order: int | None = None) -> FiniteGroup:
    """One of the named group families, with conjugacy class representatives
    ordered to match its character table columns.  Results are shared
    (memoized) per parameter set."""
    return _family_cached(name, n, max_order)


@lru_cache(maxsize=None)
def _family_cached(name: str, n: int | None, max_order: int | None) -> FiniteGroup:
    if name not in FAMILY_NAMES:
        raise DomainError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")

    if name == "cyclic":
        if n is None or n < 2:
            raise DomainError("cyclic requires n >= 2")
        z = Matrix2.diagonal(root_of_unity(n, -1), root_of_unity(n, 1))
        G = generate([z], max_order, name=f"C_{n}")
        zi = G.index[z]
        reps, cur = [0], zi
        for _ in range(n - 1):
            reps.append(cur)
            cur = G.mul(cur, zi)
        labels = ["1"] + [f"z^{k}" if k > 1 else "z" for k in range(1, n)]
        G.set_class_reps(reps, labels)
        G.family_info = ("cyclic", n)
        return G

    if name == "binary_dihedral":
        if n is None or n < 2:
            raise DomainError("binary_dihedral requires n >= 2")
        x = Matrix2.diagonal(root_of_unity(2 * n, -1), root_of_unity(2 * n, 1))
        y = Matrix2(0, sqrt_minus1(), sqrt_minus1(), 0)
        G = generate([x, y], max_order, name=f"D_{n}")
        if G.order != 4 * n:
            raise CheckFailure(f"binary dihedral closure has order {G.order}, expected {4*n}")
        xi, yi = G.index[x], G.index[y]
        powers = [0]
        for _ in range(2 * n - 1):
            powers.append(G.mul(powers[-1], xi))
        reps = [0, powers[n]] + powers[1:n] + [yi, G.mul(yi, xi)]
        labels = ["1", "-1"] + [f"x^{k}" if k > 1 else "x" for k in range(1, n)] + ["y", "yx"]
        G.set_class_reps(reps, labels)
        G.family_info = ("binary_dihedral", n)
        return G

    if name == "binary_tetrahedral":
        x, y, z = _tetra_generators()
        G = generate([x, y, z], max_order, name="T")
        xi, zi = G.index[x], G.index[z]
        minus1 = G.mul(xi, xi)
        z2 = G.mul(zi, zi)
        reps = [0, minus1, xi, zi, z2, G.mul(minus1, zi), G.mul(minus1, z2)]
        G.set_class_reps(reps, ["1", "-1", "x", "z", "z^2", "-z", "-z^2"])
        G.family_info = ("binary_tetrahedral", None)
        return G

    if name == "binary_octahedral":
        _, y, z = _tetra_generators()
        u = Matrix2.diagonal(root_of_unity(8, 1), root_of_unity(8, -1))
        G = generate([u, y, z], max_order, name="O")
        ui, yi, zi = G.index[u], G.index[y], G.index[z]
        u2 = G.mul(ui, ui)
        minus1 = G.mul(u2, u2)
        reps = [0, minus1, ui, G.mul(minus1, ui), yi, G.mul(ui, yi), zi, G.mul(minus1, zi)]
        G.set_class_reps(reps, ["1", "-1", "u", "-u", "y", "uy", "z", "-z"])
        G.family_info = ("binary_octahedral", None)
        return G

    if name == "symmetric4":
        a = Permutation.from_cycles(4, (1, 2))
        b = Permutation.from_cycles(4, (1, 2, 3, 4))
        G = generate([a, b], max_order, name="S_4")
        reps = [
            0,
            G.index[Permutation.from_cycles(4, (1, 2))],
            G.index[Permutation.from_cycles(4, (1, 2, 3))],
            G.index[Permutation.from_cycles(4, (1, 2, 3, 4))],
            G.index[Permutation.from_cycles(4, (1, 2), (3, 4))],
        ]
        G.set_class_reps(reps, ["1", "(12)", "(123)", "(1234)", "(12)(34)"])
        G.family_info = ("symmetric4", None)
        return G

    if name == "alternating4":
        a = Permutation.from_cycles(4, (1, 2, 3))
        b = Permutation.from_cycles(4, (1, 2, 4))
        G = generate([a, b], max_order, name="A_4")
        reps = [
            0,
            G.index[Permutation.from_cycles(4, (1, 2, 3))],
            G.index[Permutation.from_cycles(4, (1, 3, 2))],
            G.index[Permutation.from_cycles(4, (1, 2), (3, 4))],
        ]
        G.set_class_reps(reps, ["1", "(123)", "(132)", "(12)(34)"])
        G.family_info = ("alternating4", None)
        return G

    raise DomainError(f"unknown family {name!r}")


class NormalPair:
    """A pair N normal in G with the embedding and Upsilon(N) data."""

    def __init__(self, G: FiniteGroup, N: FiniteGroup, name: str = "", default_v: str | None = None):
        self.G = G
        self.N = N
        self.name = name
        self.default_v_label = default_v
        try:
            self.embed = [G.index[e] for e in N.elements]
        except KeyError as exc:
            raise DomainError(f"subgroup element {exc.args[0]!r} not found in G") from None
        if G.order % N.order:
            raise DomainError("subgroup order does not divide group order")
        self.index = G.order // N.order
        image = set(self.embed)
        # conjugation by the generators implies conjugation by all of G
        for gen in G.generators:
            g = G.index[gen]
            gi = G.inv(g)
            for h in self.embed:
                if G.mul(G.mul(g, h), gi) not in image:
                    raise DomainError(f"{N.name} is not normal in {G.name}")
        self._image = image
        self._g_to_n = {gidx: nidx for nidx, gidx in enumerate(self.embed)}
        self.upsilonN = [
            ci for ci, rep in enumerate(G.class_reps) if rep in image
        ]
        # each N-class sits inside a single G-class
        self.n_class_to_g_class = [
            G.class_of[self.embed[rep]] for rep in N.class_reps
        ]
        self._induction_profile: list[dict[int, int]] | None = None

    def exhaustive_normality_check(self) -> bool:
        """g n g^-1 in N for every g in G and n in N (exact, element by element)."""
        G = self.G
        for g in range(G.order):
            gi = G.inv(g)
            for h in self.embed:
                if G.mul(G.mul(g, h), gi) not in self._image:
                    return False
        return True

    def g_class_with_n_values(self, g_class: int) -> int | None:
        """Some N-class contained in the given G-class, or None."""
        for nc, gc in enumerate(self.n_class_to_g_class):
            if gc == g_class:
                return nc
        return None

    def induction_profile(self) -> list[dict[int, int]]:
        """For each G-class rep g, the counts {N-class: #{x in G : x^-1 g x in that class}}."""
        if self._induction_profile is None:
            G = self.G
            profile: list[dict[int, int]] = []
            for rep in G.class_reps:
                counts: dict[int, int] = {}
                for x in range(G.order):
                    y = G.mul(G.mul(G.inv(x), rep), x)
                    n_idx = self._g_to_n.get(y)
                    if n_idx is not None:
                        nc = self.N.class_of[n_idx]
                        counts[nc] = counts.get(nc, 0) + 1
                profile.append(counts)
            self._induction_profile = profile
        return self._induction_profile

    def __repr__(self):
        return f"NormalPair({self.name or (self.N.name + ' < ' + self.G.name)})"


PAIR_NAMES = ("A2n-1^2", "Dn+1^2", "A2n^2", "E6^2", "D4^3", "A2^2", "S4A4")

# family minimum for the n-parametrized pairs
PAIR_N_MIN = {"A2n-1^2": 3, "Dn+1^2": 2, "A2n^2": 2}


def normal_pair(name: str, n: int | None = None, max_order: int | None = None) -> NormalPair:
    """One of the distinguished pairs N < G, with the standard embeddings.
    Results are shared (memoized) per parameter set."""
    return _normal_pair_cached(name, n, max_order)


@lru_cache(maxsize=None)
def _normal_pair_cached(name: str, n: int | None, max_order: int | None) -> NormalPair:
    if name not in PAIR_NAMES:
        raise DomainError(f"unknown pair {name!r}; choose from {PAIR_NAMES}")
    if name in PAIR_N_MIN:
        if n is None or n < PAIR_N_MIN[name]:
            raise DomainError(f"pair {name} requires n >= {PAIR_N_MIN[name]}")
    if name == "A2n-1^2":
        G = family("binary_dihedral", 2 * (n - 1), max_order)
        N = family("binary_dihedral", n - 1, max_order)
        return NormalPair(G, N, name=f"(D_{2*(n-1)}, D_{n-1})", default_v="delta_1")
    if name == "Dn+1^2":
        G = family("binary_dihedral", n, max_order)
        N = family("cyclic", 2 * n, max_order)
        return NormalPair(G, N, name=f"(D_{n}, C_{2*n})", default_v="delta_1")
    if name == "A2n^2":
        G = family("binary_dihedral", 2 * n, max_order)
        N = family("cyclic", 2 * n, max_order)
        return NormalPair(G, N, name=f"(D_{2*n}, C_{2*n})", default_v="delta_1")
    if name == "E6^2":
        G = family("binary_octahedral", max_order=max_order)
        N = family("binary_tetrahedral", max_order=max_order)
        return NormalPair(G, N, name="(O, T)", default_v="omega_1^+")
    if name == "D4^3":
        G = family("binary_tetrahedral", max_order=max_order)
        N = family("binary_dihedral", 2, max_order)
        return NormalPair(G, N, name="(T, D_2)", default_v="tau_1")
    if name == "A2^2":
        G = family("binary_dihedral", 2, max_order)
        N = family("cyclic", 2, max_order)
        return NormalPair(G, N, name="(D_2, C_2)", default_v="delta_1")
    if name == "S4A4":
        G = family("symmetric4", max_order=max_order)
        N = family("alternating4", max_order=max_order)
        return NormalPair(G, N, name="(S_4, A_4)", default_v="rho_2^+")
    raise DomainError(name)


def pair_from_groups(G: FiniteGroup, N: FiniteGroup, name: str = "") -> NormalPair:
    """Generic pair constructor: N's elements must all occur in G."""
    return NormalPair(G, N, name=name)
