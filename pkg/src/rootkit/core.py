"""Exact construction of reduced irreducible root systems.

Two construction paths coexist on purpose. The classical families A/B/C/D
and G2 are realized literally in their standard coordinates (type A and G2
inside the sum-zero hyperplane of Q^n, types B/C/D in Q^n with the standard
inner product), so that textbook identities hold bit-exactly. E6/E7/E8/F4
are generated by reflection closure from the Cartan matrix, with the form
given by the minimal positive-integer symmetrization of the Cartan matrix;
``closure_system`` exposes the same path for every family so the two models
can be cross-checked against each other.

All coordinates are exact rationals. Roots are stored in a deterministic
order (by height of the positive representative, then lexicographic), so
indices, orbits and serialized reports are reproducible across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from . import linalg
from .errors import BadIndex, InadmissibleRank, NonIntegralSolution, NotARoot, ParseError
from .linalg import Vector, dot, mat_vec, vector, vscale, vsub

_FAMILIES = "ABCDEFG"
_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")

# Lower rank bounds; E/F/G are pinned separately.
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXACT_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanType:
    """A named irreducible type: family letter A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InadmissibleRank(f"unknown family {self.family!r}")
        if self.family in _EXACT_RANKS:
            if self.rank not in _EXACT_RANKS[self.family]:
                raise InadmissibleRank(
                    f"{self.family}{self.rank}: admissible ranks for "
                    f"{self.family} are {_EXACT_RANKS[self.family]}")
        elif self.rank < _MIN_RANK[self.family]:
            raise InadmissibleRank(
                f"{self.family}{self.rank}: family {self.family} requires "
                f"rank >= {_MIN_RANK[self.family]}")

    @staticmethod
    def parse(text: str) -> "CartanType":
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise ParseError(f"cannot parse Cartan type {text!r} "
                             "(expected e.g. 'A3', 'G2')")
        return CartanType(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def admissible_types(max_rank: int) -> list[CartanType]:
    """All admissible irreducible types with rank <= max_rank, in family order."""
    out = []
    for fam in _FAMILIES:
        if fam in _EXACT_RANKS:
            ranks = [r for r in _EXACT_RANKS[fam] if r <= max_rank]
        else:
            ranks = range(_MIN_RANK[fam], max_rank + 1)
        out.extend(CartanType(fam, r) for r in ranks)
    return out


def cartan_matrix(ctype: CartanType) -> tuple[tuple[int, ...], ...]:
    """Integer Cartan matrix A[i][j] = <alpha_i, alpha_j^v> in Bourbaki numbering."""
    n = ctype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = ctype.family
    if fam in "ABC":
        for i in range(n - 1):
            edge(i, i + 1)
        if fam == "B" and n >= 2:
            a[n - 2][n - 1] = -2  # last simple root is short
        if fam == "C":
            a[n - 1][n - 2] = -2  # last simple root is long
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif fam == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            edge(i, j)
        if n >= 7:
            edge(5, 6)
        if n == 8:
            edge(6, 7)
    elif fam == "F":
        for i in range(3):
            edge(i, i + 1)
        a[1][2] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
    else:  # G2
        edge(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan) -> tuple[int, ...]:
    """Minimal positive integers d making A[i][j]*d_j symmetric in (i, j).

    2*d_i is the squared length of the i-th simple root in the Cartan-closure
    model. Exists and is unique up to scale because the diagram is connected.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


class LengthClass(Enum):
    LONG = "long"
    SHORT = "short"


class RootSystem:
    """Immutable bundle of roots, base, positives, form and index tables.

    Not constructed directly: use ``build_system`` / ``closure_system`` /
    ``dual_system``. Everything is derived from (simples, roots, form) at
    construction time and validated: closure under simple reflections,
    integrality and sign-homogeneity of base coefficients, reducedness,
    symmetry and positive-definiteness of the form on the span.
    """

    def __init__(self, ctype: CartanType, dim: int, simples, roots, form):
        self.ctype = ctype
        self.dim = dim
        self.rank = len(simples)
        self.simples = tuple(vector(v) for v in simples)
        self.form = linalg.matrix(form)
        if self.form != linalg.transpose(self.form):
            raise ValueError("form is not symmetric")

        gram_simples = tuple(
            tuple(linalg.form_value(self.form, a, b) for b in self.simples)
            for a in self.simples)
        if not linalg.is_positive_definite(gram_simples):
            raise ValueError("form is not positive definite on the root span")
        inv_gram = linalg.invert(gram_simples)
        gsimple = tuple(mat_vec(self.form, a) for a in self.simples)

        # Express every root over the base; integer, all-nonnegative or
        # all-nonpositive coefficients are part of the root-system contract.
        raw = {vector(v) for v in roots}
        decorated = []
        for beta in raw:
            pair = tuple(dot(beta, g) for g in gsimple)
            coeffs_q = mat_vec(inv_gram, pair)
            if any(c.denominator != 1 for c in coeffs_q):
                raise NonIntegralSolution(
                    f"{beta} is not an integer combination of the base")
            coeffs = tuple(int(c) for c in coeffs_q)
            recon = linalg.zero_vector(dim)
            for c, a in zip(coeffs, self.simples):
                recon = linalg.vadd(recon, vscale(c, a))
            if recon != beta:
                raise NonIntegralSolution(f"{beta} is outside the base span")
            if all(c == 0 for c in coeffs):
                raise ValueError("zero vector in root set")
            pos = all(c >= 0 for c in coeffs)
            neg = all(c <= 0 for c in coeffs)
            if not (pos or neg):
                raise ValueError(f"{beta} has mixed-sign base coefficients")
            decorated.append((sum(abs(c) for c in coeffs), beta, coeffs, pos))

        decorated.sort(key=lambda t: (t[0], t[1]))
        self.roots = tuple(t[1] for t in decorated)
        self._coeffs = tuple(t[2] for t in decorated)
        self._is_positive = tuple(t[3] for t in decorated)
        self._index = {beta: k for k, beta in enumerate(self.roots)}
        self.positives = tuple(b for b, p in zip(self.roots, self._is_positive) if p)

        self._neg = tuple(self._require_index(linalg.vneg(b)) for b in self.roots)
        self._sq = tuple(linalg.form_value(self.form, b, b) for b in self.roots)
        if any(q <= 0 for q in self._sq):
            raise ValueError("form not positive on a root")
        self.max_sq_length = max(self._sq)
        self.min_sq_length = min(self._sq)
        if len(set(self._sq)) > 2:
            raise ValueError("more than two root lengths")
        for k, beta in enumerate(self.roots):
            if vscale(2, beta) in self._index:
                raise ValueError(f"system is not reduced at {beta}")

        # Pairing functionals: <v, alpha_i^v> = dot(_pair_func[i], v).
        self._pair_func = tuple(
            vscale(Fraction(2, 1) / linalg.form_value(self.form, a, a), g)
            for a, g in zip(self.simples, gsimple))

        cartan = []
        for i, a in enumerate(self.simples):
            row = []
            for j in range(self.rank):
                c = dot(self._pair_func[j], a)
                if c.denominator != 1:
                    raise NonIntegralSolution("non-integer Cartan entry")
                row.append(int(c))
            cartan.append(tuple(row))
        self.cartan = tuple(cartan)

        # Dual coefficients: beta^v = sum c_i alpha_i^v with
        # c_i = m_i (alpha_i, alpha_i) / (beta, beta).
        dual = []
        for coeffs, q in zip(self._coeffs, self._sq):
            row = []
            for m, a in zip(coeffs, self.simples):
                c = m * linalg.form_value(self.form, a, a) / q
                if c.denominator != 1:
                    raise NonIntegralSolution("non-integer coroot coefficient")
                row.append(int(c))
            dual.append(tuple(row))
        self._dual_coeffs = tuple(dual)

        # Simple-reflection permutation tables double as the closure check.
        table = []
        for i in range(self.rank):
            perm = []
            for beta in self.roots:
                image = vsub(beta, vscale(dot(self._pair_func[i], beta),
                                          self.simples[i]))
                k = self._index.get(image)
                if k is None:
                    raise ValueError(
                        f"root set is not closed under reflection s_{i}")
                perm.append(k)
            table.append(tuple(perm))
        self._refl_table = tuple(table)

        self._heights = {b: sum(c) for b, c, p in
                         zip(self.roots, self._coeffs, self._is_positive) if p}
        self._dual: RootSystem | None = None
        self._fundamental_weights: tuple[Vector, ...] | None = None
        self._dominant_roots: tuple[Vector, Vector] | None = None

    def _require_index(self, v: Vector) -> int:
        k = self._index.get(v)
        if k is None:
            raise ValueError(f"root set is not symmetric: missing {v}")
        return k

    # -- lookups ---------------------------------------------------------

    def index(self, v) -> int:
        """Index of a root in ``roots``; raises NotARoot otherwise."""
        k = self._index.get(vector(v))
        if k is None:
            raise NotARoot(f"{tuple(v)} is not a root of {self.ctype}")
        return k

    def is_root(self, v) -> bool:
        return vector(v) in self._index

    def is_positive_root(self, v) -> bool:
        k = self._index.get(vector(v))
        return k is not None and self._is_positive[k]

    def negation(self, idx: int) -> int:
        """Index of -roots[idx]."""
        return self._neg[idx]

    def check_simple_index(self, i: int) -> int:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < self.rank:
            raise BadIndex(f"simple index {i!r} out of range 0..{self.rank - 1}")
        return i

    def base_coefficients(self, idx: int) -> tuple[int, ...]:
        return self._coeffs[idx]

    def dual_base_coefficients(self, idx: int) -> tuple[int, ...]:
        return self._dual_coeffs[idx]

    def height_of_index(self, idx: int) -> int:
        return sum(self._coeffs[idx])

    def sq_length(self, idx: int) -> Fraction:
        return self._sq[idx]

    @property
    def is_simply_laced(self) -> bool:
        return self.max_sq_length == self.min_sq_length

    def pair_simple(self, v: Vector, i: int) -> Fraction:
        """<v, alpha_i^v>, exact."""
        return dot(self._pair_func[i], v)

    def reflect_root_index(self, i: int, idx: int) -> int:
        """Image of root idx under the i-th simple reflection, as an index."""
        return self._refl_table[i][idx]

    @property
    def heights(self) -> dict[Vector, int]:
        """Height of every positive root."""
        return dict(self._heights)

    def __repr__(self) -> str:
        return f"RootSystem({self.ctype}, |roots|={len(self.roots)})"


# -- canonical constructions ----------------------------------------------


def _signed_pairs(n: int):
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * n
                    v[i], v[j] = si, sj
                    yield tuple(v)


def _classical_data(ctype: CartanType):
    fam, r = ctype.family, ctype.rank
    if fam == "A":
        n = r + 1
        roots = [tuple(int(k == i) - int(k == j) for k in range(n))
                 for i in range(n) for j in range(n) if i != j]
        simples = [tuple(int(k == i) - int(k == i + 1) for k in range(n))
                   for i in range(r)]
        return n, simples, roots
    if fam in "BCD":
        n = r
        roots = list(_signed_pairs(n))
        chain = [tuple(int(k == i) - int(k == i + 1) for k in range(n))
                 for i in range(n - 1)]
        if fam == "B":
            for i in range(n):
                for s in (1, -1):
                    roots.append(tuple(s * int(k == i) for k in range(n)))
            simples = chain + [tuple(int(k == n - 1) for k in range(n))]
        elif fam == "C":
            for i in range(n):
                for s in (2, -2):
                    roots.append(tuple(s * int(k == i) for k in range(n)))
            simples = chain + [tuple(2 * int(k == n - 1) for k in range(n))]
        else:
            simples = chain + [tuple(int(k >= n - 2) for k in range(n))]
        return n, simples, roots
    # G2 in the sum-zero hyperplane of Q^3.
    short = [tuple(int(k == i) - int(k == j) for k in range(3))
             for i in range(3) for j in range(3) if i != j]
    long_ = []
    for i in range(3):
        v = tuple(2 * int(k == i) - int(k != i) for k in range(3))
        long_.extend([v, tuple(-x for x in v)])
    simples = [(1, -1, 0), (-2, 1, 1)]
    return 3, simples, short + long_


def build_system(ctype: CartanType | str) -> RootSystem:
    """Canonical model of an irreducible root system.

    Classical families and G2 use their standard coordinates; E and F types
    are generated by reflection closure from the Cartan matrix.
    """
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    if ctype.family in _EXACT_RANKS and ctype.family != "G":
        return closure_system(ctype)
    dim, simples, roots = _classical_data(ctype)
    form = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    return RootSystem(ctype, dim, simples, roots, form)


def closure_system(ctype: CartanType | str) -> RootSystem:
    """Cartan-matrix model: coordinates are base coefficients.

    Roots are generated by breadth-first reflection closure of the base, all
    in integer arithmetic; the form is the symmetrized Cartan matrix. Used
    canonically for E/F types and as the cross-check model for the rest.
    """
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    a = cartan_matrix(ctype)
    n = ctype.rank
    d = symmetrizer(a)
    form = [[Fraction(a[i][j] * d[j]) for j in range(n)] for i in range(n)]

    simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simples)
    queue = list(simples)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for i in range(n):
            c = sum(v[j] * a[j][i] for j in range(n))
            if c == 0:
                continue
            w = list(v)
            w[i] -= c
            w = tuple(w)
            if w not in seen:
                seen.add(w)
                queue.append(w)
        if len(seen) > 4096:
            raise ValueError("reflection closure did not terminate")
    return RootSystem(ctype, n, simples, sorted(seen), form)


# -- operations ------------------------------------------------------------


def coroot(s: RootSystem, beta) -> Vector:
    """The coroot 2*beta/(beta, beta)."""
    idx = s.index(beta)
    return vscale(Fraction(2, 1) / s.sq_length(idx), s.roots[idx])


def pairing(s: RootSystem, chi, beta) -> Fraction:
    """<chi, beta^v> = 2(chi, beta)/(beta, beta); integer on the weight lattice."""
    idx = s.index(beta)
    chi = vector(chi)
    return 2 * linalg.form_value(s.form, chi, s.roots[idx]) / s.sq_length(idx)


_DUAL_FAMILY_SWAP = {"B": "C", "C": "B"}


def _dual_ctype(ctype: CartanType) -> CartanType:
    # B2 stays B2: its abstract dual C2 is outside the admissible ranks,
    # and B2 and C2 are isomorphic anyway.
    if ctype.family in _DUAL_FAMILY_SWAP and ctype.rank >= 3:
        return CartanType(_DUAL_FAMILY_SWAP[ctype.family], ctype.rank)
    return ctype


def dual_system(s: RootSystem) -> RootSystem:
    """The root system of coroots, with the same form.

    Simple roots are the coroots of the original base in matching index
    order (the numbering follows the primal system, not the dual's own
    Bourbaki convention). Applying dual_system twice returns the original
    root set.
    """
    if s._dual is None:
        duals = [coroot(s, b) for b in s.roots]
        simples = [coroot(s, a) for a in s.simples]
        s._dual = RootSystem(_dual_ctype(s.ctype), s.dim, simples, duals, s.form)
    return s._dual


def length_class(s: RootSystem, beta) -> LengthClass:
    """Long/short classification; simply-laced roots report Long.

    When ``s.is_simply_laced`` every root is conventionally both long and
    short; callers that care must consult the flag.
    """
    idx = s.index(beta)
    if s.sq_length(idx) == s.max_sq_length:
        return LengthClass.LONG
    return LengthClass.SHORT
