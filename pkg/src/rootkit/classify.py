"""Multiplicities, highest roots, special/co-special detection, the
quasi-constant predicate, and the per-simple-root equivalence report.

The report checks, for each simple root alpha, that three facts agree:

  P1  the fundamental weight of alpha is quasi-constant;
  P2  alpha is special (multiplicity 1 in the highest root) or co-special
      (dual multiplicity 1 in the highest coroot);
  P3  the dominant and Levi-dominant conjugates of alpha coincide,
      i.e. some element avoiding alpha's own reflection already takes
      alpha to its dominant representative.

When P3 holds the row carries an explicit witness word avoiding alpha's
index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import CartanType, RootSystem
from .errors import NotPositiveRoot
from .linalg import Vector, vector, vscale
from .weyl import WeylWord, dominant_rep, full_base, levi_subset


@dataclass(frozen=True)
class MultiplicityProfile:
    """Integer coefficients of a root over the base, and of its coroot
    over the dual base. The two differ in multi-laced systems."""

    coeffs: tuple[int, ...]
    dual_coeffs: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationRow:
    simple_index: int
    m: int
    m_dual: int
    special: bool
    cospecial: bool
    quasi_constant: bool
    dom_eq_levi_dom: bool
    witness: WeylWord | None


@dataclass(frozen=True)
class TheoremReport:
    ctype: CartanType
    rows: tuple[ClassificationRow, ...]
    all_equivalent: bool
    highest_root: Vector
    highest_short: Vector
    heights: dict[Vector, int]


def multiplicities(s: RootSystem, beta) -> MultiplicityProfile:
    """Exact expression of beta over the base and beta^v over the dual base."""
    idx = s.index(beta)
    return MultiplicityProfile(s.base_coefficients(idx),
                               s.dual_base_coefficients(idx))


def _dominant_roots(s: RootSystem) -> tuple[Vector, Vector]:
    if s._dominant_roots is None:
        dom = [b for b in s.positives
               if all(s.pair_simple(b, i) >= 0 for i in range(s.rank))]
        if s.is_simply_laced:
            assert len(dom) == 1, "simply-laced systems have one dominant root"
            s._dominant_roots = (dom[0], dom[0])
        else:
            assert len(dom) == 2, "multi-laced systems have two dominant roots"
            longs = [b for b in dom if s.sq_length(s.index(b)) == s.max_sq_length]
            shorts = [b for b in dom if s.sq_length(s.index(b)) == s.min_sq_length]
            assert len(longs) == 1 and len(shorts) == 1
            s._dominant_roots = (longs[0], shorts[0])
    return s._dominant_roots


def highest_roots(s: RootSystem) -> tuple[Vector, Vector]:
    """(highest root, dual of the highest coroot).

    The first is the dominant long root; the second is the highest short
    root in multi-laced systems and equals the first otherwise.
    """
    return _dominant_roots(s)


def height(s: RootSystem, beta) -> int:
    """Sum of the base coefficients of a positive root."""
    beta = vector(beta)
    if not s.is_positive_root(beta):
        raise NotPositiveRoot(f"{beta} is not a positive root of {s.ctype}")
    return s.height_of_index(s.index(beta))


def is_special(s: RootSystem, i: int) -> bool:
    """Multiplicity of alpha_i in the highest root equals 1."""
    s.check_simple_index(i)
    top, _ = highest_roots(s)
    return s.base_coefficients(s.index(top))[i] == 1


def is_cospecial(s: RootSystem, i: int) -> bool:
    """Multiplicity of alpha_i^v in the highest coroot equals 1."""
    s.check_simple_index(i)
    _, top_short = highest_roots(s)
    return s.dual_base_coefficients(s.index(top_short))[i] == 1


def fundamental_weight(s: RootSystem, i: int) -> Vector:
    """The i-th fundamental weight: dual basis to the simple coroots.

    Solved exactly inside the span of the roots, so any ambient component
    orthogonal to all roots is zero. May be non-integral (A1 gives alpha/2).
    """
    s.check_simple_index(i)
    if s._fundamental_weights is None:
        inv = linalg.invert(linalg.matrix(s.cartan))
        weights = []
        for row in inv:
            eta = linalg.zero_vector(s.dim)
            for c, a in zip(row, s.simples):
                eta = linalg.vadd(eta, vscale(c, a))
            weights.append(eta)
        s._fundamental_weights = tuple(weights)
    return s._fundamental_weights[i]


def is_quasi_constant(s: RootSystem, chi) -> bool:
    """Whether all Weyl translates of each coroot pair against chi with
    ratio in {-1, 0, 1}.

    The Weyl orbits of coroots are exactly the coroot length classes, so the
    condition reduces to: within each length class of roots, all nonzero
    |<chi, beta^v>| coincide. Scale-invariant in chi; vacuously true when
    chi kills every coroot.
    """
    chi = vector(chi)
    classes: dict[Fraction, set[Fraction]] = {}
    for idx, beta in enumerate(s.roots):
        value = 2 * linalg.form_value(s.form, chi, beta) / s.sq_length(idx)
        if value != 0:
            classes.setdefault(s.sq_length(idx), set()).add(abs(value))
    return all(len(vals) == 1 for vals in classes.values())


def theorem_row(s: RootSystem, i: int) -> ClassificationRow:
    """All per-simple-root facts plus the witness word when P3 holds."""
    s.check_simple_index(i)
    alpha = s.simples[i]
    top, top_short = highest_roots(s)
    m = s.base_coefficients(s.index(top))[i]
    m_dual = s.dual_base_coefficients(s.index(top_short))[i]
    quasi = is_quasi_constant(s, fundamental_weight(s, i))
    dom_full, _ = dominant_rep(s, alpha, full_base(s))
    dom_levi, levi_word = dominant_rep(s, alpha, levi_subset(s, i))
    p3 = dom_full == dom_levi
    return ClassificationRow(
        simple_index=i,
        m=m,
        m_dual=m_dual,
        special=(m == 1),
        cospecial=(m_dual == 1),
        quasi_constant=quasi,
        dom_eq_levi_dom=p3,
        witness=levi_word if p3 else None,
    )


def verify_theorem(s: RootSystem) -> TheoremReport:
    """Rows for every simple index; all_equivalent iff P1 = P2 = P3 on each."""
    rows = tuple(theorem_row(s, i) for i in range(s.rank))
    ok = all(r.quasi_constant == (r.special or r.cospecial) == r.dom_eq_levi_dom
             for r in rows)
    top, top_short = highest_roots(s)
    return TheoremReport(
        ctype=s.ctype,
        rows=rows,
        all_equivalent=ok,
        highest_root=top,
        highest_short=top_short,
        heights=s.heights,
    )


# -- enumerative property checks -------------------------------------------


def descent_blockers(s: RootSystem, i: int) -> list[Vector]:
    """Long positive roots other than alpha_i that would stall the witness
    descent: they contain alpha_i at most once yet pair nonpositively with
    every other simple root. The classification argument requires that none
    exist; any returned vector is a counterexample.
    """
    s.check_simple_index(i)
    alpha = s.simples[i]
    out = []
    for beta in s.positives:
        idx = s.index(beta)
        if beta == alpha or s.sq_length(idx) != s.max_sq_length:
            continue
        if s.base_coefficients(idx)[i] > 1:
            continue
        if all(linalg.form_value(s.form, beta, s.simples[j]) <= 0
               for j in range(s.rank) if j != i):
            out.append(beta)
    return out


def levi_orbit_multiplicity_violations(s: RootSystem) -> list[tuple[int, Vector, Vector]]:
    """Pairs of roots in one maximal-Levi orbit whose coefficients at the
    deleted simple root differ. Reflections avoiding alpha_i cannot change
    the alpha_i coefficient, so this list must be empty.
    """
    out = []
    nroots = len(s.roots)
    for i in range(s.rank):
        gens = [j for j in range(s.rank) if j != i]
        seen = [False] * nroots
        for start in range(nroots):
            if seen[start]:
                continue
            queue = [start]
            seen[start] = True
            want = s.base_coefficients(start)[i]
            while queue:
                cur = queue.pop()
                for j in gens:
                    nxt = s.reflect_root_index(j, cur)
                    if not seen[nxt]:
                        seen[nxt] = True
                        if s.base_coefficients(nxt)[i] != want:
                            out.append((i, s.roots[start], s.roots[nxt]))
                        queue.append(nxt)
    return out
