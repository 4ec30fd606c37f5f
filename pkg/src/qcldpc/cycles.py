"""Cycle structure of QC codes: Tanner graphs and algebraic cycle tests.

Graph-side routines work on the expanded Tanner graph.  The algebraic
routines read cycles straight off H(x): a closed walk through entries
h_{j0,i0}, h_{j1,i0}, h_{j1,i1}, ... lifts to a cycle exactly when the
alternating sum of the chosen exponents vanishes mod r.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .matrix import PolyMatrix, ScalarMatrix, WeightMatrix, expand_scalar
from .permanent import perm_int, perm_poly
from .ring import RingPoly

INF = math.inf
MAX_PRODUCT_ORDER = 5


class MatrixTypeError(ValueError):
    """Input matrix has entries heavier than the routine supports."""


def require_type1(H: PolyMatrix) -> None:
    _require_type(H, 1)


def _require_type(H: PolyMatrix, limit: int) -> None:
    for j, row in enumerate(H.entries):
        for i, p in enumerate(row):
            if p.weight > limit:
                raise MatrixTypeError(
                    f"entry ({j},{i}) = {p} has weight {p.weight}; type <= {limit} required"
                )


# ---------------------------------------------------------------------------
# Tanner graph


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph; variables are vertices 0..n_var-1, checks follow."""

    n_var: int
    n_chk: int
    chk_adj: tuple[tuple[int, ...], ...]
    var_adj: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return self.n_var + self.n_chk

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.chk_adj)

    def joint_adjacency(self) -> list[tuple[int, ...]]:
        off = self.n_var
        var_part = [tuple(off + c for c in a) for a in self.var_adj]
        return var_part + list(self.chk_adj)


def build_tanner(Hs: ScalarMatrix) -> TannerGraph:
    chk_adj = []
    var_adj: list[list[int]] = [[] for _ in range(Hs.n_cols)]
    for u, row in enumerate(Hs.rows):
        cols = []
        bits = row
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            cols.append(v)
            var_adj[v].append(u)
            bits ^= low
        chk_adj.append(tuple(cols))
    return TannerGraph(Hs.n_cols, Hs.n_rows, tuple(chk_adj), tuple(tuple(a) for a in var_adj))


def qc_orbit_roots(H: PolyMatrix) -> tuple[list[int], list[int]]:
    """One representative vertex per circulant orbit: (variable roots, check roots).

    Shifting every variable and check index inside its block by one is a graph
    automorphism, so BFS from these representatives sees every orbit.
    """
    var_roots = [i * H.r for i in range(H.L)]
    chk_roots = [H.L * H.r + j * H.r for j in range(H.J)]
    return var_roots, chk_roots


def girth(G: TannerGraph, roots: Iterable[int] | None = None) -> int | float:
    """Length of the shortest cycle, or inf for a forest.

    ``roots`` may restrict the BFS sources to a set that meets every cycle
    orbit (e.g. from :func:`qc_orbit_roots`).
    """
    adj = G.joint_adjacency()
    N = len(adj)
    sources = range(N) if roots is None else roots
    best: int | float = INF
    dist = [-1] * N
    parent = [-1] * N
    for root in sources:
        touched = [root]
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    touched.append(w)
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if length < best:
                        best = length
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    return best


def eccentricities(G: TannerGraph, roots: Iterable[int] | None = None) -> dict[int, int | float]:
    adj = G.joint_adjacency()
    N = len(adj)
    out: dict[int, int | float] = {}
    for root in range(N) if roots is None else roots:
        dist = [-1] * N
        dist[root] = 0
        queue = deque([root])
        seen = 1
        far = 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    far = dist[w]
                    seen += 1
                    queue.append(w)
        out[root] = far if seen == N else INF
    return out


def diameter(G: TannerGraph, roots: Iterable[int] | None = None) -> int | float:
    """Largest distance between two vertices (variables and checks alike); inf if disconnected."""
    if G.n_vertices == 0:
        return 0
    return max(eccentricities(G, roots).values())


def qc_girth(H: PolyMatrix) -> int | float:
    var_roots, _ = qc_orbit_roots(H)
    return girth(build_tanner(expand_scalar(H)), var_roots)


def qc_diameter(H: PolyMatrix) -> int | float:
    var_roots, chk_roots = qc_orbit_roots(H)
    return diameter(build_tanner(expand_scalar(H)), var_roots + chk_roots)


# ---------------------------------------------------------------------------
# algebraic cycle witnesses


@dataclass(frozen=True)
class CycleWitness:
    """Two bijections sigma, tau : rows -> cols with equal nonzero products.

    ``sigma`` and ``tau`` list the image column of each row in ``rows`` (same
    order).  They differ on every row.
    """

    R: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    sigma_exponents: tuple[int, ...]
    tau_exponents: tuple[int, ...]
    r: int

    @property
    def permutation_cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition of pi = sigma^-1 o tau on the row set."""
        back = {c: j for j, c in zip(self.rows, self.sigma)}
        pi = {j: back[c] for j, c in zip(self.rows, self.tau)}
        cycles, seen = [], set()
        for start in self.rows:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = pi[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = pi[nxt]
            cycles.append(tuple(cyc))
        return cycles

    @property
    def single_cycle(self) -> bool:
        return len(self.permutation_cycles) == 1

    @property
    def cycle_length(self) -> int | None:
        """Tanner-graph cycle length certified by the witness (2R), if pi is one R-cycle."""
        return 2 * self.R if self.single_cycle else None

    def equation(self) -> str:
        lhs = " + ".join(str(e) for e in self.sigma_exponents)
        rhs = " + ".join(str(e) for e in self.tau_exponents)
        return f"{lhs} = {rhs} (mod {self.r})"


def _monomial_exp(p: RingPoly) -> int | None:
    return p.support[0] if p.weight == 1 else None


def _witness(H: PolyMatrix, rows, cols, sigma, tau) -> CycleWitness:
    se = tuple(H[j, c].support[0] for j, c in zip(rows, sigma))
    te = tuple(H[j, c].support[0] for j, c in zip(rows, tau))
    return CycleWitness(len(rows), tuple(rows), tuple(cols), tuple(sigma), tuple(tau), se, te, H.r)


def detect_4cycle_type1(H: PolyMatrix) -> CycleWitness | None:
    """First 2x2 monomial submatrix with a + d = b + c (mod r), i.e. zero permanent."""
    require_type1(H)
    r = H.r
    for j1, j2 in itertools.combinations(range(H.J), 2):
        for i1, i2 in itertools.combinations(range(H.L), 2):
            a, b = _monomial_exp(H[j1, i1]), _monomial_exp(H[j1, i2])
            c, d = _monomial_exp(H[j2, i1]), _monomial_exp(H[j2, i2])
            if None in (a, b, c, d):
                continue
            if (a + d - b - c) % r == 0:
                return _witness(H, (j1, j2), (i1, i2), (i1, i2), (i2, i1))
    return None


def detect_6cycle_type1(H: PolyMatrix) -> CycleWitness | None:
    """First 3x3 submatrix whose permanent loses weight through cancellation.

    Two coinciding permanent terms differ either by a 3-cycle (returned as an
    R = 3 witness, a 6-cycle) or by a transposition (returned as the R = 2
    witness on the two rows where they differ, a 4-cycle).
    """
    require_type1(H)
    for rows in itertools.combinations(range(H.J), 3):
        for cols in itertools.combinations(range(H.L), 3):
            B = H.submatrix(rows, cols)
            if perm_poly(B).weight >= perm_int(B.weight_matrix()):
                continue
            found = _coinciding_terms(H, rows, cols)
            if found is not None:
                return found
    return None


def _coinciding_terms(H: PolyMatrix, rows, cols) -> CycleWitness | None:
    terms: dict[int, list[tuple[int, ...]]] = {}
    fallback = None
    for perm in itertools.permutations(cols):
        exps = [_monomial_exp(H[j, c]) for j, c in zip(rows, perm)]
        if None in exps:
            continue
        key = sum(exps) % H.r
        for other in terms.get(key, []):
            differ = [k for k in range(len(rows)) if perm[k] != other[k]]
            w = _witness(
                H,
                [rows[k] for k in differ],
                sorted(perm[k] for k in differ),
                [other[k] for k in differ],
                [perm[k] for k in differ],
            )
            if len(differ) == len(rows):
                return w
            fallback = fallback or w
        terms.setdefault(key, []).append(perm)
    return fallback


def equal_products(H: PolyMatrix, R: int) -> CycleWitness | None:
    """Search rows/cols of size R for bijections sigma, tau with sigma(j) != tau(j)
    for every row and equal nonzero products of the selected entries."""
    require_type1(H)
    if not 2 <= R <= min(H.J, H.L):
        raise ValueError(f"R must lie in [2, {min(H.J, H.L)}], got {R}")
    if R > MAX_PRODUCT_ORDER:
        raise ValueError(f"R={R} exceeds the search guard {MAX_PRODUCT_ORDER}")
    r = H.r
    for rows in itertools.combinations(range(H.J), R):
        for cols in itertools.combinations(range(H.L), R):
            by_sum: dict[int, list[tuple[int, ...]]] = {}
            for perm in itertools.permutations(cols):
                exps = [_monomial_exp(H[j, c]) for j, c in zip(rows, perm)]
                if None in exps:
                    continue
                key = sum(exps) % r
                for other in by_sum.get(key, []):
                    if all(a != b for a, b in zip(perm, other)):
                        return _witness(H, rows, cols, other, perm)
                by_sum.setdefault(key, []).append(perm)
    return None


# ---------------------------------------------------------------------------
# weight-matrix girth caps


def _dominates(block: Sequence[Sequence[int]], pattern: Sequence[Sequence[int]]) -> bool:
    """Some row/column permutation of ``block`` is entrywise >= ``pattern``."""
    n_rows, n_cols = len(pattern), len(pattern[0])
    for rp in itertools.permutations(range(n_rows)):
        for cp in itertools.permutations(range(n_cols)):
            if all(block[rp[a]][cp[b]] >= pattern[a][b] for a in range(n_rows) for b in range(n_cols)):
                return True
    return False


GIRTH_PATTERNS: tuple[tuple[int, tuple[tuple[int, ...], ...]], ...] = (
    (6, ((3,),)),
    (8, ((2, 2),)),
    (10, ((1, 1), (1, 2))),
    (12, ((1, 1, 1), (1, 1, 1))),
)


def contains_pattern(A: WeightMatrix, pattern: Sequence[Sequence[int]]) -> bool:
    """A has a submatrix covering ``pattern`` up to row/column permutation and transposition.

    Entries heavier than the pattern still count: dropping terms from a
    polynomial only deletes Tanner-graph edges, so any cycle of the lighter
    configuration survives.
    """
    for M in (A, A.transpose()):
        p, q = len(pattern), len(pattern[0])
        if M.J < p or M.L < q:
            continue
        for rows in itertools.combinations(range(M.J), p):
            for cols in itertools.combinations(range(M.L), q):
                block = [[M.entries[j][i] for i in cols] for j in rows]
                if _dominates(block, pattern):
                    return True
    return False


def wm_girth_caps(A: WeightMatrix | PolyMatrix) -> int | float:
    """Tightest girth upper bound implied by weight-matrix patterns; inf if none applies."""
    if isinstance(A, PolyMatrix):
        A = A.weight_matrix()
    for cap, pattern in GIRTH_PATTERNS:
        if contains_pattern(A, pattern):
            return cap
    return INF


# ---------------------------------------------------------------------------
# type-II four-cycle freeness


@dataclass(frozen=True)
class Violation:
    condition: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    detail: str


def _binomial_product_weight(p: RingPoly, q: RingPoly) -> int:
    return (p * q).weight


def _split(p: RingPoly) -> list[RingPoly]:
    return [RingPoly(p.r, (e,)) for e in p.support]


def _check_2x2(H: PolyMatrix, j1: int, j2: int, i1: int, i2: int) -> Violation | None:
    a, b = H[j1, i1], H[j1, i2]
    c, d = H[j2, i1], H[j2, i2]
    if not (a and b and c and d):
        return None
    wts = (a.weight, b.weight, c.weight, d.weight)
    # split one binomial on any diagonal that carries two, so no diagonal
    # product can cancel internally; then full permanent weight <=> no 4-cycle
    choices_a, choices_b = [a], [b]
    if a.weight == 2 and d.weight == 2:
        choices_a = _split(a)
    if b.weight == 2 and c.weight == 2:
        choices_b = _split(b)
    main_two = a.weight == 2 and d.weight == 2
    anti_two = b.weight == 2 and c.weight == 2
    condition = 4 if (main_two != anti_two) and wts.count(2) == 2 else 5
    for pa in choices_a:
        for pb in choices_b:
            full = pa.weight * d.weight + pb.weight * c.weight
            got = (pa * d + pb * c).weight
            if got < full:
                return Violation(
                    condition,
                    (j1, j2),
                    (i1, i2),
                    f"permanent of [[{pa}, {pb}], [{c}, {d}]] has weight {got} < {full}",
                )
    return None


def type2_4cycle_free(H: PolyMatrix) -> tuple[bool, list[Violation]]:
    """Check the five 4-cycle conditions for a type <= 2 matrix.

    Returns ``(free, violations)``; every offending submatrix is listed.
    """
    _require_type(H, 2)
    r = H.r
    out: list[Violation] = []
    if r % 2 == 0:
        for j in range(H.J):
            for i in range(H.L):
                p = H[j, i]
                if p.weight == 2:
                    delta = p.support[1] - p.support[0]
                    # gcd(x^a + x^b, x^r + 1) = x^a (1 + x^gcd(b - a, r)) up to units
                    if math.gcd(delta, r) == r // 2:
                        out.append(
                            Violation(1, (j,), (i,), f"gcd({delta}, {r}) = {r // 2} for {p}")
                        )
    for j in range(H.J):
        for i1, i2 in itertools.combinations(range(H.L), 2):
            p, q = H[j, i1], H[j, i2]
            if p.weight == 2 and q.weight == 2 and _binomial_product_weight(p, q) < 4:
                out.append(Violation(2, (j,), (i1, i2), f"({p})({q}) has weight {(p * q).weight}"))
    for i in range(H.L):
        for j1, j2 in itertools.combinations(range(H.J), 2):
            p, q = H[j1, i], H[j2, i]
            if p.weight == 2 and q.weight == 2 and _binomial_product_weight(p, q) < 4:
                out.append(Violation(3, (j1, j2), (i,), f"({p})({q}) has weight {(p * q).weight}"))
    for j1, j2 in itertools.combinations(range(H.J), 2):
        for i1, i2 in itertools.combinations(range(H.L), 2):
            v = _check_2x2(H, j1, j2, i1, i2)
            if v is not None:
                out.append(v)
    return not out, out


__all__ = [
    "CycleWitness",
    "GIRTH_PATTERNS",
    "MatrixTypeError",
    "TannerGraph",
    "Violation",
    "build_tanner",
    "contains_pattern",
    "detect_4cycle_type1",
    "detect_6cycle_type1",
    "diameter",
    "eccentricities",
    "equal_products",
    "girth",
    "qc_diameter",
    "qc_girth",
    "qc_orbit_roots",
    "require_type1",
    "type2_4cycle_free",
    "wm_girth_caps",
]
