"""Projective covers, syzygies, projective dimension, omega-orbits.

pd returns an honest three-state result: Finite(n) when the syzygy class
multiset empties, InfiniteCertified with evidence (class-graph cycle,
selfinjective algebra or block, or a Cartan-lattice obstruction), and Unknown
at budget.  Covers use a fixed earliest-pivot section of the top so kernels
are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import decomp, exactfield as ef, repmod
from .budgets import DEFAULT, BudgetExceeded, Budgets
from .pathalgebra import BoundAlgebra, Relation, build_algebra
from .repmod import Rep, RepMap


# ---------------------------------------------------------------------------
# covers and syzygies


def projective_cover(m: Rep) -> tuple[Rep, RepMap]:
    """Minimal projective cover P(m) ->> m.

    The cover is assembled per vertex from the earliest-pivot complement of
    rad(m); minimality (kernel inside rad P) is asserted on every call.
    """
    alg = m.algebra
    p = alg.p
    if m.is_zero:
        z = repmod.zero_rep(alg)
        return z, RepMap(z, m, {})
    rad, _ = repmod.radical(m)
    rad_rows, rad_pivots = {}, {}
    copies: list[tuple[str, np.ndarray]] = []
    for v in alg.quiver.vertices:
        rows, pivots, _ = ef.rref(
            np.concatenate([m.mats[a.name] for a in alg.quiver.arrows_in(v)], axis=0)
            if alg.quiver.arrows_in(v) else ef.zeros(0, m.dims[v]), p)
        rad_rows[v], rad_pivots[v] = rows, pivots
        for c in range(m.dims[v]):
            if c not in pivots:
                gen = np.zeros(m.dims[v], dtype=np.int64)
                gen[c] = 1
                copies.append((v, gen))
    if not copies:
        raise ValueError("nonzero module equals its own radical")
    parts = [alg.projective(v) for v, _ in copies]
    cover = parts[0] if len(parts) == 1 else repmod.direct_sum(parts)[0]
    blocks: dict[str, list[np.ndarray]] = {w: [] for w in alg.quiver.vertices}
    for (v, gen), proj in zip(copies, parts):
        basis_paths = alg.cache["projective_basis"][v]
        per_vertex: dict[str, list[np.ndarray]] = {w: [] for w in alg.quiver.vertices}
        for key in basis_paths:
            w = alg.path_target(key)
            per_vertex[w].append(ef.matmul(gen.reshape(1, -1),
                                           repmod.path_action(m, key), p)[0])
        for w in alg.quiver.vertices:
            rows = (np.stack(per_vertex[w]) if per_vertex[w]
                    else ef.zeros(0, m.dims[w]))
            blocks[w].append(rows)
    epi_mats = {w: (np.concatenate(blocks[w], axis=0) if blocks[w]
                    else ef.zeros(0, m.dims[w])) for w in alg.quiver.vertices}
    epi = RepMap(cover, m, epi_mats)
    for w in alg.quiver.vertices:
        if ef.rank_fp(epi.mats[w], p) != m.dims[w]:
            raise AssertionError("projective cover is not surjective")
    return cover, epi


def _check_minimal(cover: Rep, epi: RepMap) -> None:
    p = cover.algebra.p
    ker_rows = {v: ef.kernel_basis(epi.mats[v].T, p) for v in epi.mats}
    radP, rad_inc = repmod.radical(cover)
    for v, rows in ker_rows.items():
        if rows.size and ef.solve_left(rad_inc.mats[v], rows, p) is None:
            raise AssertionError("cover kernel escapes the radical (not minimal)")


def syzygy(m: Rep, check_minimal: bool = False) -> Rep:
    """Kernel of the projective cover; blockwise on recorded direct sums."""
    if m.summands is not None:
        parts = [syzygy(x, check_minimal) for x in m.summands]
        return repmod.direct_sum(parts)[0] if parts else repmod.zero_rep(m.algebra)
    if m.is_zero:
        return repmod.zero_rep(m.algebra)
    cover, epi = projective_cover(m)
    if check_minimal:
        _check_minimal(cover, epi)
    ker, _ = repmod.kernel(epi)
    return ker


def omega_power(m: Rep, n: int) -> Rep:
    for _ in range(n):
        m = syzygy(m)
    return m


# ---------------------------------------------------------------------------
# structural certificates (selfinjectivity, blocks, Cartan lattice)


def selfinjectivity(alg: BoundAlgebra) -> bool:
    """Exact selfinjectivity test: indec projectives coincide with injectives."""
    if "selfinjective" in alg.cache:
        return alg.cache["selfinjective"]
    result = _selfinjectivity_compute(alg)
    alg.cache["selfinjective"] = result
    return result


def _selfinjectivity_compute(alg: BoundAlgebra) -> bool:
    socle_vertex = {}
    for v in alg.quiver.vertices:
        soc, _ = repmod.socle(alg.projective(v))
        if soc.total_dim != 1:
            return False
        socle_vertex[v] = next(w for w, d in soc.dims.items() if d)
    if len(set(socle_vertex.values())) != len(socle_vertex):
        return False
    op = alg.opposite()
    for v in alg.quiver.vertices:
        inj = repmod.dualize(op.projective(socle_vertex[v]))
        res = decomp.is_isomorphic(alg.projective(v), inj, seed=0)
        if res.verdict == "inconclusive":
            res = decomp.is_isomorphic(alg.projective(v), inj, seed=1, confidence=200)
        if res.verdict != "yes":
            return False
    return True


def restricted_algebra(alg: BoundAlgebra, vertices: frozenset[str]) -> BoundAlgebra:
    """Subalgebra on a successor-closed vertex set (paths cannot escape)."""
    key = ("restricted", tuple(sorted(vertices)))
    if key in alg.cache:
        return alg.cache[key]
    if alg.quiver.successor_closure(vertices) != frozenset(vertices):
        raise ValueError("vertex set is not successor-closed")
    verts = [v for v in alg.quiver.vertices if v in vertices]
    arrows = [(a.name, a.source, a.target) for a in alg.quiver.arrows
              if a.source in vertices]
    from .pathalgebra import Quiver, make_path

    q = Quiver(verts, arrows)
    rels = []
    for rel in alg.relations:
        if rel.source in vertices:
            rels.append(Relation(
                q, [(c, make_path(q, k[0], k[1])) for c, k in rel.terms], alg.p))
    sub = build_algebra(q, rels, alg.p, alg.m_max,
                        name=f"{alg.name}|{'+'.join(verts)}")
    alg.cache[key] = sub
    return sub


def selfinjective_block(alg: BoundAlgebra, vertices) -> bool:
    """Whether `vertices` is successor-closed with selfinjective restriction."""
    vs = frozenset(vertices)
    key = ("sj_block", tuple(sorted(vs)))
    if key in alg.cache:
        return alg.cache[key]
    ok = False
    if vs and alg.quiver.successor_closure(vs) == vs:
        if vs == frozenset(alg.quiver.vertices):
            ok = selfinjectivity(alg)
        else:
            ok = selfinjectivity(restricted_algebra(alg, vs))
    alg.cache[key] = ok
    return ok


def covering_selfinjective_block(alg: BoundAlgebra, support) -> frozenset[str] | None:
    """Successor closure of `support` when it is a selfinjective block."""
    if not support:
        return None
    closure = alg.quiver.successor_closure(support)
    return closure if selfinjective_block(alg, closure) else None


def cartan_rows(alg: BoundAlgebra) -> list[list[int]]:
    if "cartan" not in alg.cache:
        alg.cache["cartan"] = [list(alg.projective(v).dim_vector())
                               for v in alg.quiver.vertices]
    return alg.cache["cartan"]


def cartan_member(alg: BoundAlgebra, dim_vector) -> bool:
    """Whether a dim vector lies in the Z-span of the projective dim vectors.

    A module of finite projective dimension always does (alternating sums), so
    non-membership certifies pd = infinity.
    """
    return ef.in_lattice(cartan_rows(alg), list(dim_vector))


# ---------------------------------------------------------------------------
# registry-level syzygy classes


def syzygy_class(alg: BoundAlgebra, eid: int, budgets: Budgets = DEFAULT) -> tuple:
    """decompose(syzygy(representative)) as ((class id, mult), ...), cached.

    Projective summands are retained (K0 consumers drop them; orbit analysis
    keeps them as markers).
    """
    registry = alg.registry()
    entry = registry.entries[eid]
    if entry.syzygy is None:
        om = syzygy(entry.rep)
        if om.total_dim > budgets.max_dim:
            raise BudgetExceeded(
                f"syzygy of class {eid} has dimension {om.total_dim} > cap")
        if not om.is_zero and not entry.projective and selfinjectivity(alg):
            # stable equivalence: the minimal syzygy of an indecomposable
            # nonprojective is again indecomposable nonprojective
            entry.syzygy = ((registry.register(om), 1),)
            entry.cache["syzygy_certified"] = True
        else:
            res = decomp.decompose(om, seed=budgets.seed,
                                   confidence=budgets.confidence,
                                   budgets=budgets, registry=registry)
            entry.syzygy = res.items
            entry.cache["syzygy_certified"] = res.certified
    return entry.syzygy


# ---------------------------------------------------------------------------
# projective dimension


@dataclass
class PdResult:
    status: str  # "finite" | "infinite" | "unknown"
    value: int | None = None
    evidence: dict | None = None
    depth_reached: int = 0

    @property
    def certified_infinite(self) -> bool:
        return self.status == "infinite"

    def describe(self) -> str:
        if self.status == "finite":
            return f"pd = {self.value}"
        if self.status == "infinite":
            return f"pd = infinity ({self.evidence.get('kind')})"
        return f"pd unknown at depth {self.depth_reached}"


def _find_cycle(edges: dict[int, set[int]]) -> list[int] | None:
    color: dict[int, int] = {}
    stack_path: list[int] = []

    def dfs(u: int):
        color[u] = 1
        stack_path.append(u)
        for w in sorted(edges.get(u, ())):
            if color.get(w, 0) == 1:
                return stack_path[stack_path.index(w):] + [w]
            if color.get(w, 0) == 0 and w in edges:
                got = dfs(w)
                if got:
                    return got
        color[u] = 2
        stack_path.pop()
        return None

    for node in sorted(edges):
        if color.get(node, 0) == 0:
            got = dfs(node)
            if got:
                return got
    return None


def _class_infinite_shortcut(alg: BoundAlgebra, eid: int) -> dict | None:
    registry = alg.registry()
    entry = registry.entries[eid]
    if entry.projective:
        return None
    if selfinjectivity(alg):
        return {"kind": "selfinjective"}
    rep = entry.rep
    if not cartan_member(alg, rep.dim_vector()):
        return {"kind": "cartan", "dims": list(rep.dim_vector())}
    blk = covering_selfinjective_block(alg, rep.support())
    if blk is not None:
        return {"kind": "selfinjective_block", "vertices": sorted(blk)}
    return None


def pd_class(alg: BoundAlgebra, eid: int, budgets: Budgets = DEFAULT) -> PdResult:
    """Projective dimension of a registered class, with certificates."""
    registry = alg.registry()
    entry = registry.entries[eid]
    if entry.pd is not None:
        if entry.pd.status != "unknown" or entry.pd.depth_reached >= budgets.depth:
            return entry.pd
    if entry.projective:
        entry.pd = PdResult("finite", 0)
        return entry.pd
    shortcut = _class_infinite_shortcut(alg, eid)
    if shortcut is not None:
        entry.pd = PdResult("infinite", None, dict(shortcut, **{"class": eid}))
        return entry.pd
    edges: dict[int, set[int]] = {}
    frontier = {eid}
    depth = 0
    result = None
    while depth < budgets.depth:
        depth += 1
        nxt: set[int] = set()
        for i in sorted(frontier):
            if i not in edges:
                try:
                    items = syzygy_class(alg, i, budgets)
                except BudgetExceeded:
                    result = PdResult("unknown", None, {"kind": "budget"}, depth)
                    break
                succ = {j for j, _ in items if not registry.is_projective(j)}
                edges[i] = succ
                for j in succ:
                    sc = _class_infinite_shortcut(alg, j)
                    if sc is not None:
                        result = PdResult("infinite", None, dict(sc, **{"class": j}))
                        break
                if result:
                    break
            nxt |= edges[i]
        if result:
            break
        cyc = _find_cycle(edges)
        if cyc:
            result = PdResult("infinite", None,
                              {"kind": "cycle", "classes": cyc, "depth": depth})
            break
        if not nxt:
            result = PdResult("finite", depth, None, depth)
            break
        frontier = nxt
    if result is None:
        result = PdResult("unknown", None, {"kind": "depth"}, budgets.depth)
    entry.pd = result
    return result


def pd(m: Rep, budgets: Budgets = DEFAULT) -> PdResult:
    """Projective dimension of a module via its class decomposition."""
    res = decomp.decompose(m, seed=budgets.seed, confidence=budgets.confidence,
                           budgets=budgets)
    registry = m.algebra.registry()
    nonproj = res.nonprojective(registry)
    if not nonproj:
        return PdResult("finite", 0)
    best = 0
    worst_unknown = None
    for eid, _ in nonproj:
        r = pd_class(m.algebra, eid, budgets)
        if r.status == "infinite":
            return r
        if r.status == "unknown":
            worst_unknown = r
        else:
            best = max(best, r.value)
    if worst_unknown is not None:
        return worst_unknown
    return PdResult("finite", best)


# ---------------------------------------------------------------------------
# orbits


@dataclass
class OrbitResult:
    reached: tuple  # class ids, projectives included as markers
    frontier: tuple
    closed: bool
    note: str = ""

    def nonprojective(self, registry) -> tuple:
        return tuple(i for i in self.reached if not registry.is_projective(i))


def omega_orbit(alg: BoundAlgebra, seeds, budgets: Budgets = DEFAULT) -> OrbitResult:
    """BFS closure of syzygy classes from the given registered seed ids."""
    registry = alg.registry()
    seen = set(seeds)
    frontier = [i for i in sorted(seen) if not registry.is_projective(i)]
    while frontier:
        if len(seen) > budgets.classes:
            return OrbitResult(tuple(sorted(seen)), tuple(frontier), False,
                               "class budget exceeded")
        nxt = []
        for eid in frontier:
            try:
                items = syzygy_class(alg, eid, budgets)
            except BudgetExceeded as exc:
                return OrbitResult(tuple(sorted(seen)), tuple(frontier), False,
                                   str(exc))
            for j, _ in items:
                if j not in seen:
                    seen.add(j)
                    if not registry.is_projective(j):
                        nxt.append(j)
        frontier = sorted(nxt)
    return OrbitResult(tuple(sorted(seen)), (), True)


def syzygy_finite_probe(alg: BoundAlgebra, n_shift: int = 1,
                        budgets: Budgets = DEFAULT):
    """Closed(generating class set for K_{n_shift}) or Open.

    Runs omega_orbit on the classes of Omega^{n_shift} of the sum of simples.
    """
    simples = [repmod.simple(alg, v) for v in alg.quiver.vertices]
    m0 = repmod.direct_sum(simples)[0] if len(simples) > 1 else simples[0]
    shifted = omega_power(m0, n_shift)
    if shifted.is_zero:
        return OrbitResult((), (), True, "semisimple shift")
    registry = alg.registry()
    try:
        res = decomp.decompose(shifted, seed=budgets.seed,
                               confidence=budgets.confidence,
                               budgets=budgets, registry=registry)
    except BudgetExceeded as exc:
        return OrbitResult((), (), False, str(exc))
    seeds = [i for i, _ in res.items]
    return omega_orbit(alg, seeds, budgets)
