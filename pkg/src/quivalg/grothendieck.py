"""The group K0 modulo projectives, the induced syzygy endomorphism, and phi.

phi(M) is the Fitting stabilization index of the induced endomorphism on
<add M>.  The value reported is always a certified lower bound (observed rank
drops are real); the `certified` flag marks when one of the certificates
establishes injectivity for every later depth, pinning the exact value:

  - rank_zero / finite_pd: the trace reaches rank 0 and stays there;
  - orbit_cycle: the class set closes, so the trace is provably constant
    beyond its size (eventual-image argument), and the plateau is inspected;
  - theorem_selfinjective: all classes live on a successor-closed vertex set
    whose restricted algebra is selfinjective, where the syzygy operator is
    injective on classes;
  - indec_infinite_pd: a single class of certified infinite projective
    dimension has phi = 0;
  - rank_one_persistent: generator coefficients stay nonnegative under the
    class-level syzygy map, so once the trace sits at rank 1 with a
    certified-infinite-pd class in its support, it can never reach 0 and no
    further drop is possible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import decomp, exactfield as ef, homology, repmod
from .budgets import DEFAULT, BudgetExceeded, Budgets
from .pathalgebra import BoundAlgebra
from .repmod import Rep

K0Vector = dict  # class id -> integer coefficient; projective ids never appear


def class_vector(m: Rep, budgets: Budgets = DEFAULT) -> K0Vector:
    """[m] in K0: nonprojective indecomposable summand classes with multiplicity."""
    res = decomp.decompose(m, seed=budgets.seed, confidence=budgets.confidence,
                           budgets=budgets)
    reg = m.algebra.registry()
    return {i: k for i, k in res.items if not reg.is_projective(i)}


def omega_bar(alg: BoundAlgebra, vec: K0Vector, budgets: Budgets = DEFAULT) -> K0Vector:
    """Linear extension of the class-level syzygy map, projectives dropped."""
    reg = alg.registry()
    out: dict[int, int] = {}
    for i, c in vec.items():
        for j, mult in homology.syzygy_class(alg, i, budgets):
            if not reg.is_projective(j):
                out[j] = out.get(j, 0) + c * mult
    return {k: v for k, v in out.items() if v}


def subgroup_add(m: Rep, budgets: Budgets = DEFAULT) -> list[K0Vector]:
    """Generators of <add m>: one unit vector per distinct nonprojective class."""
    return [{i: 1} for i in sorted(class_vector(m, budgets))]


def lattice_rank_of(vecs) -> int:
    support = sorted({i for v in vecs for i in v})
    if not support:
        return 0
    rows = [[v.get(i, 0) for i in support] for v in vecs]
    return ef.lattice_rank(rows)


def lattice_member(vecs, target: K0Vector) -> bool:
    support = sorted({i for v in list(vecs) + [target] for i in v})
    if not support:
        return True
    rows = [[v.get(i, 0) for i in support] for v in vecs]
    return ef.in_lattice(rows, [target.get(i, 0) for i in support])


def rank_trace(m: Rep, budgets: Budgets = DEFAULT) -> list[int]:
    """Ranks of Omega-bar^i <add m> for i = 0..depth (truncated on budget)."""
    return phi(m, budgets).trace


@dataclass
class PhiResult:
    value: int
    certified: bool
    certificate: str
    trace: list
    note: str = ""

    @property
    def status(self) -> str:
        return "certified" if self.certified else "lower_bound"

    def describe(self) -> str:
        tr = ",".join(str(r) for r in self.trace[:8])
        more = ",..." if len(self.trace) > 8 else ""
        return (f"phi = {self.value} ({self.status}: {self.certificate}); "
                f"rank trace [{tr}{more}]")


def _support_vertices(alg: BoundAlgebra, ids) -> set[str]:
    reg = alg.registry()
    verts: set[str] = set()
    for i in ids:
        verts |= reg.rep(i).support()
    return verts


def phi(m: Rep, budgets: Budgets = DEFAULT) -> PhiResult:
    """The (right) Igusa-Todorov function with certification."""
    alg = m.algebra
    gens = subgroup_add(m, budgets)
    trace = [len(gens)]
    if not gens:
        return PhiResult(0, True, "rank_zero", trace)
    if homology.selfinjectivity(alg):
        return PhiResult(0, True, "theorem_selfinjective", trace, "whole algebra")
    ids0 = [next(iter(v)) for v in gens]
    blk = homology.covering_selfinjective_block(alg, _support_vertices(alg, ids0))
    if blk is not None:
        return PhiResult(0, True, "theorem_selfinjective", trace,
                         f"block {'+'.join(sorted(blk))}")
    if len(gens) == 1:
        pdres = homology.pd_class(alg, ids0[0], budgets)
        if pdres.status == "infinite":
            return PhiResult(0, True, "indec_infinite_pd", trace,
                             pdres.evidence.get("kind", ""))
    seen = set(ids0)
    value = 0
    depth = 0
    closure_depth = None
    cur = gens
    while True:
        limit = budgets.depth if closure_depth is None else max(
            budgets.depth, len(seen) + 1)
        if depth >= limit:
            break
        depth += 1
        try:
            cur = [omega_bar(alg, g, budgets) for g in cur]
        except BudgetExceeded as exc:
            return PhiResult(value, False, "budget", trace, str(exc))
        r = lattice_rank_of(cur)
        if r > trace[-1]:
            raise AssertionError("rank trace increased")
        trace.append(r)
        if r < trace[-2]:
            value = depth
        if r == 0:
            return PhiResult(value, True, "finite_pd", trace)
        support = {i for g in cur for i in g}
        new = support - seen
        seen |= support
        if closure_depth is None:
            blk = homology.covering_selfinjective_block(
                alg, _support_vertices(alg, support))
            if blk is not None:
                return PhiResult(value, True, "theorem_selfinjective", trace,
                                 f"block {'+'.join(sorted(blk))} from depth {depth}")
            if not new:
                closure_depth = depth
            elif r == 1:
                # coefficients stay nonnegative, so one certified-infinite-pd
                # class in the support pins the rank at 1 forever
                for eid in sorted(support):
                    pdres = homology.pd_class(alg, eid, budgets)
                    if pdres.status == "infinite":
                        return PhiResult(value, True, "rank_one_persistent",
                                         trace,
                                         f"class {eid} has infinite pd "
                                         f"({pdres.evidence.get('kind')})")
        if closure_depth is not None and depth >= len(seen) + 1:
            return PhiResult(value, True, "orbit_cycle", trace,
                             f"{len(seen)} classes, closed at depth {closure_depth}")
    return PhiResult(value, False, "depth_budget", trace)


def vanishing_index(alg: BoundAlgebra, vec: K0Vector,
                    budgets: Budgets = DEFAULT) -> int | None:
    """Least n with Omega-bar^n(vec) = 0, or None within the depth budget.

    For a module whose summands all have finite pd, phi equals the maximum
    vanishing index over the generator classes; used as a finite-pd
    cross-check of the trace computation.
    """
    cur = dict(vec)
    for n in range(budgets.depth + 1):
        if not cur:
            return n
        cur = omega_bar(alg, cur, budgets)
    return None


@dataclass
class PhiDimResult:
    value: int
    all_certified: bool
    results: list

    @property
    def status(self) -> str:
        return "certified" if self.all_certified else "degraded"


def phi_dim_over(ms, budgets: Budgets = DEFAULT) -> PhiDimResult:
    """max of certified phi values over a list; LowerBound degrades the status."""
    results = [phi(m, budgets) for m in ms]
    value = max((r.value for r in results if r.certified), default=0)
    return PhiDimResult(value, all(r.certified for r in results), results)


@dataclass
class EtaCheck:
    status: str  # "ok" | "not_applicable" | "counterexample"
    eta: int | None
    rank: int
    trace: list
    note: str = ""


def eta_bound_check(alg: BoundAlgebra, vecs, budgets: Budgets = DEFAULT) -> EtaCheck:
    """For an Omega-bar-stable lattice G, assert stabilization index <= rank G."""
    vecs = [dict(v) for v in vecs]
    rank0 = lattice_rank_of(vecs)
    if not vecs or rank0 == 0:
        return EtaCheck("ok", 0, 0, [0], "zero lattice")
    try:
        images = [omega_bar(alg, v, budgets) for v in vecs]
    except BudgetExceeded as exc:
        return EtaCheck("not_applicable", None, rank0, [rank0], str(exc))
    for img in images:
        if not lattice_member(vecs, img):
            return EtaCheck("not_applicable", None, rank0, [rank0],
                            "lattice is not Omega-bar stable")
    trace = [rank0]
    cur = images
    eta = 0
    for depth in range(1, rank0 + 2):
        r = lattice_rank_of(cur)
        trace.append(r)
        if r < trace[-2]:
            eta = depth
        if r == 0:
            break
        try:
            cur = [omega_bar(alg, v, budgets) for v in cur]
        except BudgetExceeded as exc:
            return EtaCheck("not_applicable", eta, rank0, trace, str(exc))
    status = "ok" if eta <= rank0 else "counterexample"
    return EtaCheck(status, eta, rank0, trace)
