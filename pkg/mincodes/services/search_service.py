"""
Determination of n(k;q), the least length admitting a minimal [n,k]_q code.

The search space is multisets of projective points taken in nondecreasing
index order. Scaling a column keeps every codeword support and permuting
columns only permutes them, so neither changes minimality. Zero columns are
never used: a minimal code with a zero column stays minimal without it, so
one would only pad a shorter solution.

By default the search also fixes the unit vectors e_1..e_k as columns. Any
rank-k multiset is carried onto one containing them by an invertible linear
map, which maps C(D) onto an equivalent code with the same supports.
"""

from __future__ import annotations

import logging
import time
from itertools import combinations_with_replacement

import numpy as np

from mincodes.exceptions import EnumerationTooLargeError, InvalidParameterError
from mincodes.models.code import DefiningSet
from mincodes.models.field import FieldSpec
from mincodes.models.search import Bounds, ExistenceResult, SearchReport
from mincodes.models.vector import Vector
from mincodes.services.common import chunks, progress, projective_count
from mincodes.services.construction_service import ConstructionService
from mincodes.services.linalg_service import EchelonBasis, LinalgService, SpanTable
from mincodes.services.minimality_service import MinimalityService
from mincodes.services.workers import run_tasks
from mincodes.utils.constants import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_SPLIT_DEPTH,
    PAIR_ENUMERATION_LIMIT,
    Existence,
    LengthClass,
    SearchStatus,
)

logger = logging.getLogger("mincodes.search")


class _OutOfBudget(Exception):
    pass


class _Backtracker:
    """
    Depth-first search over nondecreasing column sequences.

    For every projective y it keeps the id (in a SpanTable) of the span of
    the chosen columns lying in H(y), so the total deficit
    sum_y (k-1 - dim V(y, partial)) is known at every node. Three cuts:

    - a new column lies in h = (q^{k-1}-1)/(q-1) projective hyperplanes and
      lowers each deficit by at most one, so a node whose deficit exceeds
      (columns left) * h cannot be completed;
    - columns come in index order, so once the loop moves past the last
      point of H(y) a deficient y stays deficient and the loop stops;
    - with the unit vectors fixed, the free columns are only taken with
      orbit-minimal lead: the first free column is the least point of its
      orbit under coordinate permutations and scalings, and no later column
      has an orbit below it. The canonical image of any solution passes.
    """

    def __init__(self, n: int, k: int, spec: FieldSpec, budget: int, prune: bool = True,
                 fix_basis: bool = True):
        self.n, self.k, self.spec = n, k, spec
        self.budget = budget
        self.prune = prune
        self.fix_basis = fix_basis
        points = LinalgService.projective_array(k, spec)
        self.rows = [tuple(int(c) for c in r) for r in points]
        self.index = {r: i for i, r in enumerate(self.rows)}
        self.h = projective_count(k - 1, spec.q) if k > 1 else 0
        self.full = k - 1
        self.table = SpanTable(spec, k, self.rows)
        self.sub = [0] * len(self.rows)
        self.whole = 0
        self.deficit = len(self.rows) * (k - 1)
        self.chosen: list[int] = []
        self.nodes = 0
        self.incidence, self.closing = _incidence(points, spec)
        self.orbit_min = LinalgService.monomial_orbit_minima(k, spec).tolist() if fix_basis else None

    def push(self, c: int) -> tuple[list[tuple[int, int]], int]:
        table, sub, dims, full = self.table, self.sub, self.table.dims, self.full
        raised = []
        for r in self.incidence[c]:
            s = sub[r]
            if dims[s] < full:
                t = table.join(s, c)
                if t != s:
                    sub[r] = t
                    raised.append((r, s))
        self.deficit -= len(raised)
        whole = self.whole
        if dims[whole] < self.k:
            self.whole = table.join(whole, c)
        self.chosen.append(c)
        return raised, whole

    def pop(self, undo: tuple[list[tuple[int, int]], int]) -> None:
        raised, whole = undo
        for r, s in raised:
            self.sub[r] = s
        self.deficit += len(raised)
        self.whole = whole
        self.chosen.pop()

    def feasible(self, remaining: int) -> bool:
        if not self.prune:
            return True
        if self.deficit > remaining * self.h:
            return False
        return self.table.dims[self.whole] + remaining >= self.k

    def stranded(self, c: int) -> bool:
        """True when some y with no point of H(y) at index >= c is still deficient."""
        dims, sub, full = self.table.dims, self.sub, self.full
        return any(dims[sub[r]] < full for r in self.closing[c - 1])

    def dfs(self, start: int, remaining: int, lead: int | None) -> bool:
        if remaining == 0:
            return self.deficit == 0 and self.table.dims[self.whole] == self.k
        orbit_min = self.orbit_min
        for c in range(start, len(self.rows)):
            if self.prune and c > start and self.stranded(c):
                break
            if orbit_min is not None and (orbit_min[c] != c if lead is None else orbit_min[c] < lead):
                continue
            if self.nodes >= self.budget:
                raise _OutOfBudget()
            self.nodes += 1
            undo = self.push(c)
            if self.feasible(remaining - 1) and self.dfs(c, remaining - 1, c if lead is None else lead):
                return True
            self.pop(undo)
        return False

    def seed(self) -> int:
        """Place the fixed columns; return how many columns are left to choose."""
        if not self.fix_basis:
            return self.n
        for i in range(self.k):
            unit = tuple(1 if j == i else 0 for j in range(self.k))
            self.push(self.index[unit])
        return self.n - self.k

    def run(self, first: int | None = None) -> ExistenceResult:
        """
        Search the whole tree, or only the subtree whose first free column is
        `first`. Node counts over all subtrees add up to the whole-tree count.
        """
        remaining = self.seed()
        try:
            if not self.feasible(remaining):
                logger.debug("n=%d pruned at the root (deficit %d > %d)", self.n, self.deficit, remaining * self.h)
                return ExistenceResult(Existence.EXHAUSTED, self.n, None, self.nodes)
            if first is None:
                found = self.dfs(0, remaining, None)
            else:
                if self.prune and any(self.stranded(c) for c in range(1, first + 1)):
                    return ExistenceResult(Existence.EXHAUSTED, self.n, None, self.nodes)
                if self.nodes >= self.budget:
                    raise _OutOfBudget()
                self.nodes += 1
                self.push(first)
                found = self.feasible(remaining - 1) and self.dfs(first, remaining - 1, first)
            if found:
                return ExistenceResult(Existence.FOUND, self.n, self.witness(), self.nodes)
        except _OutOfBudget:
            return ExistenceResult(Existence.BUDGET_EXHAUSTED, self.n, None, self.nodes)
        return ExistenceResult(Existence.EXHAUSTED, self.n, None, self.nodes)

    def witness(self) -> DefiningSet:
        rows = sorted(self.rows[c] for c in self.chosen)
        return DefiningSet.from_rows(rows, self.spec, self.k)


def _incidence(points: np.ndarray, spec: FieldSpec) -> tuple[list[list[int]], list[list[int]]]:
    """
    For each point c the projective y with <y, c> = 0, and for each index x
    the y whose hyperplane has x as its last point.
    """
    incidence: list[list[int]] = []
    for lo, hi in chunks(len(points)):
        zero = spec.dot(points[lo:hi], points) == 0
        incidence.extend(np.flatnonzero(row).tolist() for row in zero)
    closing: list[list[int]] = [[] for _ in points]
    for y, inc in enumerate(incidence):
        if inc:
            closing[inc[-1]].append(y)
    return incidence, closing


def _search_subtree(p: int, m: int, n: int, k: int, budget: int, prune: bool, fix_basis: bool,
                    first: int | None):
    """Worker: one subtree of the search, returned as (status, witness rows, nodes)."""
    from mincodes.services.field_service import FieldService

    spec = FieldService.make_field(p, m)
    result = _Backtracker(n, k, spec, budget, prune, fix_basis).run(first)
    rows = result.witness.as_rows() if result.witness is not None else None
    return result.status, rows, result.nodes


class SearchService:

    @staticmethod
    def counting_lower_bound(k: int, q: int) -> int:
        """Least n with n(q^{k-1} - 1) >= (k-1)(q^k - 1): every nonzero y needs k-1 columns in H(y)."""
        if k <= 1:
            return max(k, 1)
        return max(k, -(-(k - 1) * (q ** k - 1) // (q ** (k - 1) - 1)))

    @staticmethod
    def bounds(k: int, q: int) -> Bounds:
        """q(k-1) < n(k;q) <= (q-1)k(k-1)/2 + k."""
        if k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        return Bounds(
            k=k,
            q=q,
            lower_exclusive=q * (k - 1),
            upper_inclusive=(q - 1) * k * (k - 1) // 2 + k,
            counting_lower_inclusive=SearchService.counting_lower_bound(k, q),
        )

    @staticmethod
    def classify_length(n: int, k: int, q: int) -> str:
        b = SearchService.bounds(k, q)
        if n >= b.upper_inclusive:
            return LengthClass.EXISTS
        if n <= b.lower_exclusive:
            return LengthClass.IMPOSSIBLE
        return LengthClass.OPEN

    @staticmethod
    def prune_bound(partial, n: int, k: int, spec: FieldSpec) -> bool:
        """
        False when the columns in `partial` can never be completed to a minimal
        code of length n: the summed hyperplane deficits exceed what n - j more
        columns can repair.
        """
        partial = list(partial)
        remaining = n - len(partial)
        if remaining < 0:
            return False
        h = projective_count(k - 1, spec.q) if k > 1 else 0
        deficit = 0
        for y in LinalgService.projective_points(k, spec):
            basis = EchelonBasis(spec, k)
            for d in partial:
                if basis.dim == k - 1:
                    break
                if LinalgService.inner_product(y, d).value == 0:
                    basis.insert(d.coords)
            deficit += (k - 1) - basis.dim
        return deficit <= remaining * h

    @staticmethod
    def _check_size(n: int, k: int, spec: FieldSpec) -> None:
        if k < 1 or n < k:
            raise InvalidParameterError(f"Error: need n >= k >= 1 (got n={n}, k={k})")
        if spec.q ** k > PAIR_ENUMERATION_LIMIT:
            raise EnumerationTooLargeError(
                f"Error: q^k = {spec.q ** k} exceeds the search limit {PAIR_ENUMERATION_LIMIT}"
            )

    @staticmethod
    def exists_minimal(n: int, k: int, spec: FieldSpec, budget: int = DEFAULT_NODE_BUDGET, prune: bool = True,
                       fix_basis: bool = True, jobs: int = 1) -> ExistenceResult:
        """Decide whether a minimal [n,k]_q code exists; running out of nodes is a status, not an error."""
        SearchService._check_size(n, k, spec)
        if jobs <= 1 or n - (k if fix_basis else 0) < DEFAULT_SPLIT_DEPTH + 1:
            result = _Backtracker(n, k, spec, budget, prune, fix_basis).run()
        else:
            result = SearchService._exists_parallel(n, k, spec, budget, prune, fix_basis, jobs)
        logger.info("n=%d k=%d q=%d: %s after %d nodes", n, k, spec.q, result.status, result.nodes)
        return result

    @staticmethod
    def _exists_parallel(n, k, spec, budget, prune, fix_basis, jobs) -> ExistenceResult:
        """
        Split on the first free column; the node budget is divided between the
        subtrees without exceeding it. A witness counts only when every
        earlier subtree was exhausted, so the answer is the serial one:
        the first witness in traversal order, with the serial node count.
        """
        if fix_basis:
            minima = LinalgService.monomial_orbit_minima(k, spec).tolist()
            firsts = [c for c, low in enumerate(minima) if low == c]
        else:
            firsts = list(range(projective_count(k, spec.q)))
        base, extra = divmod(budget, len(firsts))
        tasks = [
            (spec.p, spec.m, n, k, base + (1 if i < extra else 0), prune, fix_basis, c)
            for i, c in enumerate(firsts)
        ]
        results = run_tasks(_search_subtree, tasks, jobs)
        total = sum(r[2] for r in results)
        nodes = 0
        for status, rows, used in results:
            nodes += used
            if status == Existence.FOUND:
                return ExistenceResult(Existence.FOUND, n, DefiningSet.from_rows(rows, spec, k), nodes)
            if status == Existence.BUDGET_EXHAUSTED:
                return ExistenceResult(Existence.BUDGET_EXHAUSTED, n, None, total)
        return ExistenceResult(Existence.EXHAUSTED, n, None, total)

    @staticmethod
    def reference_exists(n: int, k: int, spec: FieldSpec) -> ExistenceResult:
        """
        Plain enumeration of every multiset of n projective points, without
        pruning or fixed columns. Only meant for cross-checking at small sizes.
        """
        SearchService._check_size(n, k, spec)
        points = LinalgService.projective_array(k, spec)
        rows = [tuple(int(c) for c in r) for r in points]
        zero = spec.dot(points, points) == 0
        count = 0
        for combo in progress(combinations_with_replacement(range(len(rows)), n), desc=f"reference n={n}"):
            count += 1
            if LinalgService.rank([Vector(rows[c], spec) for c in combo]) != k:
                continue
            ok = True
            for r in range(len(rows)):
                basis = EchelonBasis(spec, k)
                for c in combo:
                    if zero[r, c] and basis.insert(rows[c]) and basis.dim == k - 1:
                        break
                if basis.dim < k - 1:
                    ok = False
                    break
            if ok:
                witness = DefiningSet.from_rows([rows[c] for c in combo], spec, k)
                return ExistenceResult(Existence.FOUND, n, witness, count)
        return ExistenceResult(Existence.EXHAUSTED, n, None, count)

    @staticmethod
    def n_min(k: int, spec: FieldSpec, budget: int = DEFAULT_NODE_BUDGET, n_max: int | None = None,
              prune: bool = True, fix_basis: bool = True, jobs: int = 1) -> SearchReport:
        """
        Scan n upward from q(k-1)+1. At the upper bound D0 is the witness;
        below it every length is searched. Stops on the first witness, on
        n_max (bracket) or when the node budget runs out.
        """
        started = time.perf_counter()
        b = SearchService.bounds(k, spec.q)
        nonexistence: dict[int, int] = {}
        used = 0

        def report(status, lower, upper, n_min=None, witness=None):
            return SearchReport(
                k=k, q=spec.q, status=status, lower_exclusive=lower, upper_inclusive=upper, n_min=n_min,
                witness=witness, nonexistence=nonexistence, budget=budget, budget_used=used,
                wall_time=time.perf_counter() - started,
            )

        for n in range(b.lower_exclusive + 1, b.upper_inclusive + 1):
            if n_max is not None and n > n_max:
                logger.info("stopped at n_max=%d; n(%d;%d) in (%d, %d]", n_max, k, spec.q, n - 1, b.upper_inclusive)
                return report(SearchStatus.BRACKET, n - 1, b.upper_inclusive)
            if n == b.upper_inclusive:
                witness = ConstructionService.d0(k, spec)
                if not MinimalityService.check_span(witness).minimal:  # pragma: no cover
                    raise InvalidParameterError("Error: D0 failed its minimality check")
                logger.info("n=%d k=%d q=%d: D0 witness at the upper bound", n, k, spec.q)
                return report(SearchStatus.EXACT, n - 1, n, n, witness)
            if used >= budget:
                return report(SearchStatus.BUDGET_EXHAUSTED, n - 1, b.upper_inclusive)
            result = SearchService.exists_minimal(n, k, spec, budget - used, prune, fix_basis, jobs)
            used += result.nodes
            if result.found:
                return report(SearchStatus.EXACT, n - 1, n, n, result.witness)
            if result.status == Existence.BUDGET_EXHAUSTED:
                return report(SearchStatus.BUDGET_EXHAUSTED, n - 1, b.upper_inclusive)
            nonexistence[n] = result.nodes
        # the loop always returns at the upper bound
        raise InvalidParameterError("Error: empty search range")  # pragma: no cover
