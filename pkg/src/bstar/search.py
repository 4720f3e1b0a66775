"""Exhaustive branch-and-bound search for extremal B*[g] sets.

Two decision engines answer "is there a B*[g] set of size k inside
[1, n] (integer kind) or Z_n (modular kind)?":

* g = 2: a bitmask DFS over Python big ints.  A candidate x is blocked
  exactly when some pair sum x + y would collide with an existing pair
  or diagonal sum, so the viable-extension mask is maintained
  incrementally with shifts (rotations in the modular case).
* g >= 3: a counting DFS that updates the dense representation profile
  r(t) in place and aborts a branch as soon as some r(t) would exceed g.

Canonical form fixes the first element (1 for integer, 0 for modular;
translation invariance makes this lossless), so the DFS yields the
lexicographically first witness and independent subtrees can be farmed
out to worker processes deterministically.

min_n uses that integer feasibility is monotone in n (a witness inside
[1, n] also fits in [1, n+1]), so a binary search plus one completed
infeasibility proof at min_n - 1 certifies every smaller n.  Modular
feasibility is not monotone; there every n is decided separately, with
counting lower bounds used to skip provably infeasible prefixes of the
range.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .intsets import IntSet

DEFAULT_BUDGET = 10**9

# Subtrees are only farmed out to processes when the ambient space is
# large enough for the fork overhead to pay off.
_PARALLEL_MIN_N = 30


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the decision was certified."""


@dataclass(frozen=True)
class SearchProblem:
    kind: str  # "integer" | "modular"
    g: int
    k: int
    n_start: int
    n_limit: int
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def __post_init__(self):
        if self.kind not in ("integer", "modular"):
            raise ValueError("kind must be 'integer' or 'modular'")
        if self.g < 1 or self.k < 1:
            raise ValueError("g and k must be positive")
        if self.n_start > self.n_limit:
            raise ValueError("empty search range")


@dataclass(frozen=True)
class SearchResult:
    min_n: Optional[int]  # None = not found within [n_start, n_limit]
    witness: Optional[IntSet]
    nodes_explored: int
    exhaustive: bool


@dataclass(frozen=True)
class Decision:
    """Outcome of one feasibility question at fixed (kind, g, n, k)."""

    witness: Optional[IntSet]
    nodes: int

    @property
    def feasible(self) -> bool:
        return self.witness is not None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1):
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded("node budget exhausted")


def infeasibility_floor(kind: str, g: int, k: int) -> int:
    """Smallest n not excluded by counting arguments.

    All k^2 ordered sums must fit under the cap g, with the parity
    refinement that odd counts only occur at doubled elements; for g = 2
    the distinct unordered pairs inject into difference (modular) or sum
    (integer) values.
    """
    if g == 1 and k > 1:
        return 1 << 60  # two elements already force r(a+b) = 2
    pairs = k * (k - 1) // 2
    if kind == "modular":
        if g % 2 == 0:
            floor = -(-(k * k) // g)
        else:
            floor = -(-(k * k - k) // (g - 1)) if g > 1 else k
        if g == 2:
            floor = max(floor, 2 * pairs)
        return max(k, floor)
    floor = -(-(k * k) // (2 * g))
    if g == 2:
        floor = max(floor, pairs + 1)
    elif g == 3:
        floor = max(floor, -(-(pairs + 3) // 2))
    return max(k, floor)


# ---------------------------------------------------------------------------
# g = 2 bitmask engine
# ---------------------------------------------------------------------------

def _decide_sidon_int(n: int, k: int, budget: _Budget, prefix=()):
    """All unordered pair sums (diagonals included) distinct; integers in [1, n]."""

    def extend(S, D, B, depth):
        # S: elements; D: mask of positive differences; B: blocked-future mask
        budget.spend()
        e = S[-1]
        new_diffs = 0
        for y in S[:-1]:
            if (D >> (e - y)) & 1 or (new_diffs >> (e - y)) & 1:
                return None
            new_diffs |= 1 << (e - y)
        D |= new_diffs
        B |= D << e
        for y in S:
            B |= new_diffs << y
        return D, B

    def rec(S, D, B, depth):
        if depth == k:
            return tuple(S)
        lo, hi = S[-1] + 1, n - (k - depth - 1)
        if lo > hi:
            return None
        cand = ~B & ((1 << (hi + 1)) - 1) & -(1 << lo)
        while cand:
            lsb = cand & -cand
            e = lsb.bit_length() - 1
            cand ^= lsb
            budget.spend()
            new_diffs = 0
            for y in S:
                new_diffs |= 1 << (e - y)
            D2 = D | new_diffs
            B2 = B | (D2 << e)
            for y in S:
                B2 |= new_diffs << y
            S.append(e)
            out = rec(S, D2, B2, depth + 1)
            S.pop()
            if out is not None:
                return out
        return None

    if k > n:
        return None
    if k == 1:
        return (1,)
    state = [1]
    D = B = 0
    for e in prefix:
        state.append(e)
        upd = extend(state, D, B, len(state))
        if upd is None:
            return None
        D, B = upd
    return rec(state, D, B, len(state))


def _rot(mask: int, d: int, n: int, full: int) -> int:
    d %= n
    return ((mask << d) | (mask >> (n - d))) & full if d else mask


def _decide_sidon_mod(n: int, k: int, budget: _Budget, prefix=()):
    """Distinct pair sums mod n, none equal to a diagonal sum; 0 in S.

    Two diagonals may share a sum (2a == 2a' happens mod even n), which
    keeps r at 2, so only pair-vs-pair and pair-vs-diagonal collisions
    are forbidden.
    """
    full = (1 << n) - 1

    def try_add(S, PS, DS, B, e):
        budget.spend()
        smask = 0
        for y in S:
            s = (e + y) % n
            if ((PS | DS) >> s) & 1 or (smask >> s) & 1:
                return None
            smask |= 1 << s
        de = (2 * e) % n
        if (PS >> de) & 1 or (smask >> de) & 1:
            return None
        PS2 = PS | smask
        DS2 = DS | (1 << de)
        total = PS2 | DS2
        B2 = B | _rot(total, n - e % n, n, full)
        newbits = smask | (DS2 & ~DS)
        for y in S:
            B2 |= _rot(newbits, n - y, n, full)
        return PS2, DS2, B2

    def rec(S, PS, DS, B, depth):
        if depth == k:
            return tuple(S)
        lo, hi = S[-1] + 1, n - 1 - (k - depth - 1)
        if lo > hi:
            return None
        cand = ~B & ((1 << (hi + 1)) - 1) & -(1 << lo)
        while cand:
            lsb = cand & -cand
            e = lsb.bit_length() - 1
            cand ^= lsb
            upd = try_add(S, PS, DS, B, e)
            if upd is None:
                continue
            S.append(e)
            out = rec(S, *upd, depth + 1)
            S.pop()
            if out is not None:
                return out
        return None

    if k > n:
        return None
    if k == 1:
        return (0,)
    state = [0]
    PS, DS, B = 0, 1, 1  # diagonal 0+0; element 0 blocked for reuse
    for e in prefix:
        upd = try_add(state, PS, DS, B, e)
        if upd is None:
            return None
        PS, DS, B = upd
        state.append(e)
    return rec(state, PS, DS, B, len(state))


# ---------------------------------------------------------------------------
# general-g counting engine
# ---------------------------------------------------------------------------

def _decide_counts(kind: str, g: int, n: int, k: int, budget: _Budget, prefix=()):
    modular = kind == "modular"
    length = n if modular else 2 * n + 1
    first = 0 if modular else 1
    hi_base = n - 1 if modular else n
    r = bytearray(length)

    def try_add(S, e):
        budget.spend()
        t2 = (2 * e) % length if modular else 2 * e
        if r[t2] + 1 > g:
            return False
        for y in S:
            t = (e + y) % length if modular else e + y
            if r[t] + 2 > g:
                return False
        r[t2] += 1
        for y in S:
            t = (e + y) % length if modular else e + y
            r[t] += 2
        return True

    def undo(S, e):
        r[(2 * e) % length if modular else 2 * e] -= 1
        for y in S:
            t = (e + y) % length if modular else e + y
            r[t] -= 2

    def rec(S, depth):
        if depth == k:
            return tuple(S)
        hi = hi_base - (k - depth - 1)
        for e in range(S[-1] + 1, hi + 1):
            if try_add(S, e):
                S.append(e)
                out = rec(S, depth + 1)
                S.pop()
                undo(S, e)
                if out is not None:
                    return out
        return None

    if k > n:
        return None
    r[(2 * first) % length if modular else 2 * first] = 1
    state = [first]
    if k == 1:
        return tuple(state)
    for e in prefix:
        if not try_add(state, e):
            return None
        state.append(e)
    return rec(state, len(state))


def _decide(kind: str, g: int, n: int, k: int, budget: _Budget, prefix=()):
    if g == 2:
        if kind == "integer":
            return _decide_sidon_int(n, k, budget, prefix)
        return _decide_sidon_mod(n, k, budget, prefix)
    return _decide_counts(kind, g, n, k, budget, prefix)


def _branch_worker(args):
    kind, g, n, k, budget_limit, second = args
    budget = _Budget(budget_limit)
    try:
        witness = _decide(kind, g, n, k, budget, prefix=(second,))
    except BudgetExceeded:
        return second, "budget", budget_limit - budget.left
    return second, witness, budget_limit - budget.left


def exists_set(kind: str, g: int, n: int, k: int,
               budget: int = DEFAULT_BUDGET, workers: int = 1) -> Decision:
    """Find the lexicographically first witness, or certify none exists.

    Raises BudgetExceeded when the node budget runs out; an exhausted
    search never reports infeasible silently.  With workers > 1 the
    top-level branches run in separate processes and the budget applies
    to each branch; the merged answer is independent of scheduling.
    """
    if g < 1 or k < 1 or n < 1:
        raise ValueError("g, n, k must be positive")
    if k > n:
        return Decision(None, 0)
    if n < infeasibility_floor(kind, g, k):
        return Decision(None, 0)
    modulus = n if kind == "modular" else None
    if k == 1:
        first = 0 if kind == "modular" else 1
        return Decision(IntSet.of([first], modulus), 0)

    if workers > 1 and n >= _PARALLEL_MIN_N and k > 2:
        first = 0 if kind == "modular" else 1
        hi = (n - 1 if kind == "modular" else n) - (k - 2)
        seconds = range(first + 1, hi + 1)
        jobs = [(kind, g, n, k, budget, s) for s in seconds]
        nodes = 0
        results: dict[int, object] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for second, witness, spent in pool.map(_branch_worker, jobs, chunksize=4):
                nodes += spent
                results[second] = witness
        for second in seconds:  # deterministic: first branch in element order wins
            witness = results[second]
            if witness == "budget":
                raise BudgetExceeded("node budget exhausted in a branch")
            if witness is not None:
                return Decision(IntSet.of(witness, modulus), nodes)
        return Decision(None, nodes)

    tracker = _Budget(budget)
    witness = _decide(kind, g, n, k, tracker)
    nodes = budget - tracker.left
    if witness is None:
        return Decision(None, nodes)
    return Decision(IntSet.of(witness, modulus), nodes)


def min_n(problem: SearchProblem) -> SearchResult:
    """Smallest n in [n_start, n_limit] admitting a size-k B*[g] set."""
    p = problem
    floor = infeasibility_floor(p.kind, p.g, p.k)
    lo = max(p.n_start, floor)
    if lo > p.n_limit:
        return SearchResult(None, None, 0, exhaustive=p.n_start <= floor)
    nodes = 0

    if p.kind == "integer":
        # Feasibility is monotone in n: binary search, then certify
        # min_n - 1 (monotonicity covers everything below it).
        hi_dec = exists_set(p.kind, p.g, p.n_limit, p.k, p.budget, p.workers)
        nodes += hi_dec.nodes
        if not hi_dec.feasible:
            return SearchResult(None, None, nodes, exhaustive=True)
        lo_bound, hi_bound, best = lo, p.n_limit, hi_dec.witness
        proved_below = False  # completed infeasibility proof at lo_bound - 1
        while lo_bound < hi_bound:
            mid = (lo_bound + hi_bound) // 2
            dec = exists_set(p.kind, p.g, mid, p.k, p.budget, p.workers)
            nodes += dec.nodes
            if dec.feasible:
                hi_bound, best = mid, dec.witness
            else:
                lo_bound, proved_below = mid + 1, True
        found = lo_bound
        if not proved_below and found > floor:
            dec = exists_set(p.kind, p.g, found - 1, p.k, p.budget, p.workers)
            nodes += dec.nodes
            proved_below = not dec.feasible
        return SearchResult(found, best, nodes,
                            exhaustive=found == floor or proved_below)

    # modular: feasibility is not monotone in n, so decide every n
    for n in range(lo, p.n_limit + 1):
        dec = exists_set(p.kind, p.g, n, p.k, p.budget, p.workers)
        nodes += dec.nodes
        if dec.feasible:
            return SearchResult(n, dec.witness, nodes, exhaustive=p.n_start <= floor)
    return SearchResult(None, None, nodes, exhaustive=p.n_start <= floor)
