"""Polynomial-time maximum-deficiency decision for 3-chromatic signed graphs.

The procedure flattens the input into a matched form (one positive perfect
matching, all other edges negative, negative loops allowed), then repeatedly
applies the first firing rule of a fixed priority ladder until the graph is
empty (answer 1, with a stable cover of the positive edges) or a
contradiction surfaces (answer 0).  Each firing removes at least one matched
pair, so a run makes at most one pass per initial pair.

Rule ladder, in priority order (numbering is part of the trace contract):

  3  a pair with both sides unusable, at least one via the forbidden set -> 0
  4  a pair with one side forbidden: its partner joins the cover
  5  a pair with loops on both sides -> 0
  6  a pair with a loop on one side: the partner joins the cover
  7  a vertex adjacent to both sides of another pair: its partner joins
  8  cross-adjacent pair of pairs: identify the sides that must go together
  9  a vertex of degree one joins the cover (a safe free choice)
 10  empty graph -> 1; expand the cover through the recovery map
 11  build the forcing digraph (edge x->y when x is adjacent to y's partner)
 12  follow a cycle and its mirror: overlapping -> 0, disjoint -> contract

Vertices of the matched form use internal ids 2p / 2p+1 for pair p, so a
vertex's partner is always ``id ^ 1`` and survives every contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import oracle
from .core import SignedGraph, covers_positive, is_stable

__all__ = [
    "TraceEntry",
    "NotBipartite",
    "MatchedState",
    "ForcingGraph",
    "MaxDefResult",
    "flatten",
    "step3_check",
    "step4_resolve",
    "step5_check",
    "step6_resolve",
    "step7_resolve",
    "step8_merge",
    "step9_pendant",
    "build_forcing_graph",
    "step12_contract",
    "maxdef",
]


def side_name(x: int) -> str:
    """Display name of internal id x: pair p's low side is a{p+1}, high b{p+1}."""
    return f"{'ab'[x & 1]}{(x >> 1) + 1}"


@dataclass(frozen=True)
class TraceEntry:
    """One executed action of a run, machine-readable for replay."""

    step: int
    detail: str
    pairs_removed: int = 0
    s_added: tuple[str, ...] = ()
    b_added: tuple[str, ...] = ()
    merges: tuple[tuple[str, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "detail": self.detail,
            "pairs_removed": self.pairs_removed,
            "s_added": list(self.s_added),
            "b_added": list(self.b_added),
            "merges": [list(m) for m in self.merges],
        }


@dataclass(frozen=True)
class NotBipartite:
    """Flatten verdict: some positive component has an odd cycle, so the
    maximum deficiency is 0 outright."""

    component: tuple[str, ...]


@dataclass
class MatchedState:
    """Mutable working state of a run on the flattened graph.

    ``neg`` maps each live internal id to its negative neighbors; a vertex
    contained in its own set carries a loop.  ``recovery`` maps each live id
    to the original vertex ids it stands for; those sets partition the
    original vertices that survived flattening and are not yet committed to
    the cover or dropped with a removed partner.  ``forbidden`` holds live
    ids only: dead ids are purged whenever a pair is deleted.
    """

    source: SignedGraph
    neg: dict[int, set[int]]
    recovery: dict[int, set[int]]
    kept_originals: frozenset[int]
    cover_ids: set[int] = field(default_factory=set)
    forbidden: set[int] = field(default_factory=set)
    dropped: set[int] = field(default_factory=set)
    trace: list[TraceEntry] = field(default_factory=list)
    validate: bool = False
    checks: int = 0

    def live_pairs(self) -> list[int]:
        return sorted({x >> 1 for x in self.neg})

    @property
    def pairs(self) -> list[tuple[int, int]]:
        """Live matched pairs as (low side, high side) internal ids."""
        return [(2 * p, 2 * p + 1) for p in self.live_pairs()]

    def live_ids(self) -> list[int]:
        return sorted(self.neg)

    def has_loop(self, x: int) -> bool:
        return x in self.neg[x]

    def pair_count(self) -> int:
        return len(self.neg) // 2

    def check_invariants(self) -> None:
        """Structural sanity of the matched form; cheap, assertion-based."""
        live = set(self.neg)
        for x in live:
            assert x ^ 1 in live, "positive matching broken: lone pair side"
        for x, nbrs in self.neg.items():
            assert x ^ 1 not in nbrs, "negative edge inside a matched pair"
            for w in nbrs:
                assert w == x or x in self.neg[w], "asymmetric adjacency"
                assert w in live, "edge to a dead vertex"
        assert self.forbidden <= live, "forbidden set holds a dead id"
        assert set(self.recovery) == live, "recovery keys out of sync"
        union: set[int] = set()
        total = 0
        for x in live:
            rset = self.recovery[x]
            assert rset, "empty recovery set"
            union |= rset
            total += len(rset)
        assert total == len(union), "recovery sets overlap"
        assert union.isdisjoint(self.cover_ids) and union.isdisjoint(self.dropped)
        assert self.cover_ids.isdisjoint(self.dropped)
        assert union | self.cover_ids | self.dropped == set(self.kept_originals)
        self.checks += 1


@dataclass(frozen=True)
class ForcingGraph:
    """Digraph of forced cover decisions: x -> y present exactly when x is
    negatively adjacent to y's partner, so covering x forces covering y.
    Edges mirror: x -> y exists iff partner(y) -> partner(x) does."""

    out_adj: dict[int, tuple[int, ...]]

    @property
    def pairing(self) -> dict[int, int]:
        return {x: x ^ 1 for x in self.out_adj}


@dataclass(frozen=True)
class MaxDefResult:
    """Outcome of a run: the 0/1 maximum deficiency, a stable cover of the
    positive edges in original labels when the answer is 1, the step that
    ended the run, and the full action trace.  ``checks`` counts the
    invariant batches asserted when the run was validated."""

    value: int
    cover: tuple[str, ...] | None
    terminating_step: int
    trace: tuple[TraceEntry, ...]
    checks: int = 0

    @property
    def steps_fired(self) -> tuple[int, ...]:
        return tuple(entry.step for entry in self.trace)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "cover": list(self.cover) if self.cover is not None else None,
            "terminating_step": self.terminating_step,
        }


def flatten(g: SignedGraph, *, validate: bool = False) -> MatchedState | NotBipartite:
    """Reduce a signed graph to matched form.

    Vertices without positive incidence are dropped.  Each positive
    component is two-colored; an odd component ends the run (NotBipartite).
    The two sides collapse to one vertex each -- the side holding the
    component's smallest original id becomes the low (``a``) side -- with
    negative edges inside a side becoming a loop, the negative edge between
    the two new partners deleted, and parallel negatives merged.
    """
    kept = [v for v in range(g.n) if g.pos_adj[v]]
    if not kept:
        raise ValueError(
            "no positive edge: the input cannot be 3-chromatic and has "
            "nothing to cover"
        )
    kept_set = set(kept)
    dropped_step1 = [v for v in range(g.n) if v not in kept_set]

    contract: dict[int, int] = {}
    recovery: dict[int, set[int]] = {}
    pair = 0
    collapsed_any = False
    seen: set[int] = set()
    for root in kept:
        if root in seen:
            continue
        side = {root: 0}
        comp = [root]
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.pos_adj[u]:
                if w not in side:
                    side[w] = side[u] ^ 1
                    comp.append(w)
                    queue.append(w)
                elif side[w] == side[u]:
                    return NotBipartite(component=g.labels_of(comp))
        seen.update(comp)
        if len(comp) > 2:
            collapsed_any = True
        a_id, b_id = 2 * pair, 2 * pair + 1
        for v in comp:
            contract[v] = a_id if side[v] == 0 else b_id
        recovery[a_id] = {v for v in comp if side[v] == 0}
        recovery[b_id] = {v for v in comp if side[v] == 1}
        pair += 1

    neg: dict[int, set[int]] = {x: set() for x in recovery}
    for u in kept:
        for w in g.neg_adj[u]:
            if w < u or w not in kept_set:
                continue
            cu, cw = contract[u], contract[w]
            if cu == cw:
                neg[cu].add(cu)
            elif cu == cw ^ 1:
                continue
            else:
                neg[cu].add(cw)
                neg[cw].add(cu)

    state = MatchedState(
        source=g,
        neg=neg,
        recovery=recovery,
        kept_originals=frozenset(kept),
        validate=validate,
    )
    if dropped_step1:
        state.trace.append(
            TraceEntry(
                step=1,
                detail=f"dropped {len(dropped_step1)} vertices with no "
                f"positive incidence: {', '.join(g.labels_of(dropped_step1))}",
            )
        )
    if collapsed_any:
        loops = sum(1 for x in neg if x in neg[x])
        state.trace.append(
            TraceEntry(
                step=2,
                detail=f"collapsed {len(kept)} vertices into {pair} matched "
                f"pairs ({loops} with loops)",
            )
        )
    if validate:
        state.check_invariants()
    return state


def _labels(st: MatchedState, original_ids: Iterable[int]) -> tuple[str, ...]:
    return st.source.labels_of(original_ids)


def _delete_pair(st: MatchedState, p: int) -> None:
    for x in (2 * p, 2 * p + 1):
        for nb in st.neg.pop(x):
            if nb != x and nb in st.neg:
                st.neg[nb].discard(x)
        st.recovery.pop(x)
        st.forbidden.discard(x)


def _commit(st: MatchedState, keep: int, step: int, detail: str) -> None:
    """Place ``keep`` into the cover, forbid its negative neighbors, and
    delete its pair (the partner's vertices are discarded)."""
    drop = keep ^ 1
    newly_forbidden = sorted(st.neg[keep] - st.forbidden - {keep, drop})
    st.cover_ids |= st.recovery[keep]
    st.dropped |= st.recovery[drop]
    st.forbidden |= set(newly_forbidden)
    covered = _labels(st, st.recovery[keep])
    _delete_pair(st, keep >> 1)
    st.trace.append(
        TraceEntry(
            step=step,
            detail=detail,
            pairs_removed=1,
            s_added=covered,
            b_added=tuple(side_name(x) for x in newly_forbidden),
        )
    )
    if st.validate:
        st.check_invariants()


def step3_check(st: MatchedState) -> int | None:
    """Lowest pair whose two sides are both unusable for the cover, where a
    side is unusable when forbidden or looped and at least one side is
    forbidden.  Such a pair ends the run with value 0.  (Pairs blocked by
    loops alone belong to the loop checks, steps 5 and 6.)"""
    for p in st.live_pairs():
        x, y = 2 * p, 2 * p + 1
        x_forbidden, y_forbidden = x in st.forbidden, y in st.forbidden
        if not (x_forbidden or y_forbidden):
            continue
        if (x_forbidden or st.has_loop(x)) and (y_forbidden or st.has_loop(y)):
            return p
    return None


def step4_resolve(st: MatchedState) -> bool:
    """For the lowest pair with one side forbidden, commit the partner."""
    for p in st.live_pairs():
        for x in (2 * p, 2 * p + 1):
            if x in st.forbidden:
                _commit(
                    st,
                    x ^ 1,
                    step=4,
                    detail=f"{side_name(x)} is forbidden, so "
                    f"{side_name(x ^ 1)} must join the cover",
                )
                return True
    return False


def step5_check(st: MatchedState) -> int | None:
    """Lowest pair with loops on both sides; ends the run with value 0."""
    for p in st.live_pairs():
        if st.has_loop(2 * p) and st.has_loop(2 * p + 1):
            return p
    return None


def step6_resolve(st: MatchedState) -> bool:
    """For the lowest pair with a loop on one side, commit the partner."""
    for p in st.live_pairs():
        for x in (2 * p, 2 * p + 1):
            if st.has_loop(x):
                _commit(
                    st,
                    x ^ 1,
                    step=6,
                    detail=f"{side_name(x)} has a loop, so "
                    f"{side_name(x ^ 1)} must join the cover",
                )
                return True
    return False


def step7_resolve(st: MatchedState) -> bool:
    """A vertex adjacent to both sides of another pair can never be covered,
    so its partner is committed.  Lowest such vertex acts."""
    for x in st.live_ids():
        nbrs = st.neg[x]
        for nb in nbrs:
            if nb != x and nb ^ 1 in nbrs:
                _commit(
                    st,
                    x ^ 1,
                    step=7,
                    detail=f"{side_name(x)} is adjacent to both "
                    f"{side_name(nb & ~1)} and {side_name(nb | 1)}, so "
                    f"{side_name(x ^ 1)} must join the cover",
                )
                return True
    return False


def step8_merge(st: MatchedState) -> bool:
    """Identify cross-forced pairs: when x~y and partner(x)~partner(y), any
    cover containing x also contains partner(y), so those two collapse into
    one vertex (and likewise partner(x) with y).  The surviving pair keeps
    the lower pair's ids."""
    for x in st.live_ids():
        candidates = [y for y in st.neg[x] if y >> 1 != x >> 1]
        for y in sorted(candidates):
            if y ^ 1 in st.neg[x ^ 1]:
                _identify(st, {y ^ 1: x, y: x ^ 1})
                st.trace.append(
                    TraceEntry(
                        step=8,
                        detail=f"edges {side_name(x)}~{side_name(y)} and "
                        f"{side_name(x ^ 1)}~{side_name(y ^ 1)} force the "
                        "pairs together",
                        pairs_removed=1,
                        merges=(
                            (side_name(x), side_name(y ^ 1)),
                            (side_name(x ^ 1), side_name(y)),
                        ),
                    )
                )
                if st.validate:
                    st.check_invariants()
                return True
    return False


def step9_pendant(st: MatchedState) -> bool:
    """Commit the lowest vertex whose only incidence is its matching edge.
    The choice is free but safe: a cover exists exactly when one through
    this vertex does."""
    for x in st.live_ids():
        if not st.neg[x] and x not in st.forbidden:
            _commit(
                st,
                x,
                step=9,
                detail=f"{side_name(x)} has degree one and joins the cover",
            )
            return True
    return False


def _identify(st: MatchedState, mapping: dict[int, int]) -> None:
    """Contract vertices per ``mapping`` (absorbed id -> surviving id).

    Parallel negatives merge, edges landing inside a surviving pair are
    deleted, edges landing on a single vertex become loops, and recovery
    sets accumulate.  Only runs while the forbidden set is empty."""
    assert not st.forbidden, "identifications only happen with nothing forbidden"
    old = st.neg
    new: dict[int, set[int]] = {}
    for u in old:
        new.setdefault(mapping.get(u, u), set())
    for u, nbrs in old.items():
        mu = mapping.get(u, u)
        for w in nbrs:
            if w < u:
                continue
            mw = mapping.get(w, w)
            if mu == mw:
                new[mu].add(mu)
            elif mu == mw ^ 1:
                continue
            else:
                new[mu].add(mw)
                new[mw].add(mu)
    st.neg = new
    for dead, rep in mapping.items():
        st.recovery[rep] |= st.recovery.pop(dead)


def build_forcing_graph(st: MatchedState) -> ForcingGraph:
    """Forcing digraph of the current graph: x -> partner(w) for every
    negative edge x~w.  Only valid once steps 3..9 have all declined, which
    guarantees a simple, loop-free graph of minimum degree 2 with at most
    one negative edge between any two pairs."""
    assert st.neg, "forcing graph of an empty graph"
    out: dict[int, tuple[int, ...]] = {}
    for x in st.live_ids():
        nbrs = st.neg[x]
        assert x not in nbrs, "loop survived to the forcing stage"
        assert nbrs, "degree-one vertex survived to the forcing stage"
        seen_pairs = {nb >> 1 for nb in nbrs}
        assert len(seen_pairs) == len(nbrs), "two negative edges between pairs"
        out[x] = tuple(sorted(nb ^ 1 for nb in nbrs))
    for x, succs in out.items():
        for y in succs:
            assert x ^ 1 in out[y ^ 1], "forcing edges must mirror"
    st.checks += 1
    return ForcingGraph(out_adj=out)


def _walk_cycle(fg: ForcingGraph) -> list[int]:
    """Deterministic cycle: walk lowest-id successors from the lowest vertex
    until a repeat; the cycle is the repeated suffix."""
    start = min(fg.out_adj)
    position: dict[int, int] = {}
    path: list[int] = []
    v = start
    while v not in position:
        position[v] = len(path)
        path.append(v)
        v = fg.out_adj[v][0]
    return path[position[v] :]


def step12_contract(st: MatchedState, fg: ForcingGraph) -> bool:
    """Find a forced cycle and its mirror.  When they overlap, no cover
    exists (returns False).  Otherwise contract each to a single vertex;
    the survivor pair belongs to the lowest pair index on the cycle."""
    cycle = _walk_cycle(fg)
    pairs = [x >> 1 for x in cycle]
    if len(set(pairs)) < len(cycle):
        st.trace.append(
            TraceEntry(
                step=12,
                detail="forced cycle through "
                + ", ".join(side_name(x) for x in cycle)
                + " meets its own mirror: no stable cover exists",
            )
        )
        return False
    rep = cycle[pairs.index(min(pairs))]
    mapping = {x: rep for x in cycle if x != rep}
    mapping.update({x ^ 1: rep ^ 1 for x in cycle if x != rep})
    _identify(st, mapping)
    st.trace.append(
        TraceEntry(
            step=12,
            detail="contracted the forced cycle through "
            + ", ".join(side_name(x) for x in cycle)
            + " and its mirror",
            pairs_removed=len(cycle) - 1,
            merges=(
                tuple(side_name(x) for x in [rep] + [c for c in cycle if c != rep]),
                tuple(
                    side_name(x ^ 1) for x in [rep] + [c for c in cycle if c != rep]
                ),
            ),
        )
    )
    if st.validate:
        st.check_invariants()
    return True


def _finish_zero(st: MatchedState, step: int, detail: str) -> MaxDefResult:
    st.trace.append(TraceEntry(step=step, detail=detail))
    return MaxDefResult(
        value=0, cover=None, terminating_step=step, trace=tuple(st.trace),
        checks=st.checks,
    )


def maxdef(
    g: SignedGraph,
    *,
    assume_chromatic_3: bool = False,
    chromatic_bound: int = oracle.DEFAULT_EXHAUSTIVE_BOUND,
    validate: bool = False,
) -> MaxDefResult:
    """Decide whether the maximum deficiency of a 3-chromatic signed graph
    is 1 (emitting a stable cover of its positive edges) or 0.

    The 3-chromatic precondition is verified exhaustively when the graph has
    at most ``chromatic_bound`` vertices and ``assume_chromatic_3`` is off;
    larger inputs run on the caller's assertion.  With ``validate`` on, the
    structural invariants of the working state are asserted after flattening
    and after every action.

    Whatever the path, a value-1 result is self-certified: the returned
    cover is checked stable and positive-covering against the input graph.
    """
    if not assume_chromatic_3 and g.n <= chromatic_bound:
        chi = oracle.chromatic_number(g, bound=chromatic_bound)
        if chi != 3:
            raise oracle.NotThreeChromaticError(chi)

    flat = flatten(g, validate=validate)
    if isinstance(flat, NotBipartite):
        trace = (
            TraceEntry(
                step=2,
                detail="positive component on "
                + ", ".join(flat.component)
                + " has an odd cycle: no stable cover exists",
            ),
        )
        return MaxDefResult(value=0, cover=None, terminating_step=2, trace=trace)
    st = flat

    passes = 0
    max_passes = st.pair_count() + 2
    while True:
        passes += 1
        assert passes <= max_passes, "run failed to shrink the graph"
        before = st.pair_count()

        blocked = step3_check(st)
        if blocked is not None:
            return _finish_zero(
                st,
                step=3,
                detail=f"both sides of pair {blocked + 1} are unusable "
                "(forbidden or looped): no stable cover exists",
            )
        if step4_resolve(st):
            assert st.pair_count() < before, "action left the pair count flat"
            continue
        looped = step5_check(st)
        if looped is not None:
            return _finish_zero(
                st,
                step=5,
                detail=f"both sides of pair {looped + 1} carry loops: "
                "no stable cover exists",
            )
        if (
            step6_resolve(st)
            or step7_resolve(st)
            or step8_merge(st)
            or step9_pendant(st)
        ):
            assert st.pair_count() < before, "action left the pair count flat"
            continue
        if not st.neg:
            cover = tuple(st.source.labels_of(st.cover_ids))
            cover_ids = st.source.ids_of(cover)
            if not (
                is_stable(st.source, cover_ids)
                and covers_positive(st.source, cover_ids)
            ):
                raise AssertionError(
                    "internal defect: produced cover fails self-certification"
                )
            st.trace.append(
                TraceEntry(
                    step=10,
                    detail="graph is empty; recovered cover " + ", ".join(cover),
                )
            )
            return MaxDefResult(
                value=1, cover=cover, terminating_step=10, trace=tuple(st.trace),
                checks=st.checks,
            )
        fg = build_forcing_graph(st)
        st.trace.append(
            TraceEntry(
                step=11,
                detail=f"built the forcing graph on {len(fg.out_adj)} vertices "
                f"with {sum(len(s) for s in fg.out_adj.values())} edges",
            )
        )
        if not step12_contract(st, fg):
            return MaxDefResult(
                value=0, cover=None, terminating_step=12, trace=tuple(st.trace),
                checks=st.checks,
            )
        assert st.pair_count() < before, "action left the pair count flat"
