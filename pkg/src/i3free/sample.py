"""Random generation of digraphs with no independent triple.

Two generators: exact-uniform rejection sampling for tiny n, and a
Metropolis chain whose stationary distribution is uniform over all valid
digraphs on n vertices.  Both are driven by numpy's PCG64 generator;
identical seeds give identical streams, and parallel chains should use
:func:`spawn_seeds` for provably independent streams.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import Digraph, is_bitournament, is_I3_free
from .errors import CapExceeded, RangeError

# RNG identity echoed in all randomized outputs.
RNG_ALGORITHM = "numpy-pcg64"

REJECTION_CAP = 5


def spawn_seeds(seed: int, k: int) -> list:
    """Derive k independent child seeds from one root seed.

    Uses numpy's SeedSequence spawning, the documented way to split a
    stream for parallel chains.
    """
    return [s.generate_state(1)[0].item() for s in np.random.SeedSequence(seed).spawn(k)]


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple:
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


def transitive_tournament(n: int) -> Digraph:
    """The tournament on [n] with all arcs pointing from smaller to larger."""
    if n < 0:
        raise RangeError(f"vertex count must be non-negative, got {n}")
    full = (1 << n) - 1
    return Digraph(n, [full & (-1 << (u + 1)) for u in range(n)])


def _digraph_from_trits(n: int, trits) -> Digraph:
    rows = [0] * n
    for (u, v), t in zip(_pairs(n), trits):
        if t == 1:
            rows[u] |= 1 << v
        elif t == 2:
            rows[v] |= 1 << u
    return Digraph(n, rows)


def rejection_sample(n: int, rng, cap: int = REJECTION_CAP) -> Digraph:
    """Exact-uniform sample: redraw all pair states until no independent triple.

    ``rng`` is a seed or a numpy Generator.  The acceptance probability is
    F(n) / 3^C(n,2), which shrinks fast; ``cap`` (default 5) guards against
    accidentally unbounded waiting.
    """
    if n > cap:
        raise CapExceeded(f"rejection sampling capped at n={cap}, got {n}")
    if n < 0:
        raise RangeError(f"vertex count must be non-negative, got {n}")
    g = np.random.default_rng(rng)
    m = n * (n - 1) // 2
    while True:
        d = _digraph_from_trits(n, g.integers(0, 3, size=m))
        if is_I3_free(d):
            return d


@dataclass
class ChainState:
    """One Metropolis chain over the valid digraphs on n vertices.

    ``current`` is valid after every step; ``accepted`` counts proposals
    that were applied (including ones that recreate the current state).
    The generator advances in place; states sharing it are snapshots of one
    stream, not independent chains.
    """

    current: Digraph
    step_count: int
    rng_seed: int
    accepted: int
    rng: np.random.Generator = field(repr=False, compare=False)


def new_chain(n: int, rng_seed: int) -> ChainState:
    """Fresh chain started at the transitive tournament on [n]."""
    return ChainState(
        current=transitive_tournament(n),
        step_count=0,
        rng_seed=rng_seed,
        accepted=0,
        rng=np.random.default_rng(rng_seed),
    )


def mcmc_step(state: ChainState) -> ChainState:
    """One Metropolis step: uniform pair, uniform state, apply if still valid.

    The proposal is symmetric, so the stationary distribution is uniform
    over all digraphs with no independent triple.  Only clearing a pair can
    create an independent triple, and that is detected in O(1) words by
    intersecting the two fresh non-neighbourhoods.
    """
    d = state.current
    pairs = _pairs(d.n)
    if not pairs:
        return replace(state, step_count=state.step_count + 1)
    g = state.rng
    u, v = pairs[int(g.integers(len(pairs)))]
    t = int(g.integers(3))
    accept = True
    if t == 0:
        du = d.delta[u] | (1 << v)
        dv = d.delta[v] | (1 << u)
        # u is absent from du and v from dv, so the intersection consists
        # of common non-neighbours w, each completing an independent triple.
        accept = (du & dv) == 0
    if accept:
        nxt = d.with_pair(u, v, t)
        assert is_I3_free(nxt)
        return replace(
            state,
            current=nxt,
            step_count=state.step_count + 1,
            accepted=state.accepted + 1,
        )
    return replace(state, step_count=state.step_count + 1)


@dataclass(frozen=True)
class FractionEstimate:
    """Monte-Carlo estimate of the bitournament fraction."""

    n: int
    samples: int
    hits: int
    estimate: float
    stderr: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "hits": self.hits,
            "estimate": self.estimate,
            "stderr": self.stderr,
        }


def _make_estimate(n: int, samples: int, hits: int) -> FractionEstimate:
    p = hits / samples
    return FractionEstimate(
        n=n,
        samples=samples,
        hits=hits,
        estimate=p,
        stderr=(p * (1 - p) / samples) ** 0.5,
    )


def estimate_fraction(
    n: int,
    samples: int,
    burn_in: Optional[int] = None,
    thinning: Optional[int] = None,
    rng_seed: int = 0,
    collect=None,
) -> FractionEstimate:
    """Estimate the fraction of valid digraphs that are bitournaments.

    Runs one chain from the transitive tournament (itself a bitournament,
    so the burn-in has to erase the biased start), then records the
    bitournament indicator every ``thinning`` steps.  Defaults: burn-in
    50 * C(n, 2) steps, thinning C(n, 2) steps.  ``collect``, if given, is
    called with each recorded digraph (used for trace output).
    """
    if samples < 1:
        raise RangeError(f"need at least one sample, got {samples}")
    m = max(1, n * (n - 1) // 2)
    if burn_in is None:
        burn_in = 50 * m
    if thinning is None:
        thinning = m
    if burn_in < 0 or thinning < 1:
        raise RangeError("burn-in must be >= 0 and thinning >= 1")
    st = new_chain(n, rng_seed)
    for _ in range(burn_in):
        st = mcmc_step(st)
    hits = 0
    for _ in range(samples):
        for _ in range(thinning):
            st = mcmc_step(st)
        if is_bitournament(st.current):
            hits += 1
        if collect is not None:
            collect(st.current)
    return _make_estimate(n, samples, hits)


def estimate_fraction_rejection(
    n: int,
    samples: int,
    rng_seed: int = 0,
    cap: int = REJECTION_CAP,
    collect=None,
) -> FractionEstimate:
    """Exact-uniform counterpart of :func:`estimate_fraction` for tiny n."""
    if samples < 1:
        raise RangeError(f"need at least one sample, got {samples}")
    g = np.random.default_rng(rng_seed)
    hits = 0
    for _ in range(samples):
        d = rejection_sample(n, g, cap=cap)
        if is_bitournament(d):
            hits += 1
        if collect is not None:
            collect(d)
    return _make_estimate(n, samples, hits)
