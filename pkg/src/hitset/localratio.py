"""Weight decomposition by repeated subtraction of good-gadget weights.

While some gadget embeds entirely on positive-weight vertices, subtract
the largest multiple of its weight map that keeps all weights
nonnegative.  Each step zeroes at least one vertex, so there are at most
|V| steps.  The zero-weight vertices collected at the end can join a
hitting set for free, and the positive residual contains no gadget copy.

The subtracted amounts certify a lower bound: any hitting set must carry
at least total/factor of each subtracted gadget's weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .copies import Embedding, EnumerationBudget, embeddings
from .errors import BudgetExceededError, VerificationError
from .graphs import WeightedGraph
from .patterns import GoodGraph


@dataclass(frozen=True)
class TraceStep:
    good_index: int
    embedding: Embedding
    scale: Fraction


@dataclass
class DecompositionTrace:
    """Full record of one decomposition run.

    The conservation identity holds exactly: the original weights equal
    ``final_weights`` plus the sum over steps of scale times the gadget
    weights pushed through the embedding.
    """

    steps: tuple[TraceStep, ...]
    final_weights: tuple[Fraction, ...]
    zero_set: frozenset[int]

    def dual_bound(self, goods: list[GoodGraph]) -> Fraction:
        """Lower bound on the optimum certified by the subtractions."""
        return sum(
            (
                st.scale * goods[st.good_index].total_weight / goods[st.good_index].factor
                for st in self.steps
            ),
            Fraction(0),
        )


def find_positive_copy(g: WeightedGraph, good: GoodGraph) -> Embedding | None:
    """First embedding of the gadget whose image has all weights positive."""
    allowed = frozenset(v for v in range(g.n) if g.weights[v] > 0)
    for emb in embeddings(g.graph, good.graph, allowed=allowed):
        return emb
    return None


def decompose_weights(
    g: WeightedGraph,
    goods: list[GoodGraph],
    budget: EnumerationBudget | None = None,
) -> DecompositionTrace:
    """Run the subtraction loop until no gadget sits on positive weights.

    Gadgets are tried in list order, embeddings in canonical order, so
    the trace is deterministic.  Callers are responsible for supplying
    verified gadgets (see ``oracle.verify_goodness``).
    """
    if not goods:
        raise ValueError("need at least one good graph")
    if budget is None:
        budget = EnumerationBudget()
    weights = list(g.weights)
    n = g.n
    steps: list[TraceStep] = []
    zero_count = sum(1 for w in weights if w == 0)
    while True:
        found = None
        allowed = frozenset(v for v in range(n) if weights[v] > 0)
        for gi, good in enumerate(goods):
            for emb in embeddings(g.graph, good.graph, allowed=allowed):
                found = (gi, good, emb)
                break
            if found:
                break
        if not found:
            break
        gi, good, emb = found
        if not budget.charge():
            raise BudgetExceededError(
                f"weight decomposition exceeded the budget of {budget.max_copies}"
            )
        touched = [
            (emb.mapping[x], good.weights[x])
            for x in range(good.graph.n)
            if good.weights[x] != 0
        ]
        scale = min(weights[gv] / kw for gv, kw in touched)
        if scale <= 0:
            raise VerificationError("subtraction scale must be positive")
        for gv, kw in touched:
            weights[gv] -= scale * kw
        steps.append(TraceStep(gi, emb, scale))
        new_zero = sum(1 for w in weights if w == 0)
        if new_zero <= zero_count:
            raise VerificationError("a step must zero at least one vertex")
        zero_count = new_zero
        if len(steps) > n:
            raise VerificationError("more decomposition steps than vertices")

    final = tuple(weights)
    # conservation identity, checked exactly on every run
    recon = list(final)
    for st in steps:
        good = goods[st.good_index]
        for x in range(good.graph.n):
            recon[st.embedding.mapping[x]] += st.scale * good.weights[x]
    if tuple(recon) != g.weights:
        raise VerificationError("weight conservation identity violated")

    zero = frozenset(v for v in range(n) if final[v] == 0)
    return DecompositionTrace(tuple(steps), final, zero)
