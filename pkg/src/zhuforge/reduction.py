"""Ordering, normal forms, and failure-of-associativity detection.

The rewrite system itself lives in `engine`; this module exposes its
user-facing pieces (the pair ordering and `normal_form`) and implements
the detector for states witnessing that the stored commutators do not
satisfy the operator Jacobi identities.  Such witnesses seed the extra
Zhu-algebra relations in `zhu`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import Engine, FullTable, ReductionStrategy, complete_table, reducible_pair
from .terms import ONE, VACUUM, state_iadd, state_weight
from .va_calculus import commutator, evaluate, generated_span

REDUCIBLE = "reducible"
ORDERED = "ordered"


def mode_order(a, b, weights) -> str:
    """Classify the adjacent pair (a, b), read left to right.

    Returns "reducible" when the pair matches a rewrite pattern (and so
    would be rewritten by `normal_form`), "ordered" otherwise.
    """
    return REDUCIBLE if reducible_pair(a, b, weights) else ORDERED


def normal_form(s: dict, table: FullTable, strategy=None,
                convention=VACUUM) -> dict:
    """Reduce a state to its irreducible form under the pair ordering."""
    return table.engine.normal_form(s, convention, strategy)


@dataclass(frozen=True)
class JacobiDefect:
    """A nonzero value of  u^i_s u^j_m u^k - u^j_m u^i_s u^k - [u^i_s, u^j_m] u^k.

    `indices` is the defining tuple (i, s, j, m, k); `value` the reduced
    state.  `value_bracket_added` records the same expression with the
    bracket term added instead of subtracted (the two sign conventions in
    circulation differ only by that term, i.e. by 2 [u^i_s, u^j_m] u^k).
    Homogeneous of weight wt u^i + wt u^j + wt u^k - s - m - 2.
    """

    indices: tuple
    value: dict = field(compare=False)
    value_bracket_added: dict = field(compare=False)
    weight: int = 0


def _defect_value(engine: Engine, table: FullTable, i, s, j, m, k):
    gen = {((k, -1),): ONE}
    ab = engine.apply_mode((i, s), engine.apply_mode((j, m), gen))
    ba = engine.apply_mode((j, m), engine.apply_mode((i, s), gen))
    br = evaluate(commutator((i, s), (j, m), table), gen, table)
    delta = dict(ab)
    state_iadd(delta, ba, -ONE)
    state_iadd(delta, br, -ONE)
    plus = dict(delta)
    state_iadd(plus, br, 2 * ONE)
    return delta, plus


def c1_singular_elements(p, table: FullTable) -> list:
    """All essential Jacobi defects of the presentation.

    Enumerates every tuple (i, s, j, m, k) with s, m >= 0 whose result
    weight is nonnegative and whose operator pair (u^i_s, u^j_m) is in
    reducible position (the orientation in which the ambiguity actually
    arises during rewriting; the opposite orientation gives the same
    state up to sign).  Tuples are visited in lexicographic order, and a
    nonzero defect is kept only when its value is not already in the
    span generated by the previously kept ones -- scalar multiples,
    derivatives, and creation-mode images of known defects witness
    nothing new.
    """
    engine = table.engine
    weights = engine.weights
    ng = len(weights)
    wmax = max(weights)
    kept: list = []
    cache = {"n": -1, "w": -1, "spans": None}

    def redundant(value) -> bool:
        if not kept:
            return False
        w = state_weight(value, weights)
        if cache["n"] != len(kept) or cache["w"] < w:
            cache["spans"] = generated_span([d.value for d in kept], table,
                                            max(w, cache["w"]))
            cache["n"] = len(kept)
            cache["w"] = max(w, cache["w"])
        return cache["spans"][w].contains(value)

    for i in range(ng):
        for s in range(weights[i] + 2 * wmax - 1):
            for j in range(ng):
                for m in range(weights[i] + weights[j] + wmax - s - 1):
                    for k in range(ng):
                        if weights[i] + weights[j] + weights[k] - s - m - 2 < 0:
                            continue
                        if not reducible_pair((i, s), (j, m), weights):
                            continue
                        delta, plus = _defect_value(engine, table, i, s, j, m, k)
                        if not delta or redundant(delta):
                            continue
                        kept.append(JacobiDefect(
                            indices=(i, s, j, m, k),
                            value=delta,
                            value_bracket_added=plus,
                            weight=state_weight(delta, weights)))
    return kept


def is_nondegenerate(p, table: FullTable = None):
    """True iff every Jacobi defect vanishes; witnesses otherwise."""
    if table is None:
        table = complete_table(p)
    witnesses = c1_singular_elements(p, table)
    return (not witnesses), witnesses
