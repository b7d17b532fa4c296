from networkx.algorithms.isomorphism import categorical_node_match
import networkx as nx

from .base import ResolutionData

_NODE_LABELS = ["kind", "m", "a", "self_int"]

def milnor_number(res: ResolutionData) -> int:
    """mu of an isolated germ from its resolution: the Milnor fibre has Euler
    characteristic sum of m_i (2 - valence_i) over the exceptional curves."""
    exceptional = res.exceptional
    if not exceptional:
        if len(res.non_exceptional) > 1:
            raise ValueError("branches meet at the origin, but there are no exceptional curves")
        return 0
    euler = sum(c.m * (2 - len(res.neighbours(c.id))) for c in exceptional)
    return 1 - euler

def delta_invariant(res: ResolutionData) -> int:
    if res.delta is not None:
        return res.delta
    if not res.is_reduced:
        raise ValueError("delta is only defined here for reduced germs")
    twice = milnor_number(res) + res.branches - 1
    if twice % 2:
        raise ValueError(f"mu + r - 1 = {twice} is odd, resolution data is inconsistent")
    return twice // 2

def same_resolution(first: ResolutionData, second: ResolutionData) -> bool:
    """Whether the two have the same labelled dual graph, ignoring how the
    components happen to be named."""
    return nx.is_isomorphic(
        first.graph(),
        second.graph(),
        node_match=categorical_node_match(_NODE_LABELS, [None] * len(_NODE_LABELS)),
    )
