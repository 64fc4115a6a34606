from hypothesis import strategies as st

from lpaspec.graph import Edge, Graph


@st.composite
def graphs(draw, max_vertices=6, max_edges=9, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    names = [f"v{i}" for i in range(n)]
    m = draw(st.integers(0, max_edges))
    ends = draw(
        st.lists(
            st.tuples(st.sampled_from(names), st.sampled_from(names)), min_size=m, max_size=m
        )
    )
    return Graph(tuple(names), tuple(Edge(f"e{j}", s, r) for j, (s, r) in enumerate(ends)))


@st.composite
def comets(draw, max_cycle=3, max_tree=4):
    """A cycle plus tree vertices whose edges only point to earlier vertices."""
    k = draw(st.integers(1, max_cycle))
    t = draw(st.integers(0, max_tree))
    names = [f"c{i}" for i in range(k)] + [f"t{i}" for i in range(t)]
    edges = [Edge(f"m{i}", names[i], names[(i + 1) % k]) for i in range(k)]
    for j in range(t):
        me = k + j
        targets = draw(st.lists(st.integers(0, me - 1), min_size=1, max_size=3))
        edges += [Edge(f"x{j}_{a}", names[me], names[tg]) for a, tg in enumerate(targets)]
    order = draw(st.permutations(names))
    return Graph(tuple(order), tuple(edges))
