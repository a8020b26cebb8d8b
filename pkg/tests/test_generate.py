import pytest

from kinner.generate import generate_drawable, generate_k_inner
from kinner.graph import inner_vertices, serialize_graph


def test_same_seed_same_graph():
    assert serialize_graph(generate_k_inner(11, 30, 4)) == serialize_graph(generate_k_inner(11, 30, 4))


def test_different_seeds_differ():
    assert serialize_graph(generate_k_inner(1, 30, 4)) != serialize_graph(generate_k_inner(2, 30, 4))


def test_outerplanar_request():
    g = generate_k_inner(1, 6, 0)
    assert g.n == 6 and inner_vertices(g) == set()


def test_inner_count_is_exact():
    g = generate_k_inner(7, 8, 2)
    assert len(inner_vertices(g)) == 2


@pytest.mark.parametrize("n,k", [(5, 0), (12, 3), (30, 6), (60, 10)])
def test_inner_count_across_sizes(n, k):
    for seed in range(5):
        assert len(inner_vertices(generate_k_inner(seed, n, k))) == k


def test_invalid_arguments():
    with pytest.raises(ValueError):
        generate_k_inner(0, 5, 3)
    with pytest.raises(ValueError):
        generate_k_inner(0, 2, 0)


def test_drawable_reports_seed():
    g, t, used = generate_drawable(4, 20, 3)
    assert used >= 4 and t.root == g.root and len(t.edges) == g.n - 1
