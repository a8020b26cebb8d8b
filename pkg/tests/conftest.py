from pathlib import Path

import pytest

from kinner.graph import embedding_from_drawing, parse_embedded_graph
from kinner.goodtree import tree_from_edges

DATA = Path(__file__).parent / "data"


def load(name):
    return parse_embedded_graph((DATA / name).read_text())


@pytest.fixture
def graph_a():
    return load("instance_a.txt")


@pytest.fixture
def graph_b():
    return load("instance_b.txt")


# A reconstruction of the worked example with five covered inner leaves.
# Names map to ids in insertion order below.
FIG_COORDS = {
    "r": (0, 0), "a": (-4, 2), "a1": (-6, 5), "a2": (-7, 8), "v1": (-2, 2), "v2": (-1, 3),
    "b": (1, 4), "b1": (1, 8), "b2": (1, 11), "b3": (1, 14), "v3": (3, 7), "v4": (4, 6),
    "c": (9, 6), "v5": (10, 9), "c1": (13, 8),
}
FIG_TREE = [
    ("r", "a"), ("a", "a1"), ("a1", "a2"), ("r", "v1"), ("r", "v2"), ("r", "b"), ("b", "b1"),
    ("b1", "b2"), ("b2", "b3"), ("b", "v3"), ("b", "v4"), ("r", "c"), ("c", "v5"), ("c", "c1"),
]
FIG_CHORDS = {
    "e1": ("a", "v2"), "e2": ("a1", "v2"), "e3": ("a2", "v2"), "e4": ("a2", "b"),
    "e5": ("b1", "c"), "e6": ("b2", "c"), "e7": ("b3", "c1"),
}


class Fig:
    def __init__(self):
        self.id = {name: i for i, name in enumerate(FIG_COORDS, start=1)}
        self.name = {i: name for name, i in self.id.items()}
        edges = [(self.id[a], self.id[b]) for a, b in FIG_TREE + list(FIG_CHORDS.values())]
        coords = {self.id[k]: p for k, p in FIG_COORDS.items()}
        self.graph = embedding_from_drawing(edges, coords, self.id["r"])
        self.tree = tree_from_edges(self.graph, [(self.id[a], self.id[b]) for a, b in FIG_TREE])

    def edge(self, label):
        a, b = FIG_CHORDS[label]
        a, b = self.id[a], self.id[b]
        return (a, b) if a < b else (b, a)

    def names(self, ids):
        return sorted(self.name[i] for i in ids)


@pytest.fixture(scope="session")
def fig():
    return Fig()
