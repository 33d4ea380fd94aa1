import pytest

from palettebox.coloring import palette_summary


def palette_sets(coloring):
    """Distinct palettes of a coloring as a set of frozensets."""
    return set(palette_summary(coloring).palette_sets())


@pytest.fixture
def petersen():
    from palettebox.graphs import petersen_graph

    return petersen_graph()
