import pytest

from supersnark.multipole import make_multipole
from supersnark.oracle import find_normal_coloring
from supersnark.petersen import petersen_graph, petersen_superedge


@pytest.fixture(scope="session")
def p10():
    return petersen_graph()


@pytest.fixture(scope="session")
def layout():
    return petersen_superedge()


@pytest.fixture(scope="session")
def base_sigma(p10):
    sigma = find_normal_coloring(p10)
    assert sigma is not None
    return sigma


@pytest.fixture(scope="session")
def k4():
    verts = ["v1", "v2", "v3", "v4"]
    edges = [(f"{a}-{b}", a, b) for a, b in
             (("v1", "v2"), ("v1", "v3"), ("v1", "v4"),
              ("v2", "v3"), ("v2", "v4"), ("v3", "v4"))]
    return make_multipole(verts, edges)


@pytest.fixture(scope="session")
def outer_cycle():
    return tuple(f"o{k}" for k in range(5))


@pytest.fixture(scope="session")
def six_cycle():
    # a 6-cycle of the Petersen graph
    return ("o0", "o1", "i1", "i4", "i2", "i0")


def tietze_graph():
    """The Petersen graph with one vertex replaced by a triangle."""
    p10 = petersen_graph()
    verts = [v for v in p10.vertices if v != "o0"] + ["t1", "t2", "t3"]
    edges = [(e.id, e.u, e.v) for e in p10.edges if "o0" not in (e.u, e.v)]
    nbrs = [p10.edge(x).other("o0") for x in p10.elements_at("o0")]
    for k, w in enumerate(nbrs):
        edges.append((f"t{k + 1}-{w}", f"t{k + 1}", w))
    edges += [("t1-t2", "t1", "t2"), ("t2-t3", "t2", "t3"), ("t1-t3", "t1", "t3")]
    return make_multipole(verts, edges)


def blanusa_dot_product():
    """Dot product of two Petersen copies: an 18-vertex snark."""
    p10 = petersen_graph()
    verts = [f"a.{v}" for v in p10.vertices if v not in ("o0", "o1")]
    verts += [f"b.{v}" for v in p10.vertices]
    edges = []
    for e in p10.edges:
        if "o0" not in (e.u, e.v) and "o1" not in (e.u, e.v):
            edges.append((f"a.{e.id}", f"a.{e.u}", f"a.{e.v}"))
    for e in p10.edges:
        if e.id not in ("o0-o1", "o2-o3"):
            edges.append((f"b.{e.id}", f"b.{e.u}", f"b.{e.v}"))
    edges += [("j1", "a.o4", "b.o0"), ("j2", "a.i0", "b.o1"),
              ("j3", "a.o2", "b.o2"), ("j4", "a.i1", "b.o3")]
    return make_multipole(verts, edges)
