import random

import pytest

import _oracles as oracle
from edgeideals import (ShellingCertificate, VDLeaf, VDNode, build_graph,
                        family, independence_complex, is_shedding_vertex,
                        reducing_vertex, root_shedding_vertex, shellable,
                        shelling_bruteforce, simplicial_complex,
                        validate_shelling, validate_vertex_decomposition,
                        vertex_decomposable)
from edgeideals.bitsets import bits


def test_shedding_vertex_on_path():
    p4 = family("path:3")
    assert is_shedding_vertex(p4, 1)
    assert not is_shedding_vertex(p4, 0)
    k2 = family("complete:2")
    assert is_shedding_vertex(k2, 0) and is_shedding_vertex(k2, 1)
    with pytest.raises(ValueError):
        is_shedding_vertex(k2, 2)


def test_vertex_decomposable_frozen():
    cert = vertex_decomposable(family("path:3"))
    assert isinstance(cert, VDNode)
    assert root_shedding_vertex(cert) == 1

    assert vertex_decomposable(family("cycle:4")) is None
    assert vertex_decomposable(family("cycle:5")) is not None
    assert vertex_decomposable(family("capped_cycle:1")) is not None

    leaf = vertex_decomposable(family("edgeless:3"))
    assert leaf == VDLeaf("simplex")
    assert root_shedding_vertex(leaf) is None
    assert vertex_decomposable(build_graph(0, [])) == VDLeaf("empty")


def test_vertex_decomposition_cap():
    with pytest.raises(ValueError):
        vertex_decomposable(build_graph(17, []))


def test_vertex_decomposition_replay(graphs_through_5):
    for g in graphs_through_5:
        cert = vertex_decomposable(g)
        if cert is not None:
            assert validate_vertex_decomposition(g, cert)


def test_vertex_decomposition_rejects_tampering():
    p4 = family("path:3")
    cert = vertex_decomposable(p4)
    wrong_vertex = VDNode(0, cert.deletion, cert.link)
    assert not validate_vertex_decomposition(p4, wrong_vertex)
    swapped = VDNode(cert.vertex, cert.link, cert.deletion)
    assert not validate_vertex_decomposition(p4, swapped)
    assert not validate_vertex_decomposition(p4, VDLeaf("simplex"))
    assert not validate_vertex_decomposition(p4, VDLeaf("bogus"))


def test_shellable_frozen():
    cert = shellable(family("path:3"))
    assert cert is not None
    assert validate_shelling(family("path:3"), cert)

    assert shellable(family("cycle:4")) is None
    assert shelling_bruteforce(family("cycle:4")) is None

    hollow = simplicial_complex(3, [0b011, 0b101, 0b110])
    cert = shellable(hollow)
    assert cert is not None and validate_shelling(hollow, cert)


def test_single_facet_complexes_are_shellable():
    point = independence_complex(build_graph(1, []))
    assert shellable(point) == ShellingCertificate((1,))
    empty = simplicial_complex(2, [0])
    assert shellable(empty) == ShellingCertificate((0,))


def test_shelling_validation_rejects_bad_orders():
    c4 = independence_complex(family("cycle:4"))
    assert not validate_shelling(c4, ShellingCertificate((0b0101, 0b1010)))
    assert not validate_shelling(c4, ShellingCertificate((0b0101,)))
    p4 = family("path:3")
    cert = shellable(p4)
    assert not validate_shelling(p4, ShellingCertificate(cert.facets[:-1]))


def test_shellable_agrees_with_bruteforce_on_graphs(graphs_through_5):
    for g in graphs_through_5:
        via_quotients = shellable(g)
        via_orders = shelling_bruteforce(g)
        assert (via_quotients is None) == (via_orders is None)
        if via_quotients is not None:
            assert validate_shelling(g, via_quotients)
            assert validate_shelling(g, via_orders)


def test_shellable_agrees_with_bruteforce_on_random_complexes():
    rng = random.Random(11)
    for _ in range(60):
        ground = rng.randint(2, 5)
        raw = [rng.randrange(1, 1 << ground) for _ in range(rng.randint(1, 5))]
        c = simplicial_complex(ground, raw)
        via_quotients = shellable(c)
        via_orders = shelling_bruteforce(c)
        assert (via_quotients is None) == (via_orders is None)
        if via_quotients is not None:
            assert validate_shelling(c, via_quotients)
            assert validate_shelling(c, via_orders)
        perms = oracle.shellable_by_permutation(
            [set(bits(f)) for f in c.effective_facets()])
        assert perms == (via_quotients is not None)


def test_shelling_caps():
    too_many = simplicial_complex(25, [1 << v for v in range(25)])
    with pytest.raises(ValueError):
        shellable(too_many)
    dozen_plus = simplicial_complex(13, [1 << v for v in range(13)])
    with pytest.raises(ValueError):
        shelling_bruteforce(dozen_plus)


def test_reducing_vertex_frozen():
    assert reducing_vertex(family("cycle:5")) == (0, 2, 1)
    assert reducing_vertex(family("complete:2")) == (0, 1, 0)
    with pytest.raises(ValueError):
        reducing_vertex(build_graph(13, []))
