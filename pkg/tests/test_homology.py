from itertools import combinations
from math import comb

import pytest

from edgeideals import (GF2, GF3, Q, edge_ideal, face_counts, family,
                        hochster_betti, independence_complex, parse_field,
                        reduced_homology_ranks, reg_pd, simplicial_complex,
                        squarefree_ideal)
from edgeideals.bitsets import mask_of


def test_homology_of_standard_complexes():
    hollow_triangle = simplicial_complex(3, [0b011, 0b101, 0b110])
    assert reduced_homology_ranks(hollow_triangle) == {-1: 0, 0: 0, 1: 1}

    two_points = simplicial_complex(2, [0b01, 0b10])
    assert reduced_homology_ranks(two_points) == {-1: 0, 0: 1}

    empty = simplicial_complex(3, [0])
    assert reduced_homology_ranks(empty) == {-1: 1}

    void = simplicial_complex(3, [], is_void=True)
    assert reduced_homology_ranks(void) == {}

    full = simplicial_complex(3, [0b111])
    assert reduced_homology_ranks(full) == {-1: 0, 0: 0, 1: 0, 2: 0}

    sphere = simplicial_complex(4, [0b0111, 0b1011, 0b1101, 0b1110])
    assert reduced_homology_ranks(sphere) == {-1: 0, 0: 0, 1: 0, 2: 1}
    assert reduced_homology_ranks(sphere, Q) == {-1: 0, 0: 0, 1: 0, 2: 1}


# Six-vertex triangulation of the real projective plane: its first and
# second homology vanish over the rationals and over GF(3) but not over
# GF(2), which pins down both the field plumbing and the boundary signs.
_PROJECTIVE_PLANE = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
                     (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]


def test_projective_plane_triangulation_is_well_formed():
    assert len(_PROJECTIVE_PLANE) == 10
    edge_use = {}
    for tri in _PROJECTIVE_PLANE:
        for e in combinations(tri, 2):
            edge_use[e] = edge_use.get(e, 0) + 1
    assert len(edge_use) == 15
    assert all(count == 2 for count in edge_use.values())
    # Euler characteristic 6 - 15 + 10 = 1
    assert 6 - len(edge_use) + len(_PROJECTIVE_PLANE) == 1


def test_projective_plane_homology_depends_on_characteristic():
    c = simplicial_complex(6, [mask_of(t) for t in _PROJECTIVE_PLANE])
    assert reduced_homology_ranks(c, GF2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert reduced_homology_ranks(c, Q) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology_ranks(c, GF3) == {-1: 0, 0: 0, 1: 0, 2: 0}


def test_face_counts():
    c = independence_complex(family("cycle:4"))
    assert face_counts(c) == {-1: 1, 0: 4, 1: 2}
    assert face_counts(simplicial_complex(2, [], is_void=True)) == {}


def test_euler_poincare(graphs_through_5):
    for g in graphs_through_5:
        c = independence_complex(g)
        faces = face_counts(c)
        for field in (GF2, Q):
            ranks = reduced_homology_ranks(c, field)
            chi_faces = sum((-1) ** d * k for d, k in faces.items())
            chi_ranks = sum((-1) ** d * r for d, r in ranks.items())
            assert chi_faces == chi_ranks


def test_hochster_frozen_tables():
    k2 = hochster_betti(edge_ideal(family("complete:2")))
    assert k2.entries == {(0, 0): 1, (1, 2): 1}
    assert k2.field_tag == "gf2"

    c4 = hochster_betti(edge_ideal(family("cycle:4")))
    assert c4.entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    assert c4.totals() == {0: 1, 1: 4, 2: 4, 3: 1}
    assert (c4.reg(), c4.pd()) == (1, 3)

    c5 = hochster_betti(edge_ideal(family("cycle:5")))
    assert c5.totals() == {0: 1, 1: 5, 2: 5, 3: 1}
    assert (c5.reg(), c5.pd()) == (2, 3)

    zero = hochster_betti(squarefree_ideal(3, []))
    assert zero.entries == {(0, 0): 1}
    assert (zero.reg(), zero.pd()) == (0, 0)


def test_hochster_rejects_bad_input():
    with pytest.raises(ValueError):
        hochster_betti(squarefree_ideal(2, [0]))
    with pytest.raises(ValueError):
        hochster_betti(squarefree_ideal(13, [0b11]))


def test_complete_graph_betti_closed_form():
    for n in range(3, 7):
        table = hochster_betti(edge_ideal(family(f"complete:{n}")))
        expect = {(0, 0): 1}
        for i in range(1, n):
            expect[(i, i + 1)] = i * comb(n, i + 1)
        assert table.entries == expect


def test_cross_field_agreement(graphs_through_5):
    for g in graphs_through_5:
        ideal = edge_ideal(g)
        t2 = hochster_betti(ideal, GF2)
        t3 = hochster_betti(ideal, GF3)
        tq = hochster_betti(ideal, Q)
        assert t2.entries == t3.entries == tq.entries


def test_large_prime_field_matches_rationals():
    ideal = edge_ideal(family("cycle:5"))
    big = parse_field("gf1009")
    assert hochster_betti(ideal, big).entries == hochster_betti(ideal, Q).entries


def test_parse_field():
    assert parse_field("gf2") == GF2
    assert parse_field("GF3") == GF3
    assert parse_field(" q ") == Q
    assert parse_field("rationals") == Q
    assert parse_field("gf7").tag == "gf7"
    for bad in ("gf4", "gf1", "gf0", "z5", "gfx", "gf2147483659"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_reg_pd_frozen():
    assert reg_pd(family("cycle:4")) == (1, 3)
    assert reg_pd(family("complete:2")) == (1, 1)
    assert reg_pd(family("cycle:5")) == (2, 3)
    assert reg_pd(family("path:3")) == (1, 2)
    assert reg_pd(family("edgeless:3")) == (0, 0)
