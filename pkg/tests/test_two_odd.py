"""Tests for triangulated disks, strip constructions, and the two-odd-face law."""
from __future__ import annotations

import itertools

import pytest

from trivalent.two_odd import (
    DiskStructureError,
    StripConfig,
    TriangulatedDisk,
    boundary_attachment_count,
    boundary_count_rotations,
    build_strip_config,
    format_tri,
    parse_tri,
    shortest_vertex_walk,
    transport_along_triangles,
    transport_compatibility,
    verify_two_odd_law,
)
from conftest import make_corpus


SINGLE = TriangulatedDisk.from_triangles([(0, 1, 2)])
TWO_FAN = TriangulatedDisk.from_triangles([(0, 1, 2), (0, 2, 3)])


# --- disk validation ----------------------------------------------------------------


def test_single_triangle_disk():
    assert SINGLE.num_vertices == 3
    assert SINGLE.num_triangles == 1
    assert set(SINGLE.boundary_set) == {0, 1, 2}
    assert SINGLE.interior_vertices == ()


def test_two_triangle_fan():
    assert TWO_FAN.num_vertices == 4
    assert sorted(TWO_FAN.boundary_set) == [0, 1, 2, 3]
    assert TWO_FAN.shared_edge(0, 1) == (0, 2)


def test_disk_rejects_degenerate_triangles():
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 1)])
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([])
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 2), (2, 1, 0)])  # duplicate


def test_disk_rejects_overused_edge():
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 2), (0, 1, 3), (0, 1, 4)])


def test_disk_rejects_closed_surface():
    # boundary of a tetrahedron: every edge lies in two triangles
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles(
            [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        )


def test_disk_rejects_pinched_vertex():
    # two triangles meeting only at vertex 0
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 2), (0, 3, 4)])


def test_disk_rejects_bad_given_boundary():
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 2)], boundary=(0, 1))
    with pytest.raises(DiskStructureError):
        TriangulatedDisk.from_triangles([(0, 1, 2)], boundary=(0, 1, 2, 0))


def test_disk_accepts_given_boundary_rotation():
    disk = TriangulatedDisk.from_triangles([(0, 1, 2)], boundary=(1, 2, 0))
    assert disk.boundary == (1, 2, 0)


def test_degree_counts_distinct_neighbors():
    assert SINGLE.degree(0) == 2
    assert TWO_FAN.degree(0) == 3
    assert TWO_FAN.degree(2) == 3
    assert TWO_FAN.degree(1) == 2


# --- TRI text format ----------------------------------------------------------------


def test_tri_round_trip():
    for disk in (SINGLE, TWO_FAN, build_strip_config(StripConfig(2, 1, 3)).disk):
        text = format_tri(disk, comments=["round trip"])
        again = parse_tri(text)
        assert again.triangles == disk.triangles
        assert again.boundary == disk.boundary


def test_tri_header_shape():
    lines = format_tri(SINGLE).splitlines()
    assert lines[0] == "TRI 3"
    assert lines[-1].startswith("B ")


def test_parse_tri_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_tri("TRI 9\n0 1 2\nB 0 1 2\n")  # header count mismatch
    with pytest.raises(ValueError):
        parse_tri("0 1 2\nB 0 1 2\n")  # missing header
    with pytest.raises(ValueError):
        parse_tri("TRI 3\n0 1\nB 0 1 2\n")  # short triangle line


# --- transport on disks -------------------------------------------------------------


def test_transport_across_one_edge():
    colors = {0: 1, 1: 2, 2: 3}
    carried = transport_along_triangles(TWO_FAN, [0, 1], colors)
    # corners 0 and 2 keep their colors, the far corner takes the remainder
    assert carried == {0: 1, 2: 3, 3: 2}


def test_transport_round_trip_restores():
    colors = {0: 2, 1: 3, 2: 1}
    back = transport_along_triangles(TWO_FAN, [0, 1, 0], colors)
    assert back == colors


def test_transport_rejects_non_adjacent_step():
    disk = build_strip_config(StripConfig(1, 1, 0)).disk
    colors = dict(zip(disk.triangles[0], (1, 2, 3)))
    apart = next(
        t for t in range(1, disk.num_triangles) if disk.shared_edge(0, t) is None
    )
    with pytest.raises(ValueError):
        transport_along_triangles(disk, [0, apart], colors)


def test_transport_rejects_improper_colors():
    with pytest.raises(ValueError):
        transport_along_triangles(TWO_FAN, [0, 1], {0: 1, 1: 1, 2: 3})
    with pytest.raises(ValueError):
        transport_along_triangles(TWO_FAN, [0, 1], {0: 1, 1: 2, 3: 3})


# --- strip constructions ------------------------------------------------------------


def test_minimal_strip_disk():
    built = build_strip_config(StripConfig(1, 1, 0))
    disk = built.disk
    assert disk.num_vertices == 6
    assert disk.num_triangles == 6
    assert built.compatible
    assert built.far_hub_color == 2
    assert sorted(disk.interior_vertices) == [built.hub_u, built.hub_v]
    assert disk.degree(built.hub_u) == 3
    assert disk.degree(built.hub_v) == 3


def test_strip_hub_degrees():
    for m, n, length in ((2, 3, 0), (1, 2, 4), (3, 1, 6)):
        built = build_strip_config(StripConfig(m, n, length))
        disk = built.disk
        assert disk.degree(built.hub_u) == 2 * m + 1
        assert disk.degree(built.hub_v) == 2 * n + 1
        assert {built.hub_u, built.hub_v} <= set(disk.interior_vertices)


def test_strip_path_is_edge_adjacent():
    for config in (StripConfig(1, 1, 0), StripConfig(2, 1, 3), StripConfig(2, 2, 5)):
        built = build_strip_config(config)
        path = built.strip_path
        for a, b in zip(path, path[1:]):
            assert built.disk.shared_edge(a, b) is not None


def test_strip_compatibility_tracks_divisibility():
    for m, n, length in itertools.product((1, 2), (1, 2), range(0, 8)):
        built = build_strip_config(StripConfig(m, n, length))
        assert built.compatible == (length % 3 == 0)
        assert (built.far_hub_color == 2) == built.compatible


def test_strip_config_validation():
    with pytest.raises(ValueError):
        StripConfig(0, 1, 0)
    with pytest.raises(ValueError):
        StripConfig(1, 0, 2)
    with pytest.raises(ValueError):
        StripConfig(1, 1, -1)


# --- boundary attachment counts -----------------------------------------------------


def test_minimal_strip_boundary_count():
    built = build_strip_config(StripConfig(1, 1, 0))
    count = boundary_attachment_count(built.disk)
    assert count.total == 6
    assert len(count.odd_vertices) == 4
    assert count.run_lengths == (0, 0, 0, 0)


def test_compatible_strips_count_three_per_unit():
    for m, n, length in ((1, 1, 0), (2, 1, 3), (1, 3, 6), (2, 2, 3)):
        built = build_strip_config(StripConfig(m, n, length))
        assert built.compatible
        count = boundary_attachment_count(built.disk)
        assert count.total == 3 * (m + n + length // 3)


def test_boundary_count_requires_odd_vertices():
    with pytest.raises(DiskStructureError):
        boundary_attachment_count(SINGLE)  # all boundary degrees even


def test_boundary_count_rotations_cover_each_odd_vertex():
    built = build_strip_config(StripConfig(2, 1, 3))
    rotations = boundary_count_rotations(built.disk)
    base = boundary_attachment_count(built.disk)
    assert len(rotations) == len(base.odd_vertices)
    starts = {c.odd_vertices[0] for c in rotations}
    assert starts == set(base.odd_vertices)


def test_divisibility_is_rotation_invariant_even_when_totals_differ():
    # an incompatible strip where different starting corners give 7 and 8
    built = build_strip_config(StripConfig(1, 1, 1))
    totals = sorted(c.total for c in boundary_count_rotations(built.disk))
    assert totals == [7, 8]
    assert len({c.total % 3 == 0 for c in boundary_count_rotations(built.disk)}) == 1


def test_compatible_strip_totals_all_divisible():
    built = build_strip_config(StripConfig(2, 2, 6))
    for count in boundary_count_rotations(built.disk):
        assert count.total % 3 == 0


def test_first_odd_index_shifts_start():
    built = build_strip_config(StripConfig(2, 1, 3))
    base = boundary_attachment_count(built.disk, 0)
    shifted = boundary_attachment_count(built.disk, 1)
    assert shifted.odd_vertices[0] == base.odd_vertices[1]
    assert set(shifted.odd_vertices) == set(base.odd_vertices)


# --- the two-odd-face law on maps ---------------------------------------------------


def test_prism_two_odd_report(prism):
    report = verify_two_odd_law(prism)
    assert report.passed
    assert report.odd_faces == (0, 2)
    assert not report.odd_faces_adjacent
    assert report.nullity == 1
    assert report.coloring == (0, 1, 0, 1, 1)
    assert report.coloring_zero_on_odd
    assert str(report.class_count) == "2^2"
    assert report.expected_exponent == 2


def test_two_odd_law_rejects_wrong_parity_counts(cube, k4):
    with pytest.raises(ValueError) as err:
        verify_two_odd_law(cube)
    assert "0" in str(err.value)
    with pytest.raises(ValueError) as err:
        verify_two_odd_law(k4)
    assert "4" in str(err.value)


def test_two_odd_law_on_generated_maps():
    found = 0
    for pmap in make_corpus(120, seed=77, min_target=6, max_target=16):
        if len(pmap.face_parities().odd_faces) != 2:
            continue
        found += 1
        assert verify_two_odd_law(pmap).passed
    assert found >= 10


# --- transport compatibility between the two odd faces ------------------------------


def test_prism_transport_compatibility_all_walks(prism):
    face_a, face_b = prism.face_parities().odd_faces
    verts_a = sorted(prism.faces()[face_a].vertex_set)
    verts_b = sorted(prism.faces()[face_b].vertex_set)
    for start in verts_a:
        for end in verts_b:
            walk = shortest_vertex_walk(prism, start, end)
            assert transport_compatibility(prism, face_a, face_b, walk)


def test_transport_compatibility_is_walk_independent():
    for pmap in make_corpus(60, seed=78, min_target=6, max_target=14):
        parities = pmap.face_parities()
        if len(parities.odd_faces) != 2:
            continue
        face_a, face_b = parities.odd_faces
        verdicts = set()
        for start in sorted(pmap.faces()[face_a].vertex_set):
            for end in sorted(pmap.faces()[face_b].vertex_set):
                walk = shortest_vertex_walk(pmap, start, end)
                verdicts.add(transport_compatibility(pmap, face_a, face_b, walk))
        assert verdicts == {True}


def test_transport_compatibility_argument_checks(prism, cube):
    face_a, face_b = prism.face_parities().odd_faces
    with pytest.raises(ValueError):
        transport_compatibility(cube, 0, 1, [0])  # no odd faces at all
    with pytest.raises(ValueError):
        transport_compatibility(prism, 1, 3, [0])  # not the odd faces
    with pytest.raises(ValueError):
        transport_compatibility(prism, face_a, face_b, [])  # empty walk
    verts_a = sorted(prism.faces()[face_a].vertex_set)
    far = sorted(prism.faces()[face_b].vertex_set)[0]
    with pytest.raises(ValueError):
        # jumping straight across is not an edge step for some pair
        bad = None
        for start in verts_a:
            if far not in prism.neighbors(start):
                bad = [start, far, far]
                break
        if bad is None:
            raise ValueError("prism should have a non-adjacent cross pair")
        transport_compatibility(prism, face_a, face_b, bad)


def test_shortest_vertex_walk(prism):
    assert shortest_vertex_walk(prism, 2, 2) == (2,)
    walk = shortest_vertex_walk(prism, 0, 4)
    assert walk[0] == 0 and walk[-1] == 4
    for a, b in zip(walk, walk[1:]):
        assert b in prism.neighbors(a)
