"""End-to-end smoke checks for the python bindings."""

import math
import os
import subprocess

import pytest

import proxregio


def test_generate_and_relations():
    scene = proxregio.Scene.generate(seed=3)
    ids = scene.region_ids()
    assert len(ids) == 12
    a, b = scene.overlapping_pairs[0]
    near = scene.near([a], [b])
    assert near["holds"] is True
    assert near["gap"] == pytest.approx(0.0)
    assert scene.strongly_near([a], [b])["holds"] is True
    assert scene.far([a], [b])["holds"] is False
    # The implication chain shows up in python too.
    for x, y in scene.overlapping_pairs:
        assert scene.near([x], [y])["holds"]
        assert scene.dnear([x], [y])["holds"]


def test_well_separated_pairs_are_far():
    scene = proxregio.Scene.generate(seed=3)
    a, b = scene.well_separated_pairs[0]
    assert scene.far([a], [b])["holds"] is True
    verdict = scene.strongly_far([a], [b])
    assert verdict["holds"] is True
    assert verdict["separator_count"] >= 1


def test_describe_and_classify():
    scene = proxregio.Scene.generate(seed=3)
    ids = scene.region_ids()
    desc = scene.describe(ids[0])
    assert len(desc) == 3  # color probes
    members = scene.classify(ids[0])
    assert ids[0] in members


def test_sew_produces_valid_complexes():
    scene = proxregio.Scene.generate(seed=3)
    a, b = scene.well_separated_pairs[0]
    result = scene.sew(a, b, k=2)
    assert result["valid"] is True
    assert result["bridges"] == 2
    assert result["path"][0] == a
    assert result["path"][-1] == b


def test_parallel_and_antipodal_error_paths():
    scene = proxregio.Scene.generate(seed=3)
    ids = scene.region_ids()
    verdict = scene.parallel(ids[0], ids[1], dx=1.0, dy=0.0)
    assert isinstance(verdict["holds"], bool)
    with pytest.raises(proxregio.ProxregioError):
        scene.antipodal("no-such-grid")


def test_scene_round_trip():
    scene = proxregio.Scene.generate(seed=7)
    text = scene.serialize()
    again = proxregio.Scene.parse(text)
    assert again.serialize() == text
    assert again.region_ids() == scene.region_ids()


def test_check_axioms_small_run_is_clean():
    report = proxregio.check_axioms(seed=5, trials=8)
    assert report["total_failures"] == 0
    assert report["requested_trials"] == 8
    assert len(proxregio.axiom_schema()) == 45


def test_roll_cylinder_exact():
    radius, lateral = proxregio.roll_cylinder(2.0, 3.0)
    assert lateral == 6.0
    assert radius == pytest.approx(2.0 / (2.0 * math.pi), abs=1e-15)


def test_render_svg_structure():
    scene = proxregio.Scene.generate(seed=3)
    svg = scene.render_svg()
    assert svg.startswith("<?xml")
    assert svg.count('class="region"') == 12


def test_run_command_det():
    args = ["relate", "--seed", "4", "--a", "r0", "--b", "r1"]
    text1, code1 = proxregio.run_command(args)
    text2, code2 = proxregio.run_command(args)
    assert text1 == text2
    assert code1 == code2


def test_cli_binary_matches_library_route():
    cli = os.environ.get("PROXREGIO_CLI")
    if not cli:
        pytest.skip("PROXREGIO_CLI not set")
    args = ["relate", "--seed", "4", "--a", "r0", "--b", "r1"]
    proc = subprocess.run([cli] + args, capture_output=True, text=True)
    text, code = proxregio.run_command(args)
    assert proc.stdout == text
    assert proc.returncode == code
