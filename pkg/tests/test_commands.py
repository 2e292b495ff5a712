"""# descensus.tests.test_commands

Command line: exit codes and the artifacts each command writes.
"""

from json           import loads

from pytest         import fixture, raises

from harness        import dump_config
from main           import main

@fixture
def logs(tmp_path) -> list:
    return ["--logging-path", str(tmp_path / "logs")]

@fixture
def hover_file(tmp_path, hover_config) -> str:
    path =  tmp_path / "hover.json"
    dump_config(hover_config, path)
    return str(path)

# RENDER ===========================================================================================

def test_render_with_overlay(tmp_path, logs):
    out =   tmp_path / "render"

    assert main(logs + ["render", "--out", str(out), "--altitude", "7", "--overlay"]) == 0

    for name in ("frame.pgm", "overlay.png", "detection.json", "manifest.json"):
        assert (out / name).is_file()

    manifest =  loads((out / "manifest.json").read_text())

    assert manifest["command"] == "render"
    assert manifest["artifacts"]["overlay"] == "overlay.png"
    assert manifest["arguments"]["altitude"] == 7.0

def test_render_png(tmp_path, logs):
    out =   tmp_path / "render"

    assert main(logs + ["render", "--out", str(out), "--format", "png"]) == 0
    assert (out / "frame.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

def test_render_records_seed(tmp_path, logs):
    out =   tmp_path / "render"

    assert main(logs + ["render", "--out", str(out), "--seed", "5"]) == 0
    assert loads((out / "manifest.json").read_text())["master_seed"] == 5

def test_render_has_no_transport(tmp_path, logs):
    with raises(SystemExit):
        main(logs + ["render", "--out", str(tmp_path / "render"), "--transport", "tcp"])

def test_render_at_ground_level_fails(tmp_path, logs):
    assert main(logs + ["render", "--out", str(tmp_path / "render"), "--altitude", "0.01"]) == 1

def test_malformed_config_fails(tmp_path, logs):
    config =    tmp_path / "broken.json"
    config.write_text("{\"trial\": ")

    assert main(logs + ["render", "--config", str(config), "--out", str(tmp_path / "render")]) == 1

def test_missing_config_fails(tmp_path, logs):
    assert main(logs + ["trial", "--config", str(tmp_path / "absent.json"), "--out", str(tmp_path / "trial")]) == 1

# TRIAL ============================================================================================

def test_failed_trial_writes_artifacts(tmp_path, logs, hover_file):
    out =   tmp_path / "trial"

    assert main(logs + ["trial", "--config", hover_file, "--out", str(out), "--dump-frames", "--trajectory"]) == 2

    result =    loads((out / "trial.json").read_text())

    assert (result["outcome"], result["reason"], result["periods"]) == ("Failure", "Timeout", 20)
    assert len(list((out / "frames").glob("frame_*.pgm"))) == 20
    assert (out / "frames" / "frame_00000.pgm").is_file()
    assert (out / "trajectory.csv").read_text().startswith("time,")
    assert loads((out / "manifest.json").read_text())["master_seed"] == 3

def test_trial_seed_override(tmp_path, logs, hover_file):
    out =   tmp_path / "trial"

    main(logs + ["trial", "--config", hover_file, "--seed", "11", "--out", str(out)])

    assert loads((out / "trial.json").read_text())["seed"] == 11

# CAMPAIGN =========================================================================================

def test_campaign_needs_trials(tmp_path, logs, hover_file):
    assert main(logs + ["campaign", "--config", hover_file, "-n", "0", "--out", str(tmp_path / "campaign")]) == 1

def test_campaign_is_repeatable(tmp_path, logs, hover_file):
    first, second = tmp_path / "first", tmp_path / "second"

    assert main(logs + ["campaign", "--config", hover_file, "-n", "2", "--out", str(first)]) == 2
    assert main(logs + ["campaign", "--config", hover_file, "-n", "2", "-j", "2", "--out", str(second)]) == 2

    for name in ("report.json", "ending_types.txt", "landing_precision.txt", "landing_time.txt", "start_points.csv"):
        assert (first / name).read_text() == (second / name).read_text()

    report =    loads((first / "report.json").read_text())

    assert (report["n_trials"], report["success_count"]) == (2, 0)
    assert [result["seed"] for result in report["results"]] == [3, 4]
    assert (first / "start_points.csv").read_text().splitlines()[0] == "seed,north,east,altitude,yaw,outcome"

def test_campaign_repeats_from_manifest(tmp_path, logs, hover_file):
    first, second = tmp_path / "first", tmp_path / "second"

    main(logs + ["campaign", "--config", hover_file, "-n", "2", "--seed", "21", "--out", str(first)])
    main(logs + ["campaign", "--config", str(first / "manifest.json"), "--out", str(second)])

    assert (first / "report.json").read_text() == (second / "report.json").read_text()
    assert (first / "manifest.json").read_text() == (second / "manifest.json").read_text()
