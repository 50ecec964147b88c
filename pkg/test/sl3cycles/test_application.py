import json

import inject
import pytest

from main import main
from sl3cycles.app_controller import AppController
from sl3cycles.application import EXIT_INVARIANT_FAILED, EXIT_OK, EXIT_USAGE
from sl3cycles.report.incidents import drain


@pytest.fixture(autouse=True)
def fresh_application():
    inject.clear()
    AppController.reset()
    yield
    inject.clear()
    AppController.reset()
    drain()


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_stabilizer_of_interior_vertex(capsys):
    assert main(["stab", "--vertex", "3", "1", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["upper"] == {"u": 2, "v": 1, "w": 3}
    assert result["class"] == "interior"


def test_vertex_outside_sector_is_a_usage_error():
    assert main(["stab", "--vertex", "1", "2"]) == EXIT_USAGE


def test_missing_vertex_is_rejected_by_the_parser():
    with pytest.raises(SystemExit) as e:
        main(["link"])
    assert e.value.code == 2


def test_flat_edge_census(capsys):
    assert main(["flat-edges", "--imax", "9", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["flat_edges"][0] == [[1, 0], [1, 1]]
    assert len(result["flat_edges"]) == 4
    assert result["matches_eta"]


def test_heights(capsys):
    assert main(["heights", "--imax", "5", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["morse"]
    assert result["vertices"][0] == {"vertex": "(0,0)", "qsq": 0, "tie": 0, "h": 0}


def test_descending_link(capsys):
    assert main(["link", "--vertex", "4", "1", "--imax", "9", "--json"]) == EXIT_OK
    assert _json(capsys)["connected"]


def test_cycle(capsys):
    assert main(["cycle", "--n", "2", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["phi"] == "-2/1"
    assert result["closed"]
    assert len(result["words"]) == 8


def test_pairing(capsys):
    assert main(["pairing", "--imax", "9", "--nmax", "3", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["rank"] == 4
    assert [result["matrix"][k][k] for k in range(4)] == ["-2/1"] * 4


def test_pairing_beyond_window_is_a_usage_error():
    assert main(["pairing", "--imax", "9", "--nmax", "4"]) == EXIT_USAGE


def test_render_writes_file(tmp_path, capsys):
    output = tmp_path / "sector.svg"
    assert main(["render", "--imax", "9", "--out", str(output), "--json"]) == EXIT_OK
    assert _json(capsys)["highlighted"] == 4
    assert output.read_text().startswith("<?xml")


def test_failed_invariant_sets_exit_code(mocker):
    mocker.patch("sl3cycles.application.is_morse", return_value=False)
    assert main(["heights", "--imax", "3"]) == EXIT_INVARIANT_FAILED


def test_small_verification_run(capsys):
    assert main(["verify", "--imax", "9", "--nmax", "3", "--samples", "2", "--json"]) == EXIT_OK
    result = _json(capsys)
    assert result["parameters"]["n_max"] == 3
    assert {lemma["status"] for lemma in result["lemmas"]} <= {"pass", "flagged"}
