import shutil
import subprocess
import sys
from pathlib import Path as FsPath

import pytest

from jps4grid import generate_rooms, parse_map
from jps4grid.cli import main
from jps4grid.harness import SpeedupRow, load_scen, read_records, read_speedup
from jps4grid.mapio import save_map

FIXTURES = FsPath(__file__).parent / "fixtures"


def test_solve(capsys):
    code = main(["solve", "--map", str(FIXTURES / "tiny.map"), "--start", "5,0",
                 "--goal", "0,3", "--print-path"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "length 8"
    assert out[1].startswith("expanded ")
    nodes = out[2].split()
    assert nodes[0] == "5,0" and nodes[-1] == "0,3" and len(nodes) == 9


def test_solve_unreachable(tmp_path, capsys):
    from jps4grid import GridMap
    save_map(GridMap.from_rows([".@.", "@@@", "..."]), tmp_path / "s.map")
    assert main(["solve", "--map", str(tmp_path / "s.map"), "--start", "0,0", "--goal", "2,2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "length unreachable"


def test_solve_blocked_start():
    assert main(["solve", "--map", str(FIXTURES / "tiny.map"), "--start", "2,0", "--goal", "0,0"]) == 1


def test_solve_missing_file(tmp_path):
    assert main(["solve", "--map", str(tmp_path / "none.map"), "--start", "0,0", "--goal", "0,0"]) == 1


def test_bad_coord():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--map", "x", "--start", "a", "--goal", "0,0"])
    assert exc.value.code == 2


def test_gen_empty_and_rooms(tmp_path):
    assert main(["gen", "empty", "--width", "5", "--height", "3", "--out", str(tmp_path / "e.map")]) == 0
    grid = parse_map((tmp_path / "e.map").read_bytes())
    assert (grid.width, grid.height) == (5, 3) and grid.cells.all()
    assert main(["gen", "rooms", "--width", "64", "--height", "64", "--room-size", "8",
                 "--seed", "5", "--out", str(tmp_path / "r.map")]) == 0
    assert parse_map((tmp_path / "r.map").read_bytes()) == generate_rooms(64, 64, 8, 5)


def test_gen_missing_size(tmp_path):
    with pytest.raises(SystemExit):
        main(["gen", "rooms", "--out", str(tmp_path / "r.map")])


def test_gen_problems(tmp_path):
    out = tmp_path / "p.scen"
    assert main(["gen", "problems", "--side", "10", "--per-length", "3", "--max-length", "5",
                 "--map-name", "e.map", "--out", str(out)]) == 0
    rows = load_scen(out)
    assert len(rows) == 15 and {r.map_name for r in rows} == {"e.map"}


def test_bench_and_report(tmp_path):
    shutil.copy(FIXTURES / "tiny.map", tmp_path / "tiny.map")
    runs = tmp_path / "runs.csv"
    assert main(["bench", "--scen", str(FIXTURES / "tiny.scen"), "--map-dir", str(tmp_path),
                 "--reps", "2", "--out", str(runs)]) == 0
    records = read_records(runs)
    assert len(records) == 3 * 2 * 2
    speed = tmp_path / "speed.csv"
    assert main(["report", "--in", str(runs), "--out", str(speed)]) == 0
    rows = read_speedup(speed)
    assert sum(r.problem_count for r in rows) == len({r.scenario_id for r in records if r.length is not None})


def test_bench_missing_map(tmp_path):
    assert main(["bench", "--scen", str(FIXTURES / "tiny.scen"), "--map-dir", str(tmp_path),
                 "--out", str(tmp_path / "o.csv")]) == 1


def test_report_bad_input(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("nonsense\n1,2\n")
    assert main(["report", "--in", str(bad), "--out", str(tmp_path / "o.csv")]) == 1


def test_verify(tmp_path, capsys):
    save_map(generate_rooms(40, 40, 8, 1), tmp_path / "r.map")
    assert main(["verify", "--map", str(tmp_path / "r.map"), "--trials", "30"]) == 0
    assert "30/30 trials agree" in capsys.readouterr().out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "jps4grid", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "solve" in r.stdout
