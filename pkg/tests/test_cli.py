from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from ramaudit.audit import shipped_scenario_path
from ramaudit.cli import main
from scenario_tools import mutate


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_run_shipped_by_name_and_path():
    code, out, _ = call("run", "j032")
    assert code == 0 and out.count(" PASS ") == 9
    code, out2, _ = call("run", str(shipped_scenario_path("j032")), "--grh")
    assert code == 0 and out2 == out


def test_run_machine_format():
    code, out, _ = call("run", "j049", "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["verdict"] == "PASS"
    assert doc["assumptions"] == {"odlyzko": "as-declared"}


def test_run_unconditional_only_fails_grh_checks():
    code, out, _ = call("run", "j032", "--unconditional-only")
    assert code == 1 and "verdict=FAIL" in out


def test_run_mutant_exit_one(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(mutate("j032", "checks", "R_root_disc", ("expect", "2"), "240/96"), indent=2))
    code, out, _ = call("run", str(path))
    assert code == 1 and "CHECK R_root_disc FAIL" in out


def test_run_schema_error_exit_two(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n "schema_version": 1\n}\n')
    code, _, err = call("run", str(path))
    assert code == 2 and "line" in err


def test_custom_odlyzko_table(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("grh 1 1 1\ngrh 2 2 1\nunconditional 1 1 1\nunconditional 2 2 1\n")
    code, out, _ = call("odlyzko", "--delta", "2:1/2", "--odlyzko-table", str(path))
    assert code == 0 and "max_degree=2" in out
    code, out, _ = call("run", "j032", "--odlyzko-table", str(path))
    assert code == 1


def test_herbrand():
    code, out, _ = call("herbrand", "--orders", "24,12,4,4,4", "--at", "4", "--inverse", "1/2")
    assert code == 0
    assert "phi(4)=1" in out and "psi(1/2)=1" in out and "u_max=1" in out and "different=43/24" in out
    assert call("herbrand", "--orders", "4,3")[0] == 2
    assert call("herbrand", "--orders", "a,b")[0] == 2


def test_odlyzko():
    code, out, _ = call("odlyzko", "--delta", "2:5/2,3:3/2", "--mode", "grh")
    assert code == 0 and "max_degree=1095" in out


def test_newform_commands():
    code, out, _ = call("newform-level", "--p", "2", "--n", "5", "--case", "irr")
    assert code == 0 and out.strip() == "u=3/2"
    code, out, _ = call("newform-level", "--p", "3", "--n", "4", "--case", "dec", "--a-chi", "4")
    assert out.strip() == "u=3"
    assert call("newform-level", "--p", "3", "--n", "4", "--case", "dec", "--a-chi", "1")[0] == 2
    code, out, _ = call("newform-table")
    assert code == 0 and "32A u=3/2" in out and "cutoff p=3 ell=2" in out


def test_modrep_facts():
    code, out, _ = call("modrep", "facts", "SH16")
    assert code == 0
    assert "classes=1x1 1x2 4x2 2x4 4x4 2x8 2x8" in out
    assert "degrees_F3=[1, 1, 1, 1, 2, 2, 2]" in out
    assert call("modrep", "facts", "XX")[0] == 2


def test_conductor_cases():
    code, out, _ = call("conductor", "cases", "--c", "2", "--require-u-positive")
    assert code == 0 and out.splitlines()[0] == "u=1 t=0 delta=0"


def test_usage_errors():
    assert call()[0] == 2
    assert call("bogus")[0] == 2
    assert call("run", "j032", "--grh", "--unconditional-only")[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramaudit", "run", "conductors"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict=PASS" in proc.stdout
