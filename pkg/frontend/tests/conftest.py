import os
import subprocess
import sys
from pathlib import Path

import pytest

FRONTEND_DIR = Path(__file__).resolve().parents[1]
REPO_ROOT = FRONTEND_DIR.parent
sys.path.insert(0, str(FRONTEND_DIR))


def generate_csv(cli_args, out_path):
    """Produce a CSV through the solver's command line, the only interface
    this component consumes."""
    env = dict(os.environ, PYTHONPATH=str(REPO_ROOT / "src"))
    subprocess.run(
        [sys.executable, "-m", "phifact", *cli_args, "--out", str(out_path)],
        check=True,
        capture_output=True,
        cwd=str(REPO_ROOT),
        env=env,
    )
    return out_path


@pytest.fixture(scope="session")
def pairs_csv_n100(tmp_path_factory):
    path = tmp_path_factory.mktemp("csv") / "pairs_n100.csv"
    return generate_csv(["fig1", "--n", "100"], path)


@pytest.fixture(scope="session")
def diagonal_csv_500(tmp_path_factory):
    path = tmp_path_factory.mktemp("csv") / "diagonal_500.csv"
    return generate_csv(["fig2", "--max", "500"], path)
