"""
Command-Line Runner

Entry point for running the toolkit from a source checkout without
installing the console script:

    python run_cli.py table1 --qmax 29
    python run_cli.py square --q 8 --class ord:9
    python run_cli.py verify --all-q-upto 27 --seed 1 --format json
"""

import sys
from pathlib import Path

# Make the src package importable when run from any directory
sys.path.insert(0, str(Path(__file__).resolve().parent))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
