import sys
from pathlib import Path

# src layout: make the package importable without an install
_src = Path(__file__).resolve().parents[1] / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
