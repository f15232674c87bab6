import sys
from pathlib import Path

# allow running the suite from a fresh checkout without installing
SRC = str(Path(__file__).resolve().parents[1] / "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)
