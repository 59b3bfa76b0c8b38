import sys
from pathlib import Path

# make tests/oracle.py and tests/graphlib.py importable regardless of cwd
sys.path.insert(0, str(Path(__file__).parent))
