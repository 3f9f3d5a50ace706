import sys
from pathlib import Path

# make helpers.py / oracles.py importable from test modules
sys.path.insert(0, str(Path(__file__).parent))
