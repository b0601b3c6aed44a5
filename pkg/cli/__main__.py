import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.main import dispatch

sys.exit(dispatch())
