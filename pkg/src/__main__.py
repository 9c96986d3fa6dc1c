#!/usr/bin/env python3
"""
fmre CLI
Run with: python -m src <command> [options]
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
