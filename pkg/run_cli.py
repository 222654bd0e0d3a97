#!/usr/bin/env python
"""Script to run the curve-h1 command line with proper path setup."""

import sys
from pathlib import Path

# Add the project root BEFORE any imports
root_dir = Path(__file__).parent
sys.path.insert(0, str(root_dir))

if __name__ == "__main__":
    from src.cli.main import main

    sys.exit(main())
