#!/usr/bin/env python3
"""
braidkit CLI entry point.

This allows users to run:
    python -m braidkit [command]
"""

import sys

from braidkit.cli import main

if __name__ == "__main__":
    sys.exit(main())
