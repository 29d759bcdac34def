#!/usr/bin/env python3
"""
Simple script to run the curve birationality CLI.
"""

if __name__ == "__main__":
    import sys

    from src.curve_birationality.cli import main

    sys.exit(main())
