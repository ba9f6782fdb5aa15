#!/usr/bin/env python3
"""
LCAF toolkit - Main Entry Point

Computes the Longest Common Abelian Factor of two strings, cross-checks the
algorithms against a brute-force oracle and runs the row-count experiments.
"""
import sys
from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
