#!/usr/bin/env python3
"""Standalone entry point for the backend comparison benchmark.

Usage: python benchmarks/bench_backends.py [degree]   (default 6)
"""

from snhecke.bench import main

if __name__ == "__main__":
    main()
