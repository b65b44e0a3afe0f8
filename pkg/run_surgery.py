"""
Command-line entry point for the surgery toolkit.

Usage: python run_surgery.py group surgery --knot trefoil --framing 1 | python run_surgery.py group order
"""

from surgery.main import main

if __name__ == "__main__":
    main()
