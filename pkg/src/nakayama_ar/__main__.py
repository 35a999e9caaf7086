"""Entry point for running with `python -m nakayama_ar`."""

import sys

from nakayama_ar.main import main

if __name__ == "__main__":
    sys.exit(main())
