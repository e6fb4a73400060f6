"""Entry point for running as module: python -m bayesarith"""

import sys

from bayesarith.cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
