"""Enable running the package with python -m dirac_landau_verify."""

import sys

from dirac_landau_verify.cli import main

if __name__ == "__main__":
    sys.exit(main())
