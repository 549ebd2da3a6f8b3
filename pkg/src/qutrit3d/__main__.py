"""Allow `python -m qutrit3d`."""

import sys

from .cli import main

sys.exit(main())
