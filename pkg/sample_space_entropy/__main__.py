"""Allow `python -m sample_space_entropy`."""

import sys

from sample_space_entropy.cli import main

sys.exit(main())
