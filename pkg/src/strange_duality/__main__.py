import sys

from strange_duality.cli import main

sys.exit(main())
