import sys

from quartic.cli import main

sys.exit(main())
