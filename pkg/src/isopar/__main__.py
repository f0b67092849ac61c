import sys

from isopar.cli import main

sys.exit(main())
