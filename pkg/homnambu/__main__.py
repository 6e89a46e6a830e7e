import sys

from homnambu.cli import main

sys.exit(main())
