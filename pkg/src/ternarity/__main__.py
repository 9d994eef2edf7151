import sys

from ternarity.cli import main

sys.exit(main())
