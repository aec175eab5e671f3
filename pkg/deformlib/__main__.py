import sys

from deformlib.cli import main

sys.exit(main())
