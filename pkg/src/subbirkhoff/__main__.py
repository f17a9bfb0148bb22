import sys

from subbirkhoff.cli import main

sys.exit(main())
