import sys

from crand.cli import main

sys.exit(main())
