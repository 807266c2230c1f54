import sys

from raagcat.cli import main

sys.exit(main())
