import sys

from hypermaps.cli import main

sys.exit(main())
