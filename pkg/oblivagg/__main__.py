import sys

from oblivagg.cli.main import main

sys.exit(main())
