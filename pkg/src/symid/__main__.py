import sys

from symid.cli import main

sys.exit(main())
