import sys

from bivinc.cli import main

sys.exit(main())
