import sys

from clutterlab.cli import main

sys.exit(main())
