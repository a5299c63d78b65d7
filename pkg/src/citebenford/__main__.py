import sys

from citebenford.cli import main

sys.exit(main())
