import sys

from .coxcli import main

sys.exit(main())
