import sys
from lgr.lgr_cli import main

sys.exit(main())
