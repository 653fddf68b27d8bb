import sys
from lmscl.cli import main

sys.exit(main())
