import sys

from rainbowtri.cli import main

sys.exit(main())
