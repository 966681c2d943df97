import sys

from mapenum.cli import main

sys.exit(main())
