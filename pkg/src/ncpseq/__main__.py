import sys

from ncpseq.cli import main

sys.exit(main())
