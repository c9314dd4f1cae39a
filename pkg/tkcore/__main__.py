import sys

from tkcore.main import main

sys.exit(main())
