import sys

from landespin.cli import main

sys.exit(main())
