#!/usr/bin/env python3

import sys
from hypolygons.hypolymin import main

sys.exit(main())
