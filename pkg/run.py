#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    run
    ~~~

    command-line entrypoint, see forcesrv/cli.py
"""

import sys

from forcesrv.cli import main

if __name__ == '__main__':
    sys.exit(main())
