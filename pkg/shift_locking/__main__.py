# -*- coding: utf-8 -*-
"""
@file
@brief Runs the command line, see :mod:`shift_locking.cli.main`.
"""
import sys
from shift_locking.cli import main

if __name__ == "__main__":
    sys.exit(main())
