"""Static product-line analysis workbench.

Extracts presence conditions from C preprocessor code, Kbuild makefiles and
DIMACS variability models, and runs composable analyses over them.
"""

import logging as _logging

__version__ = "0.1.0"

_logging.getLogger("splworkbench").addHandler(_logging.NullHandler())
