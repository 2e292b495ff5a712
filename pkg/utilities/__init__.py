"""# descensus.utilities

Utilities package.
"""

__all__ = ["BANNER", "VERSION", "default_level", "get_child", "get_logger"]

from utilities.banner       import BANNER, VERSION
from utilities.logger       import default_level, get_child, get_logger
