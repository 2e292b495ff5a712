"""Logging banner."""

__all__ = ["BANNER", "VERSION"]

VERSION: str =  "0.1.0"

BANNER: str =   """
+==================================================================+
| ██████╗ ███████╗███████╗ ██████╗███████╗███╗   ██╗███████╗██╗   |
| ██╔══██╗██╔════╝██╔════╝██╔════╝██╔════╝████╗  ██║██╔════╝██║   |
| ██║  ██║█████╗  ███████╗██║     █████╗  ██╔██╗ ██║███████╗██║   |
| ██║  ██║██╔══╝  ╚════██║██║     ██╔══╝  ██║╚██╗██║╚════██║╚═╝   |
| ██████╔╝███████╗███████║╚██████╗███████╗██║ ╚████║███████║██╗   |
| ╚═════╝ ╚══════╝╚══════╝ ╚═════╝╚══════╝╚═╝  ╚═══╝╚══════╝╚═╝   |
| Landing-loop simulator                           Version: 0.1.0 |
+==================================================================+"""
