"""# descensus.commands.render

This package defines the frame rendering process.
"""

__all__ =   [
                # Entry point.
                "main",

                # Argument registration.
                "register_render_parser"
            ]

# Entry point.
from commands.render.__main__   import main

# Argument registration.
from commands.render.__args__   import register_render_parser
