"""# descensus.commands.trial

This package defines the single-trial process.
"""

__all__ =   [
                # Entry point.
                "main",

                # Argument registration.
                "register_trial_parser"
            ]

# Entry point.
from commands.trial.__main__    import main

# Argument registration.
from commands.trial.__args__    import register_trial_parser
