"""# descensus.commands

This package defines the command processes: single trials, campaigns and frame rendering.
"""

__all__ =   [
                # Commands.
                "campaign",
                "render",
                "trial",

                # Parser registration.
                "register_command_parsers"
            ]

# Commands.
from commands                   import (
                                            campaign,
                                            render,
                                            trial
                                        )

# Parser registration.
from commands.__args__          import register_command_parsers
