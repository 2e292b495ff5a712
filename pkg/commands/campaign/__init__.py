"""# descensus.commands.campaign

This package defines the Monte-Carlo campaign process.
"""

__all__ =   [
                # Entry point.
                "main",

                # Argument registration.
                "register_campaign_parser"
            ]

# Entry point.
from commands.campaign.__main__ import main

# Argument registration.
from commands.campaign.__args__ import register_campaign_parser
