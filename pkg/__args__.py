"""# descensus.args

Descensus argument definitions & parsing.
"""

__all__ = ["parse_descensus_arguments"]

from argparse       import ArgumentParser, _ArgumentGroup, Namespace, _SubParsersAction
from typing         import List, Optional

from commands       import register_command_parsers
from utilities      import default_level

def parse_descensus_arguments(
    argv:   Optional[List[str]] =   None
) -> Namespace:
    """# Parse Descensus Arguments.

    This function should be called at the entry point of the Descensus application. The name space
    of argument keys and values that it provides will be passed/provided to the command entry
    points.

    ## Args:
        * argv  (List[str], optional):  Arguments to parse. Defaults to sys.argv[1:].

    ## Returns:
        * NameSpace:    Name space of parsed arguments and their values.
    """
    # Initialize primary parser
    _parser_:       ArgumentParser =    ArgumentParser(
        prog =          "descensus",
        description =   """Closed-loop simulator for vision-guided UAV landing: a simulated world
                        feeds altitude messages and camera frames to the landing software under test
                        over a byte link and applies the velocity commands it returns."""
    )

    # Initialize sub-parser
    _subparser_:    _SubParsersAction = _parser_.add_subparsers(
        dest =          "command",
        required =      True,
        help =          "Descensus commands."
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # LOGGING ======================================================================================
    _logging_:      _ArgumentGroup =    _parser_.add_argument_group(
        title =         "Logging",
        description =   "Logging configuration."
    )

    _logging_.add_argument(
        "--logging-level",
        type =          str.upper,
        choices =       ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NOTSET"],
        default =       default_level(),
        help =          """Minimum logging level (DEBUG < INFO < WARNING < ERROR < CRITICAL).
                        Defaults to $HIL_LOG, or "INFO"."""
    )

    _logging_.add_argument(
        "--logging-path",
        type =          str,
        default =       "logs",
        help =          """Path at which logs will be written. Defaults to "./logs/"."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+

    # Register command parsers.
    register_command_parsers(parent_subparser = _subparser_)

    # Parse arguments
    return _parser_.parse_args(argv)
