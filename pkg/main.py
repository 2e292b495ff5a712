"""# descensus.main

Descensus application driver.

Exit codes: 0 success, 1 configuration, transport or other operational error, 2 experiment failure.
"""

__all__ = ["main"]

from argparse   import Namespace
from logging    import Logger
from sys        import exit
from typing     import Callable, Dict, List, Optional

from __args__   import parse_descensus_arguments
from commands   import *
from harness    import ConfigurationError, TransportError
from utilities  import BANNER, get_logger

def main(
    argv:   Optional[List[str]] =   None
) -> int:
    """# Execute Command.

    ## Args:
        * argv  (List[str], optional):  Command line arguments. Defaults to sys.argv[1:].

    ## Returns:
        * int:  Exit code.
    """
    # Parse Descensus arguments.
    _arguments_:    Namespace =                 parse_descensus_arguments(argv)

    # Initialize logger.
    _logger_:       Logger =                    get_logger(
                                                    logger_name =   "descensus",
                                                    logging_level = _arguments_.logging_level,
                                                    logging_path =  _arguments_.logging_path
                                                )

    # Define mapping of commands to their respective entry points.
    _commands_:     Dict[str, Callable] =       {
                                                    "trial":    trial.main,
                                                    "campaign": campaign.main,
                                                    "render":   render.main
                                                }

    try:# Log banner
        _logger_.info(BANNER)

        # Execute command provided.
        return _commands_[_arguments_.command](**vars(_arguments_))

    # Operational errors get one diagnostic line.
    except (ConfigurationError, TransportError, OSError, ValueError) as e:
        _logger_.error(f"{type(e).__name__}: {e}")
        return 1

    # Catch wildcard errors
    except Exception as e:
        _logger_.critical(
            f"Unexpected error caught: {e}",
            exc_info = (_arguments_.logging_level == "DEBUG")
        )
        return 1

    # Exit gracefully
    finally:    _logger_.info("Exiting...")

if __name__ == "__main__": exit(main())
