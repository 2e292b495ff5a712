"""# descensus.utilities.logger

Logging utilities.
"""

__all__ = ["LOGGER", "default_level", "get_child", "get_logger"]

from logging                import getLogger, Formatter, Logger, StreamHandler
from logging.handlers       import RotatingFileHandler
from os                     import getenv, makedirs
from sys                    import stdout

# Root logger; usable before get_logger() is called (library & test use).
LOGGER:         Logger =    getLogger("descensus")

def default_level() -> str:
    """# Default Logging Level.

    ## Returns:
        * str:  Level named by the HIL_LOG environment variable, or "INFO".
    """
    return getenv("HIL_LOG", "INFO").upper()

def get_logger(
    logger_name:    str =   "descensus",
    logging_level:  str =   None,
    logging_path:   str =   "logs"
) -> Logger:
    """# Initialize Logger.
    
    Initialize the application logger with configuration provided. Handlers are attached once; 
    repeated calls only adjust the level.

    ## Args:
        * logger_name   (str, optional):    Name attributed to logger object. Defaults to 
                                            "descensus".
        * logging_level (str, optional):    Minimum logging level (DEBUG < INFO < WARNING < ERROR < 
                                            CRITICAL). Defaults to $HIL_LOG or "INFO".
        * logging_path  (str, optional):    Path at which logs will be written. Defaults to "logs".

    ## Returns:
        * Logger:   Logger object, initialized with provided parameters.
    """
    # Declare globals.
    global LOGGER

    # Initialize logger.
    LOGGER =                                getLogger(name = logger_name)

    # Set logging level.
    LOGGER.setLevel(level = logging_level or default_level())
    
    # Handlers are only attached on first initialization.
    if LOGGER.handlers: return LOGGER
    
    # Ensure that logging path exists.
    makedirs(name = logging_path, exist_ok = True)

    # Define console handler.
    stdout_handler: StreamHandler =         StreamHandler(
                                                stream =        stdout
                                            )

    # Define file handler.
    file_handler:   RotatingFileHandler =   RotatingFileHandler(
                                                filename =      f"{logging_path}/{logger_name}.log",
                                                maxBytes =      1048576,
                                                backupCount =   10
                                            )
    
    # Define formats for handlers.
    stdout_handler.setFormatter(Formatter("%(levelname)s | %(name)s | %(message)s"))
    file_handler.setFormatter(Formatter("%(asctime)s | %(levelname)s | %(name)s | %(message)s"))
    
    # Add handlers to logger.
    LOGGER.addHandler(hdlr = stdout_handler)
    LOGGER.addHandler(hdlr = file_handler)
    
    # Return logger object.
    return LOGGER
    
def get_child(
    logger_name:    str
) -> Logger:
    """# Initialize Child Logger.
    
    Declares a logger child descendent of root logger.

    ## Args:
        * logger_name   (str):  Name attributed to child logger.

    ## Returns:
        * Logger:   Child logger.
    """
    return LOGGER.getChild(logger_name)
