"""# descensus.commands.args

This module handles the registration of command parsers and the run arguments they share.
"""

__all__ = ["add_run_arguments", "register_command_parsers"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def add_run_arguments(
    parser:     ArgumentParser,
    out:        str,
    transport:  bool =  True
) -> _ArgumentGroup:
    """# Add Run Arguments.

    Configuration, seed and output flags common to every command, plus the transport flag for
    commands that fly the drone.

    ## Args:
        * parser    (ArgumentParser):   Command parser.
        * out       (str):              Default output directory of the command.
        * transport (bool, optional):   Register --transport. Defaults to True.

    ## Returns:
        * _ArgumentGroup:   The "Run" argument group, for command-specific additions.
    """
    _run_:  _ArgumentGroup =    parser.add_argument_group(title = "Run")

    _run_.add_argument(
        "--config",
        dest =      "config",
        type =      str,
        default =   None,
        help =      """Configuration file (JSON), or the manifest.json of an earlier run to repeat
                    it. Defaults to built-in defaults."""
    )

    _run_.add_argument(
        "--seed",
        dest =      "seed",
        type =      int,
        default =   None,
        help =      """Seed overriding the configuration (master seed for campaigns)."""
    )

    _run_.add_argument(
        "--out",
        dest =      "out",
        type =      str,
        default =   out,
        help =      f"""Output directory. Defaults to "{out}"."""
    )

    if transport: _run_.add_argument(
        "--transport",
        dest =      "transport",
        type =      str,
        choices =   ["inproc", "tcp", "serial"],
        default =   None,
        help =      """Transport joining the station to the device under test, overriding the
                    configuration."""
    )

    return _run_

def register_command_parsers(
    parent_subparser:   _SubParsersAction
) -> None:
    """# Register Command Parsers.

    ## Args:
        * parent_subparser  (_SubParsersAction): Parent's sub-parsers object.
    """
    # Deferred command parser imports.
    from commands.campaign  import register_campaign_parser
    from commands.render    import register_render_parser
    from commands.trial     import register_trial_parser

    # Register command parsers.
    register_trial_parser(parent_subparser =    parent_subparser)
    register_campaign_parser(parent_subparser = parent_subparser)
    register_render_parser(parent_subparser =   parent_subparser)
