"""# descensus.commands.campaign.args

Argument definitions and parsing for the campaign command.
"""

__all__ = ["register_campaign_parser"]

from argparse           import _ArgumentGroup, ArgumentParser, _SubParsersAction

from commands.__args__  import add_run_arguments

def register_campaign_parser(
    parent_subparser:   _SubParsersAction
) -> None:
    """# Register Campaign Argument Parser.

    ## Args:
        * parent_subparser  (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    parent_subparser.add_parser(
        name =          "campaign",
        help =          "Run a Monte-Carlo landing campaign.",
        description =   """Repeat the landing from independently seeded random start points (trial i
                        uses master seed + i) and report ending types, landing precision and landing
                        time. Reports only depend on the master seed, whatever the number of
                        workers."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # RUN ==========================================================================================

    _run_:          _ArgumentGroup =    add_run_arguments(_parser_, out = "out/campaign")

    _run_.add_argument(
        "--jobs", "-j",
        dest =      "jobs",
        type =      int,
        default =   1,
        help =      """Trials run concurrently. Serial transports always run one at a time.
                    Defaults to 1."""
    )

    # CAMPAIGN =====================================================================================

    _campaign_:     _ArgumentGroup =    _parser_.add_argument_group(title = "Campaign")

    _campaign_.add_argument(
        "--trials", "-n",
        dest =      "trials",
        type =      int,
        default =   None,
        help =      """Number of trials. Defaults to the manifest's count when repeating a run,
                    otherwise 100."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
