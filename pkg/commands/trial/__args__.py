"""# descensus.commands.trial.args

Argument definitions and parsing for the trial command.
"""

__all__ = ["register_trial_parser"]

from argparse           import _ArgumentGroup, ArgumentParser, _SubParsersAction

from commands.__args__  import add_run_arguments

def register_trial_parser(
    parent_subparser:   _SubParsersAction
) -> None:
    """# Register Trial Argument Parser.

    ## Args:
        * parent_subparser  (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    parent_subparser.add_parser(
        name =          "trial",
        help =          "Run one landing trial.",
        description =   """Fly one closed-loop landing from a seeded random start point and write its
                        result. Exits 0 when the drone lands, 2 when the trial fails."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # RUN ==========================================================================================

    add_run_arguments(_parser_, out = "out/trial")

    # ARTIFACTS ====================================================================================

    _artifacts_:    _ArgumentGroup =    _parser_.add_argument_group(title = "Artifacts")

    _artifacts_.add_argument(
        "--dump-frames",
        dest =      "dump_frames",
        action =    "store_true",
        default =   False,
        help =      """Write every camera frame sent to the device as frames/frame_#####.pgm."""
    )

    _artifacts_.add_argument(
        "--trajectory",
        dest =      "trajectory",
        action =    "store_true",
        default =   False,
        help =      """Write the per-period state and command as trajectory.csv."""
    )

    _artifacts_.add_argument(
        "--detections",
        dest =      "detections",
        action =    "store_true",
        default =   False,
        help =      """Write the device's per-frame detections as detections.jsonl (local devices
                    only)."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
