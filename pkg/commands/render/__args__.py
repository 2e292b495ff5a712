"""# descensus.commands.render.args

Argument definitions and parsing for the render command.
"""

__all__ = ["register_render_parser"]

from argparse           import _ArgumentGroup, ArgumentParser, _SubParsersAction

from commands.__args__  import add_run_arguments

def register_render_parser(
    parent_subparser:   _SubParsersAction
) -> None:
    """# Register Render Argument Parser.

    ## Args:
        * parent_subparser  (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    parent_subparser.add_parser(
        name =          "render",
        help =          "Render the camera frame of a drone pose.",
        description =   """Render what the downward camera sees from the given pose and, optionally,
                        overlay the figures and pose found by the detector."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # RUN ==========================================================================================

    add_run_arguments(_parser_, out = "out/render", transport = False)

    # POSE =========================================================================================

    _pose_:         _ArgumentGroup =    _parser_.add_argument_group(title = "Pose")

    _pose_.add_argument(
        "--north",
        dest =      "north",
        type =      float,
        default =   None,
        help =      """Drone north [m]. Defaults to the marker's north."""
    )

    _pose_.add_argument(
        "--east",
        dest =      "east",
        type =      float,
        default =   None,
        help =      """Drone east [m]. Defaults to the marker's east."""
    )

    _pose_.add_argument(
        "--altitude",
        dest =      "altitude",
        type =      float,
        default =   7.0,
        help =      """Drone altitude [m]; must exceed 0.05 m. Defaults to 7."""
    )

    _pose_.add_argument(
        "--yaw",
        dest =      "yaw",
        type =      float,
        default =   0.0,
        help =      """Drone yaw [rad]. Defaults to 0."""
    )

    # OUTPUT =======================================================================================

    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--format",
        dest =      "format",
        type =      str,
        choices =   ["pgm", "png"],
        default =   "pgm",
        help =      """Frame file format. Defaults to "pgm"."""
    )

    _output_.add_argument(
        "--overlay",
        dest =      "overlay",
        action =    "store_true",
        default =   False,
        help =      """Also write overlay.png with the detected figures, marker center and
                    heading."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
