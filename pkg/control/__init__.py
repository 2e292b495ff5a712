"""# descensus.control

Proportional landing controller and its two-stage landing procedure.
"""

__all__ =   [
                "AltitudeFilter",
                "ControlOutput",
                "ControlParams",
                "Gains",
                "LandingStage",
                "PoseError",
                "advance_stage",
                "blind_descent_command",
                "compute_command",
                "hold_command",
                "pixel_to_metric"
            ]

from control.altitude_filter    import AltitudeFilter
from control.params             import ControlParams, Gains
from control.pose_error         import PoseError, pixel_to_metric
from control.stages             import LandingStage, advance_stage
from control.commands           import ControlOutput, blind_descent_command, compute_command, hold_command
