"""# descensus.control.stages

Landing procedure state machine.
"""

__all__ = ["LandingStage", "advance_stage"]

from enum               import IntEnum

from control.params     import ControlParams
from control.pose_error import PoseError

class LandingStage(IntEnum):
    """# Landing Stage.

    Ordered; a trial walks through the stages without ever going back.
    """
    ALIGN =     0
    DESCEND =   1
    FINAL =     2
    DONE =      3

def advance_stage(
    stage:  LandingStage,
    err:    PoseError,
    params: ControlParams
) -> LandingStage:
    """# Advance Stage.

    * ALIGN -> DESCEND once |dx|, |dy| < align_pos_tol and |dtheta| < align_yaw_tol.
    * DESCEND -> FINAL once h <= h_land.
    * FINAL -> DONE once h <= touchdown_alt.

    ## Args:
        * stage     (LandingStage):     Current stage.
        * err       (PoseError):        Current pose error (only h is used past ALIGN).
        * params    (ControlParams):    Control parameters.

    ## Returns:
        * LandingStage: Next stage; at most one transition per call.
    """
    match stage:

        case LandingStage.ALIGN:
            aligned:    bool =  abs(err.dx) < params.align_pos_tol and abs(err.dy) < params.align_pos_tol \
                                and abs(err.dtheta) < params.align_yaw_tol
            return LandingStage.DESCEND if aligned else stage

        case LandingStage.DESCEND:
            return LandingStage.FINAL if err.h <= params.h_land else stage

        case LandingStage.FINAL:
            return LandingStage.DONE if err.h <= params.touchdown_alt else stage

        case _:
            return stage
