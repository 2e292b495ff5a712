"""# descensus.control.pose_error

Conversion of an image-plane marker pose into a metric error in the drone body frame.
"""

__all__ = ["PoseError", "pixel_to_metric"]

from dataclasses        import dataclass
from math               import isfinite, pi

from simworld.geometry  import CameraModel
from simworld.state     import normalize_angle
from vision.pose        import MarkerPose

@dataclass(frozen = True)
class PoseError:
    """# Pose Error.

    ## Attributes:
        * dx        (float):    Marker center relative to the drone along body x [m].
        * dy        (float):    Marker center relative to the drone along body y [m].
        * dtheta    (float):    Heading correction [rad] in (-pi, pi].
        * h         (float):    Current altitude [m].
    """
    dx:     float = 0.0
    dy:     float = 0.0
    dtheta: float = 0.0
    h:      float = 0.0

    def __post_init__(self) -> None:
        """# Verify Error."""
        assert all(map(isfinite, (self.dx, self.dy, self.dtheta, self.h))),    f"Non-finite error {self}"
        assert self.h >= 0,                                                     f"Negative altitude {self.h}"
        assert -pi < self.dtheta <= pi,                                         f"Heading error not normalized: {self.dtheta}"

def pixel_to_metric(
    pose:       MarkerPose,
    altitude_m: float,
    camera:     CameraModel
) -> PoseError:
    """# Pixel -> Metric Error.

    Image x follows body +y and image y follows body -x; pixel offsets scale by altitude / f_px.

    ## Args:
        * pose          (MarkerPose):   Detected marker pose.
        * altitude_m    (float):        Altitude [m].
        * camera        (CameraModel):  Camera model.

    ## Returns:
        * PoseError:    Metric error.

    ## Raises:
        * ValueError:   If altitude is not positive.
    """
    if altitude_m <= 0: raise ValueError(f"Altitude must be positive, got {altitude_m}")

    cx, cy =            camera.center
    scale:  float =     altitude_m / camera.f_px

    return PoseError(
        dx =        -(pose.y_px - cy) * scale,
        dy =        (pose.x_px - cx) * scale,
        dtheta =    normalize_angle(-pose.theta),
        h =         altitude_m
    )
