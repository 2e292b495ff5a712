"""# descensus.vision.pose

Marker pose from the classified figures.
"""

__all__ = ["MarkerPose", "estimate_pose"]

from dataclasses        import dataclass
from math               import atan2, cos, isfinite, pi, sin
from typing             import Optional

from simworld.state     import normalize_angle
from vision.figures     import FigureSet

@dataclass(frozen = True)
class MarkerPose:
    """# Marker Pose.

    ## Attributes:
        * x_px  (float):    Marker-center column (sub-pixel).
        * y_px  (float):    Marker-center row (sub-pixel).
        * theta (float):    Marker orientation [rad] in (-pi, pi], measured counter-clockwise on the
                            image with y pointing up; 0 when square -> rectangle points along +x.
    """
    x_px:   float
    y_px:   float
    theta:  float

    def __post_init__(self) -> None:
        """# Verify Pose."""
        assert isfinite(self.x_px) and isfinite(self.y_px), f"Non-finite center ({self.x_px}, {self.y_px})"
        assert -pi < self.theta <= pi,                      f"Theta not normalized: {self.theta}"

def _image_angle_(dx: float, dy: float) -> float:
    """# Image Vector Angle, y up."""
    return atan2(-dy, dx)

def estimate_pose(
    figs:   FigureSet
) -> Optional[MarkerPose]:
    """# Estimate Pose.

    The ring centroid is the marker center. The orientation follows the square -> rectangle vector;
    with a single solid figure it falls back to that figure's direction relative to the ring (the
    rectangle's short axis, disambiguated by the ring, or the square -> ring vector).

    ## Args:
        * figs  (FigureSet):    Classified figures.

    ## Returns:
        * Optional[MarkerPose]: Pose, or None unless the ring and one other figure are present.
    """
    if figs.ring is None or (figs.square is None and figs.rectangle is None): return None

    cx, cy =    figs.ring.centroid

    if figs.square is not None and figs.rectangle is not None:
        theta:  float = _image_angle_(
                            figs.rectangle.centroid[0] - figs.square.centroid[0],
                            figs.rectangle.centroid[1] - figs.square.centroid[1]
                        )

    elif figs.rectangle is not None:
        rx, ry =        figs.rectangle.centroid

        # The marker axis is perpendicular to the long side; pick the direction away from the ring.
        axis:   float = figs.rectangle.orientation + pi / 2
        if cos(axis) * (rx - cx) + sin(axis) * (ry - cy) < 0: axis += pi

        theta:  float = -axis

    else:
        theta:  float = _image_angle_(cx - figs.square.centroid[0], cy - figs.square.centroid[1])

    return MarkerPose(x_px = cx, y_px = cy, theta = normalize_angle(theta))
