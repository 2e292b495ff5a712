"""# descensus.simworld.geometry

Camera and landing-marker geometry shared by the world (rendering) and the vision stack (expected
figure sizes).

Conventions:
    * World frame is local NED; headings are measured from north towards east.
    * The camera points straight down. Image x (columns, rightwards) follows body +y, image y (rows,
      downwards) follows body -x, so the image is the un-mirrored view from above with the drone's
      nose at the top.
    * Pixel coordinates address pixel centers; the principal point is the geometric image center
      ((width - 1) / 2, (height - 1) / 2).
    * The marker axis points along heading (marker yaw - pi/2). The square sits on the +axis side of
      the ring, the rectangle on the -axis side with its long side perpendicular to the axis. A
      drone whose yaw equals the marker yaw therefore sees square -> rectangle pointing along +x.
"""

__all__ = ["CameraModel", "MarkerGeometry", "ground_to_body", "project_ground_point"]

from dataclasses    import dataclass
from math           import cos, hypot, sin
from typing         import Tuple

@dataclass(frozen = True)
class CameraModel:
    """# Camera Model.

    Pinhole camera pointing perpendicularly downward.

    ## Attributes:
        * width     (int):      Image width in pixels. Defaults to 1280.
        * height    (int):      Image height in pixels. Defaults to 720.
        * f_px      (float):    Focal length in pixels. Defaults to 620 (~91.8 deg horizontal FOV).
    """
    width:  int =   1280
    height: int =   720
    f_px:   float = 620.0

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert self.width  > 0,     f"Camera width must be positive, got {self.width}"
        assert self.height > 0,     f"Camera height must be positive, got {self.height}"
        assert self.f_px   > 0,     f"Focal length must be positive, got {self.f_px}"

    @property
    def center(self) -> Tuple[float, float]:
        """# Principal Point (x, y) in pixels."""
        return (self.width - 1) / 2.0, (self.height - 1) / 2.0

    def half_extent_m(self,
        altitude_m: float
    ) -> Tuple[float, float]:
        """# Ground Half-Extent.

        ## Args:
            * altitude_m    (float):    Camera height above ground.

        ## Returns:
            * Tuple[float, float]:  Half width and half height, in meters, of the ground patch seen.
        """
        return (self.width / 2.0) * altitude_m / self.f_px, (self.height / 2.0) * altitude_m / self.f_px

@dataclass(frozen = True)
class MarkerGeometry:
    """# Landing Marker Geometry.

    Ring (no inner element), square and rectangle laid out along the marker axis.

    ## Attributes:
        * ring_inner_r  (float):    Ring inner radius [m]. Defaults to 0.7.
        * ring_outer_r  (float):    Ring outer radius [m]. Defaults to 0.9.
        * square_side   (float):    Square side [m]. Defaults to 0.5.
        * square_offset (float):    Square center distance from marker center along +axis [m].
                                    Defaults to 1.3.
        * rect_long     (float):    Rectangle long side, perpendicular to the axis [m]. Defaults to
                                    1.0.
        * rect_short    (float):    Rectangle short side, along the axis [m]. Defaults to 0.4.
        * rect_offset   (float):    Rectangle center distance from marker center along -axis [m].
                                    Defaults to 1.3.
        * north         (float):    Marker center, world north [m]. Defaults to 0.
        * east          (float):    Marker center, world east [m]. Defaults to 0.
        * yaw           (float):    Marker yaw [rad]. Defaults to 0.
    """
    ring_inner_r:   float = 0.7
    ring_outer_r:   float = 0.9
    square_side:    float = 0.5
    square_offset:  float = 1.3
    rect_long:      float = 1.0
    rect_short:     float = 0.4
    rect_offset:    float = 1.3
    north:          float = 0.0
    east:           float = 0.0
    yaw:            float = 0.0

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert 0 < self.ring_inner_r < self.ring_outer_r,   "Ring radii must satisfy 0 < inner < outer"
        assert self.square_side > 0,                        "Square side must be positive"
        assert 0 < self.rect_short <= self.rect_long,       "Rectangle sides must satisfy 0 < short <= long"
        assert self.square_offset - self.square_side / 2 > self.ring_outer_r, \
                                                            "Square overlaps the ring"
        assert self.rect_offset - self.rect_short / 2 > self.ring_outer_r, \
                                                            "Rectangle overlaps the ring"

    @property
    def bounding_radius(self) -> float:
        """# Bounding Radius.

        Radius [m] of the smallest marker-centered circle containing every figure.
        """
        return max(
            self.ring_outer_r,
            hypot(self.square_offset + self.square_side / 2, self.square_side / 2),
            hypot(self.rect_offset + self.rect_short / 2, self.rect_long / 2)
        )

    def to_marker_frame(self,
        north:  float,
        east:   float
    ) -> Tuple[float, float]:
        """# World -> Marker Frame.

        ## Args:
            * north (float):    World north [m].
            * east  (float):    World east [m].

        ## Returns:
            * Tuple[float, float]:  (u, w): coordinates along the marker axis and across it.
        """
        dn, de =    north - self.north, east - self.east
        return dn * sin(self.yaw) - de * cos(self.yaw), dn * cos(self.yaw) + de * sin(self.yaw)

def ground_to_body(
    drone_north:    float,
    drone_east:     float,
    drone_yaw:      float,
    north:          float,
    east:           float
) -> Tuple[float, float]:
    """# Ground Point -> Body Frame.

    ## Returns:
        * Tuple[float, float]:  (x_b, y_b) of the ground point relative to the drone, body axes.
    """
    dn, de =    north - drone_north, east - drone_east
    return dn * cos(drone_yaw) + de * sin(drone_yaw), -dn * sin(drone_yaw) + de * cos(drone_yaw)

def project_ground_point(
    drone_north:    float,
    drone_east:     float,
    altitude_m:     float,
    drone_yaw:      float,
    camera:         CameraModel,
    north:          float,
    east:           float
) -> Tuple[float, float]:
    """# Project Ground Point.

    Pinhole projection of a ground point into the downward camera.

    ## Args:
        * drone_north   (float):        Drone north [m].
        * drone_east    (float):        Drone east [m].
        * altitude_m    (float):        Drone altitude above ground [m].
        * drone_yaw     (float):        Drone yaw [rad].
        * camera        (CameraModel):  Camera model.
        * north         (float):        Ground point north [m].
        * east          (float):        Ground point east [m].

    ## Returns:
        * Tuple[float, float]:  Image coordinates (x, y) in pixels.

    ## Raises:
        * ValueError:   If altitude is not positive.
    """
    if altitude_m <= 0: raise ValueError(f"Altitude must be positive, got {altitude_m}")

    x_b, y_b =  ground_to_body(drone_north, drone_east, drone_yaw, north, east)
    cx, cy =    camera.center
    return cx + y_b * camera.f_px / altitude_m, cy - x_b * camera.f_px / altitude_m
