"""# descensus.simworld.render

Rasterizer of the ground plane seen by the downward camera.

The marker is rasterized once per geometry into a texture in its own frame; every camera frame then
samples that texture through the affine pixel -> marker-frame map, which is exact for a nadir
pinhole over flat ground.
"""

__all__ = ["MIN_RENDER_ALTITUDE", "RenderParams", "render_camera"]

from dataclasses        import dataclass, replace
from functools          import lru_cache
from math               import ceil, cos, floor, sin
from typing             import Optional

from cv2                import BORDER_CONSTANT, INTER_AREA, INTER_NEAREST, resize, WARP_INVERSE_MAP, warpAffine
from numpy              import abs as np_abs, arange, array, broadcast_to, clip, float32, float64, hypot, \
                               linspace, ndarray, rint, uint8

from simworld.geometry  import CameraModel, MarkerGeometry, project_ground_point
from simworld.state     import DroneState
from vision.frames      import GrayFrame

# Below this altitude the projection degenerates.
MIN_RENDER_ALTITUDE:    float = 0.05

# Marker texture resolution.
TEXELS_PER_METER:       float = 500.0

@dataclass(frozen = True)
class RenderParams:
    """# Render Parameters.

    ## Attributes:
        * ground_luminance      (int):      Pad luminance. Defaults to 200.
        * figure_luminance      (int):      Marker figure luminance. Defaults to 40.
        * supersample           (int):      Samples per pixel side. Defaults to 2.
        * illumination_gradient (float):    Luminance added from the left to the right frame edge,
                                            centered on zero. Defaults to 0 (uniform lighting).
    """
    ground_luminance:       int =   200
    figure_luminance:       int =   40
    supersample:            int =   2
    illumination_gradient:  float = 0.0

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert 0 <= self.ground_luminance <= 255,   f"Ground luminance out of range: {self.ground_luminance}"
        assert 0 <= self.figure_luminance <= 255,   f"Figure luminance out of range: {self.figure_luminance}"
        assert self.supersample >= 1,               f"Supersampling must be at least 1, got {self.supersample}"

def _in_figures_(
    u:      ndarray,
    w:      ndarray,
    marker: MarkerGeometry
) -> ndarray:
    """# Figure Membership.

    ## Args:
        * u         (ndarray):          Marker-frame coordinates along the axis [m].
        * w         (ndarray):          Marker-frame coordinates across the axis [m].
        * marker    (MarkerGeometry):   Marker geometry.

    ## Returns:
        * ndarray:  Boolean membership in the annulus, square or rectangle (broadcast of u and w).
    """
    radius:     ndarray =   hypot(u, w)
    ring:       ndarray =   (radius >= marker.ring_inner_r) & (radius <= marker.ring_outer_r)
    square:     ndarray =   (np_abs(u - marker.square_offset) <= marker.square_side / 2) & (np_abs(w) <= marker.square_side / 2)
    rectangle:  ndarray =   (np_abs(u + marker.rect_offset) <= marker.rect_short / 2) & (np_abs(w) <= marker.rect_long / 2)

    return ring | square | rectangle

@lru_cache(maxsize = 8)
def _texture_(
    marker: MarkerGeometry
) -> ndarray:
    """# Marker Texture.

    Rows follow the marker axis (u), columns run across it (w); the marker center sits at the middle
    texel. Placement (north, east, yaw) does not change the texture, so callers pass the geometry at
    the origin.

    ## Returns:
        * ndarray:  Read-only uint8 texture, 1 inside a figure and 0 elsewhere.
    """
    side:       int =       2 * ceil(marker.bounding_radius * TEXELS_PER_METER) + 3
    axis:       ndarray =   (arange(side, dtype = float64) - (side - 1) / 2) / TEXELS_PER_METER
    texture:    ndarray =   _in_figures_(axis[:, None], axis[None, :], marker).astype(uint8)

    texture.setflags(write = False)
    return texture

def render_camera(
    state:              DroneState,
    camera:             CameraModel,
    marker:             MarkerGeometry,
    ground_luminance:   Optional[int] =             None,
    figure_luminance:   Optional[int] =             None,
    params:             RenderParams =              RenderParams()
) -> GrayFrame:
    """# Render Camera Frame.

    Only the window around the marker's projected bounding circle is sampled; the rest of the frame
    is bare ground. Samples take the nearest texel of the marker texture and are averaged over
    supersample x supersample sub-pixel positions.

    ## Args:
        * state             (DroneState):               Drone state.
        * camera            (CameraModel):              Camera model.
        * marker            (MarkerGeometry):           Marker geometry and pose.
        * ground_luminance  (int, optional):            Overrides params.ground_luminance.
        * figure_luminance  (int, optional):            Overrides params.figure_luminance.
        * params            (RenderParams, optional):   Render parameters.

    ## Returns:
        * GrayFrame:    Rendered luminance frame.

    ## Raises:
        * ValueError:   If altitude is at or below MIN_RENDER_ALTITUDE.
    """
    altitude:   float = state.altitude
    if altitude <= MIN_RENDER_ALTITUDE: raise ValueError(f"Altitude {altitude:.3f} m too low to render")

    ground:     float =     float(params.ground_luminance if ground_luminance is None else ground_luminance)
    figure:     float =     float(params.figure_luminance if figure_luminance is None else figure_luminance)
    lighting:   ndarray =   ground + params.illumination_gradient * linspace(-0.5, 0.5, camera.width)

    image:      ndarray =   broadcast_to(clip(rint(lighting), 0, 255).astype(uint8), (camera.height, camera.width)).copy()

    # Window around the projected marker.
    u_m, v_m =  project_ground_point(state.north, state.east, altitude, state.yaw, camera, marker.north, marker.east)
    reach:      float = marker.bounding_radius * camera.f_px / altitude + 2
    x0, x1 =    max(0, floor(u_m - reach)), min(camera.width,  ceil(u_m + reach) + 1)
    y0, y1 =    max(0, floor(v_m - reach)), min(camera.height, ceil(v_m + reach) + 1)

    if x0 < x1 and y0 < y1:
        texture:    ndarray =   _texture_(replace(marker, north = 0.0, east = 0.0, yaw = 0.0))
        n:          int =       params.supersample
        cx, cy =                camera.center
        scale:      float =     altitude / camera.f_px
        middle:     float =     (texture.shape[0] - 1) / 2
        u0, w0 =                marker.to_marker_frame(state.north, state.east)
        s, c =                  sin(marker.yaw - state.yaw), cos(marker.yaw - state.yaw)

        # First sample relative to the principal point; image x follows body +y, image y body -x.
        px:         float =     x0 - 0.5 + 0.5 / n - cx
        py:         float =     y0 - 0.5 + 0.5 / n - cy
        k:          float =     TEXELS_PER_METER * scale
        samples:    ndarray =   warpAffine(
                                    texture,
                                    array([
                                        [ k * s / n, -k * c / n, TEXELS_PER_METER * w0 + k * (s * px - c * py) + middle],
                                        [-k * c / n, -k * s / n, TEXELS_PER_METER * u0 - k * (c * px + s * py) + middle]
                                    ], dtype = float64),
                                    (n * (x1 - x0), n * (y1 - y0)),
                                    flags =         INTER_NEAREST | WARP_INVERSE_MAP,
                                    borderMode =    BORDER_CONSTANT,
                                    borderValue =   0
                                )
        coverage:   ndarray =   samples.astype(float32) if n == 1 else \
                                resize(samples.astype(float32), (x1 - x0, y1 - y0), interpolation = INTER_AREA)

        window:     ndarray =   lighting[None, x0:x1] + (figure - ground) * coverage
        image[y0:y1, x0:x1] =   clip(rint(window), 0, 255).astype(uint8)

    return GrayFrame(image)
