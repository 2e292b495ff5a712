"""# descensus.vision.detector

Landing-marker detection pipeline: blur, tiled adaptive threshold, labeling, classification, pose.
"""

__all__ = ["Detection", "VisionParams", "analyze", "detect"]

from dataclasses        import dataclass, field
from logging            import Logger
from typing             import List, Optional, Tuple

from simworld.geometry  import CameraModel, MarkerGeometry
from utilities          import get_child
from vision.figures     import FigureSet, classify_figures, expected_sizes
from vision.filters     import gaussian_blur
from vision.frames      import GrayFrame
from vision.labeling    import BlobStats, label_components
from vision.pose        import MarkerPose, estimate_pose
from vision.threshold   import adaptive_threshold, tile_means

LOGGER: Logger =    get_child("vision")

@dataclass(frozen = True)
class VisionParams:
    """# Vision Parameters.

    ## Attributes:
        * blur_radius       (int):                  Gaussian half-width [px]. Defaults to 2.
        * blur_sigma        (float):                Gaussian sigma [px]. Defaults to 1.0.
        * tile_size         (int):                  Threshold tile side [px]. Defaults to 32.
        * threshold_offset  (float):                Offset from the tile mean. Defaults to 15.
        * dark_foreground   (bool):                 Figures darker than the pad. Defaults to True.
        * connectivity      (int):                  4 or 8. Defaults to 8.
        * noise_floor       (int):                  Smallest blob area kept [px]. Defaults to 25.
        * tolerance_frac    (float):                Relative size tolerance. Defaults to 0.30.
        * ring_fill         (Tuple[float, float]):  Ring bounding-box fill range. Defaults to
                                                    (0.15, 0.60).
        * min_fill          (float):                Solid-figure fill minimum. Defaults to 0.80.
    """
    blur_radius:        int =                   2
    blur_sigma:         float =                 1.0
    tile_size:          int =                   32
    threshold_offset:   float =                 15.0
    dark_foreground:    bool =                  True
    connectivity:       int =                   8
    noise_floor:        int =                   25
    tolerance_frac:     float =                 0.30
    ring_fill:          Tuple[float, float] =   (0.15, 0.60)
    min_fill:           float =                 0.80

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert self.blur_radius >= 1,                   f"Blur radius must be at least 1, got {self.blur_radius}"
        assert self.blur_sigma > 0,                     f"Blur sigma must be positive, got {self.blur_sigma}"
        assert self.tile_size >= 1,                     f"Tile size must be at least 1, got {self.tile_size}"
        assert self.connectivity in (4, 8),             f"Connectivity must be 4 or 8, got {self.connectivity}"
        assert self.noise_floor >= 0,                   f"Noise floor must be non-negative, got {self.noise_floor}"
        assert self.tolerance_frac > 0,                 f"Tolerance must be positive, got {self.tolerance_frac}"
        assert 0 <= self.ring_fill[0] < self.ring_fill[1] <= 1, f"Invalid ring fill range {self.ring_fill}"
        assert 0 < self.min_fill <= 1,                  f"Fill minimum must lie in (0, 1], got {self.min_fill}"
        # Lists arrive from JSON configuration.
        object.__setattr__(self, "ring_fill", tuple(self.ring_fill))

@dataclass(frozen = True)
class Detection:
    """# Detection.

    Intermediate and final results of one pipeline pass.

    ## Attributes:
        * pose      (Optional[MarkerPose]): Marker pose, if found.
        * figures   (FigureSet):            Classified figures.
        * blobs     (List[BlobStats]):      Blobs above the noise floor.
    """
    pose:       Optional[MarkerPose]
    figures:    FigureSet =         FigureSet()
    blobs:      List[BlobStats] =   field(default_factory = list)

def analyze(
    frame:      GrayFrame,
    altitude_m: float,
    camera:     CameraModel =   CameraModel(),
    marker:     MarkerGeometry= MarkerGeometry(),
    params:     VisionParams =  VisionParams()
) -> Detection:
    """# Analyze Frame.

    ## Args:
        * frame         (GrayFrame):                Camera frame.
        * altitude_m    (float):                    Altitude reading [m].
        * camera        (CameraModel, optional):    Camera model.
        * marker        (MarkerGeometry, optional): Marker geometry.
        * params        (VisionParams, optional):   Pipeline parameters.

    ## Returns:
        * Detection:    Pose together with the figures and blobs behind it.

    ## Raises:
        * ValueError:   If altitude is not positive.
    """
    if altitude_m <= 0: raise ValueError(f"Altitude must be positive, got {altitude_m}")

    blurred:    GrayFrame =         gaussian_blur(frame, params.blur_radius, params.blur_sigma)
    mask =                          adaptive_threshold(
                                        blurred,
                                        tile_means(blurred, params.tile_size),
                                        params.threshold_offset,
                                        params.dark_foreground
                                    )
    blobs:      List[BlobStats] =   label_components(mask, params.connectivity, max(1, params.noise_floor))
    figures:    FigureSet =         classify_figures(
                                        blobs,
                                        expected_sizes(altitude_m, camera, marker, params.tolerance_frac),
                                        params.ring_fill,
                                        params.min_fill
                                    )
    pose:       Optional[MarkerPose] =  estimate_pose(figures)

    # Log for debugging.
    LOGGER.debug(f"{len(blobs)} blobs, found {figures.found}, pose {pose}")

    return Detection(pose = pose, figures = figures, blobs = blobs)

def detect(
    frame:      GrayFrame,
    altitude_m: float,
    camera:     CameraModel =   CameraModel(),
    marker:     MarkerGeometry= MarkerGeometry(),
    params:     VisionParams =  VisionParams()
) -> Optional[MarkerPose]:
    """# Detect Marker.

    ## Args:
        * frame         (GrayFrame):                Camera frame.
        * altitude_m    (float):                    Altitude reading [m].
        * camera        (CameraModel, optional):    Camera model.
        * marker        (MarkerGeometry, optional): Marker geometry.
        * params        (VisionParams, optional):   Pipeline parameters.

    ## Returns:
        * Optional[MarkerPose]: Marker pose, or None when the marker is not found.
    """
    return analyze(frame, altitude_m, camera, marker, params).pose
