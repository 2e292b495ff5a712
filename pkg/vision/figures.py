"""# descensus.vision.figures

Classification of labeled blobs into the three marker figures (ring, square, rectangle) from their
expected pixel sizes at the current altitude.
"""

__all__ = ["FigureSet", "SizeExpectation", "classify_figures", "expected_sizes"]

from dataclasses        import dataclass
from math               import hypot
from typing             import Callable, Iterable, List, Optional, Tuple

from simworld.geometry  import CameraModel, MarkerGeometry
from vision.labeling    import BlobStats

@dataclass(frozen = True)
class SizeExpectation:
    """# Expected Figure Sizes.

    ## Attributes:
        * ring_inner_px     (float):            Ring inner radius [px].
        * ring_outer_px     (float):            Ring outer radius [px].
        * square_side_px    (float):            Square side [px].
        * rect_long_px      (float):            Rectangle long side [px].
        * rect_short_px     (float):            Rectangle short side [px].
        * tolerance_frac    (float):            Accepted relative size error. Defaults to 0.30.
        * square_offset_px  (Optional[float]):  Square center distance from the ring center [px].
        * rect_offset_px    (Optional[float]):  Rectangle center distance from the ring center [px].
    """
    ring_inner_px:      float
    ring_outer_px:      float
    square_side_px:     float
    rect_long_px:       float
    rect_short_px:      float
    tolerance_frac:     float =             0.30
    square_offset_px:   Optional[float] =   None
    rect_offset_px:     Optional[float] =   None

    def __post_init__(self) -> None:
        """# Verify Expectation."""
        assert min(self.ring_inner_px, self.square_side_px, self.rect_long_px, self.rect_short_px) > 0, \
                                                        "Expected sizes must be positive"
        assert self.ring_inner_px < self.ring_outer_px, "Ring inner radius must be below outer radius"
        assert self.tolerance_frac > 0,                 f"Tolerance must be positive, got {self.tolerance_frac}"

@dataclass(frozen = True)
class FigureSet:
    """# Classified Figures.

    ## Attributes:
        * ring      (Optional[BlobStats]):  Ring blob, if found.
        * square    (Optional[BlobStats]):  Square blob, if found.
        * rectangle (Optional[BlobStats]):  Rectangle blob, if found.
    """
    ring:       Optional[BlobStats] =   None
    square:     Optional[BlobStats] =   None
    rectangle:  Optional[BlobStats] =   None

    @property
    def found(self) -> List[str]:
        """# Names of the figures found."""
        return [name for name in ("ring", "square", "rectangle") if getattr(self, name) is not None]

def expected_sizes(
    altitude_m:     float,
    camera:         CameraModel,
    marker:         MarkerGeometry,
    tolerance_frac: float =         0.30
) -> SizeExpectation:
    """# Expected Sizes.

    Pinhole ground-plane scale: d meters appear as d * f_px / altitude pixels.

    ## Args:
        * altitude_m        (float):            Camera height above ground [m].
        * camera            (CameraModel):      Camera model.
        * marker            (MarkerGeometry):   Marker geometry.
        * tolerance_frac    (float, optional):  Relative tolerance. Defaults to 0.30.

    ## Returns:
        * SizeExpectation:  Expected pixel sizes.

    ## Raises:
        * ValueError:   If altitude is not positive.
    """
    if altitude_m <= 0: raise ValueError(f"Altitude must be positive, got {altitude_m}")

    scale:  float = camera.f_px / altitude_m

    return SizeExpectation(
        ring_inner_px =     marker.ring_inner_r  * scale,
        ring_outer_px =     marker.ring_outer_r  * scale,
        square_side_px =    marker.square_side   * scale,
        rect_long_px =      marker.rect_long     * scale,
        rect_short_px =     marker.rect_short    * scale,
        tolerance_frac =    tolerance_frac,
        square_offset_px =  marker.square_offset * scale,
        rect_offset_px =    marker.rect_offset   * scale
    )

def _relative_error_(measured: float, expected: float) -> float:
    return abs(measured - expected) / expected

def _ring_error_(
    blob:       BlobStats,
    expect:     SizeExpectation,
    ring_fill:  Tuple[float, float]
) -> Optional[float]:
    """# Ring Match Error, or None if the blob is not ring-like."""
    if max(blob.width, blob.height) > (1 + expect.tolerance_frac) * min(blob.width, blob.height):  return None
    if not ring_fill[0] <= blob.fill_ratio <= ring_fill[1]:                                         return None

    error:  float = _relative_error_((blob.width + blob.height) / 2, 2 * expect.ring_outer_px)
    return error if error <= expect.tolerance_frac else None

def _solid_error_(
    blob:       BlobStats,
    long_px:    float,
    short_px:   float,
    expect:     SizeExpectation,
    min_fill:   float
) -> Optional[float]:
    """# Solid Rectangle Match Error, or None if the blob does not match the sides.

    Sides come from second moments, so the test holds under any in-plane rotation.
    """
    long, short =   blob.axes
    if blob.area / (long * short) < min_fill: return None

    error:  float = max(_relative_error_(long, long_px), _relative_error_(short, short_px))
    return error if error <= expect.tolerance_frac else None

def _offset_error_(
    blob:       BlobStats,
    ring:       Optional[BlobStats],
    offset_px:  Optional[float],
    tolerance:  float
) -> Optional[float]:
    """# Distance-from-Ring Error, 0 when unchecked."""
    if ring is None or offset_px is None: return 0.0

    error:  float = _relative_error_(
                        hypot(blob.centroid[0] - ring.centroid[0], blob.centroid[1] - ring.centroid[1]),
                        offset_px
                    )
    return error if error <= tolerance else None

def _best_(
    blobs:  Iterable[BlobStats],
    score:  Callable[[BlobStats], Optional[float]]
) -> Optional[BlobStats]:
    """# Best Candidate by smallest error, lowest label on ties."""
    scored: list =  [(error, blob.label, blob) for blob in blobs if (error := score(blob)) is not None]
    return min(scored, key = lambda entry: entry[:2])[2] if scored else None

def classify_figures(
    blobs:      List[BlobStats],
    expect:     SizeExpectation,
    ring_fill:  Tuple[float, float] =   (0.15, 0.60),
    min_fill:   float =                 0.80
) -> FigureSet:
    """# Classify Figures.

    The ring is chosen first; square and rectangle candidates are then also required to lie at their
    expected distance from the ring center. Each slot takes the candidate with the smallest relative
    size error.

    ## Args:
        * blobs     (List[BlobStats]):          Labeled blobs.
        * expect    (SizeExpectation):          Expected sizes at the current altitude.
        * ring_fill (Tuple[float, float], opt): Accepted bounding-box fill ratio of the ring.
                                                Defaults to (0.15, 0.60).
        * min_fill  (float, optional):          Minimum fill ratio of the solid figures. Defaults to
                                                0.80.

    ## Returns:
        * FigureSet:    Classified figures; unmatched slots are empty.
    """
    ring:       Optional[BlobStats] =   _best_(blobs, lambda b: _ring_error_(b, expect, ring_fill))

    def solid(long_px: float, short_px: float, offset_px: Optional[float], taken: tuple) -> Optional[BlobStats]:
        def score(blob: BlobStats) -> Optional[float]:
            if blob in taken:                                                                   return None
            size:   Optional[float] =   _solid_error_(blob, long_px, short_px, expect, min_fill)
            if size is None:                                                                    return None
            if _offset_error_(blob, ring, offset_px, expect.tolerance_frac) is None:            return None
            return size
        return _best_(blobs, score)

    square:     Optional[BlobStats] =   solid(expect.square_side_px, expect.square_side_px, expect.square_offset_px, (ring,))
    rectangle:  Optional[BlobStats] =   solid(expect.rect_long_px, expect.rect_short_px, expect.rect_offset_px, (ring, square))

    return FigureSet(ring = ring, square = square, rectangle = rectangle)
