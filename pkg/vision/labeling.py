"""# descensus.vision.labeling

Connected-component labeling with per-component statistics (area, centroid, bounding box and
second-order central moments).
"""

__all__ = ["BlobStats", "label_components"]

from dataclasses        import dataclass
from math               import atan2, sqrt
from typing             import List, Tuple

from cv2                import CC_STAT_AREA, CC_STAT_HEIGHT, CC_STAT_LEFT, CC_STAT_TOP, CC_STAT_WIDTH, \
                               connectedComponentsWithStats, CV_32S, moments
from numpy              import argmax, argsort, ascontiguousarray, uint8

from vision.frames      import BinaryFrame

@dataclass(frozen = True)
class BlobStats:
    """# Blob Statistics.

    ## Attributes:
        * label     (int):                          Component label, starting at 1 in raster-scan
                                                    first-encounter order.
        * area      (int):                          Pixel count.
        * centroid  (Tuple[float, float]):          (cx, cy) sub-pixel centroid.
        * bbox      (Tuple[int, int, int, int]):    (x_min, y_min, x_max, y_max), inclusive.
        * mu20      (float):                        Central moment along x, normalized by area.
        * mu02      (float):                        Central moment along y, normalized by area.
        * mu11      (float):                        Mixed central moment, normalized by area.
    """
    label:      int
    area:       int
    centroid:   Tuple[float, float]
    bbox:       Tuple[int, int, int, int]
    mu20:       float = 0.0
    mu02:       float = 0.0
    mu11:       float = 0.0

    def __post_init__(self) -> None:
        """# Verify Statistics."""
        assert self.label >= 1,                                         f"Labels start at 1, got {self.label}"
        assert self.area >= 1,                                          f"Empty blob {self.label}"
        assert self.bbox[0] <= self.centroid[0] <= self.bbox[2] and \
               self.bbox[1] <= self.centroid[1] <= self.bbox[3],        f"Centroid {self.centroid} outside {self.bbox}"

    @property
    def width(self) -> int:
        """# Bounding-Box Width."""
        return self.bbox[2] - self.bbox[0] + 1

    @property
    def height(self) -> int:
        """# Bounding-Box Height."""
        return self.bbox[3] - self.bbox[1] + 1

    @property
    def fill_ratio(self) -> float:
        """# Bounding-Box Fill Ratio."""
        return self.area / (self.width * self.height)

    @property
    def axes(self) -> Tuple[float, float]:
        """# Equivalent Rectangle Axes.

        Sides (long, short) in pixels of the solid rectangle with the same second moments. Exact for
        axis-aligned pixel rectangles.
        """
        half_sum:   float = (self.mu20 + self.mu02) / 2
        spread:     float = sqrt(((self.mu20 - self.mu02) / 2) ** 2 + self.mu11 ** 2)

        return sqrt(12 * (half_sum + spread) + 1), sqrt(max(0.0, 12 * (half_sum - spread)) + 1)

    @property
    def orientation(self) -> float:
        """# Long-Axis Orientation.

        Angle in radians of the long axis from image +x towards image +y, in (-pi/2, pi/2].
        """
        return 0.5 * atan2(2 * self.mu11, self.mu20 - self.mu02)

def label_components(
    frame:          BinaryFrame,
    connectivity:   int =           8,
    min_area:       int =           1
) -> List[BlobStats]:
    """# Label Connected Components.

    ## Args:
        * frame         (BinaryFrame):      Foreground mask.
        * connectivity  (int, optional):    4 or 8. Defaults to 8.
        * min_area      (int, optional):    Components smaller than this are labeled but not
                                            reported. Defaults to 1 (all components).

    ## Returns:
        * List[BlobStats]:  One entry per maximal connected foreground region of at least min_area
                            pixels, ordered by label.
    """
    assert connectivity in (4, 8), f"Connectivity must be 4 or 8, got {connectivity}"

    count, labels, stats, centroids =   connectedComponentsWithStats(
                                            ascontiguousarray(frame.data).view(uint8),
                                            connectivity =  connectivity,
                                            ltype =         CV_32S
                                        )

    if count == 1: return []

    # Raster index of every component's first pixel; its top row holds it.
    first:      List[int] = []

    for k in range(1, count):
        top, left, width =  stats[k, CC_STAT_TOP], stats[k, CC_STAT_LEFT], stats[k, CC_STAT_WIDTH]
        first.append(int(top) * frame.width + int(left) + int(argmax(labels[top, left:left + width] == k)))

    blobs:      List[BlobStats] = []

    for new_label, k in enumerate(argsort(first, kind = "stable") + 1, start = 1):
        area:   int =   int(stats[k, CC_STAT_AREA])

        if area < min_area: continue

        x, y =          int(stats[k, CC_STAT_LEFT]), int(stats[k, CC_STAT_TOP])
        w, h =          int(stats[k, CC_STAT_WIDTH]), int(stats[k, CC_STAT_HEIGHT])
        m:      dict =  moments((labels[y:y + h, x:x + w] == k).view(uint8), binaryImage = True)

        blobs.append(BlobStats(
            label =     new_label,
            area =      area,
            centroid =  (float(centroids[k, 0]), float(centroids[k, 1])),
            bbox =      (x, y, x + w - 1, y + h - 1),
            mu20 =      m["mu20"] / area,
            mu02 =      m["mu02"] / area,
            mu11 =      m["mu11"] / area
        ))

    return blobs
