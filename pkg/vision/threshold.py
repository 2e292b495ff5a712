"""# descensus.vision.threshold

Adaptive binarization: per-tile mean luminance, bilinearly interpolated into a per-pixel threshold.
"""

__all__ = ["TileGrid", "adaptive_threshold", "interpolation_weights", "threshold_surface", "tile_means"]

from dataclasses        import dataclass

from numpy              import add, append, arange, clip, diff, float32, float64, int64, ndarray, outer, searchsorted, zeros

from vision.frames      import BinaryFrame, GrayFrame

@dataclass(frozen = True, eq = False)
class TileGrid:
    """# Tile Grid.

    ## Attributes:
        * tile_size     (int):      Tile side in pixels.
        * means         (ndarray):  Mean luminance per tile, shape (rows, cols).
        * row_centers   (ndarray):  Pixel row of each tile-row center (partial tiles use their own
                                    center).
        * col_centers   (ndarray):  Pixel column of each tile-column center.
    """
    tile_size:      int
    means:          ndarray
    row_centers:    ndarray
    col_centers:    ndarray

    def __post_init__(self) -> None:
        """# Verify Grid."""
        assert self.means.shape == (len(self.row_centers), len(self.col_centers)), "Tile centers do not match means"
        assert ((self.means >= 0) & (self.means <= 255)).all(),                    "Tile mean outside [0, 255]"

    @property
    def cols(self) -> int:
        """# Tile Columns."""
        return self.means.shape[1]

    @property
    def rows(self) -> int:
        """# Tile Rows."""
        return self.means.shape[0]

def tile_means(
    frame:      GrayFrame,
    tile_size:  int =       32
) -> TileGrid:
    """# Tile Means.

    Average luminance over non-overlapping square tiles. Edge tiles may be partial and average only
    their actual pixels.

    ## Args:
        * frame     (GrayFrame):        Input frame.
        * tile_size (int, optional):    Tile side in pixels. Defaults to 32.

    ## Returns:
        * TileGrid: Grid of tile means, ceil(height / tile_size) x ceil(width / tile_size).

    ## Raises:
        * ValueError:   If tile_size is outside [1, min(width, height)].
    """
    if not 1 <= tile_size <= min(frame.width, frame.height):
        raise ValueError(f"Tile size must lie in [1, {min(frame.width, frame.height)}], got {tile_size}")

    row_starts: ndarray =   arange(0, frame.height, tile_size)
    col_starts: ndarray =   arange(0, frame.width,  tile_size)
    heights:    ndarray =   diff(append(row_starts, frame.height))
    widths:     ndarray =   diff(append(col_starts, frame.width))

    sums:       ndarray =   add.reduceat(add.reduceat(frame.data, row_starts, axis = 0, dtype = int64), col_starts, axis = 1)

    return TileGrid(
        tile_size =     tile_size,
        means =         sums / outer(heights, widths),
        row_centers =   row_starts + (heights - 1) / 2.0,
        col_centers =   col_starts + (widths - 1) / 2.0
    )

def interpolation_weights(
    coordinates:    ndarray,
    centers:        ndarray
) -> ndarray:
    """# Interpolation Weights.

    Linear interpolation matrix between the two nearest centers; coordinates outside the outermost
    centers clamp to the edge value.

    ## Args:
        * coordinates   (ndarray):  Pixel coordinates, shape (n,).
        * centers       (ndarray):  Increasing tile-center coordinates, shape (m,).

    ## Returns:
        * ndarray:  Weights, shape (n, m); every row sums to 1.
    """
    weights:    ndarray =   zeros((len(coordinates), len(centers)), dtype = float64)

    if len(centers) == 1:
        weights[:, 0] = 1.0
        return weights

    rows:       ndarray =   arange(len(coordinates))
    lower:      ndarray =   clip(searchsorted(centers, coordinates, side = "right") - 1, 0, len(centers) - 2)
    t:          ndarray =   clip((coordinates - centers[lower]) / (centers[lower + 1] - centers[lower]), 0.0, 1.0)

    weights[rows, lower] =      1.0 - t
    weights[rows, lower + 1] =  t

    return weights

def threshold_surface(
    grid:               TileGrid,
    width:              int,
    height:             int,
    offset:             float =     15.0,
    dark_foreground:    bool =      True,
    dtype:              type =      float64
) -> ndarray:
    """# Threshold Surface.

    ## Args:
        * grid              (TileGrid):         Tile means of the frame.
        * width             (int):              Frame width.
        * height            (int):              Frame height.
        * offset            (float, optional):  Luminance offset from the tile mean. Defaults to 15.
        * dark_foreground   (bool, optional):   Threshold below (True) or above (False) the mean.
                                                Defaults to True.
        * dtype             (type, optional):   Floating type of the surface. Defaults to float64.

    ## Returns:
        * ndarray:  Per-pixel threshold, shape (height, width).
    """
    levels:     ndarray =   grid.means - offset if dark_foreground else grid.means + offset

    # Bilinear interpolation is separable: rows, then columns.
    rows:       ndarray =   interpolation_weights(arange(height, dtype = float64), grid.row_centers).astype(dtype)
    cols:       ndarray =   interpolation_weights(arange(width,  dtype = float64), grid.col_centers).astype(dtype)

    return (rows @ levels.astype(dtype)) @ cols.T

def adaptive_threshold(
    frame:              GrayFrame,
    grid:               TileGrid,
    offset:             float =     15.0,
    dark_foreground:    bool =      True
) -> BinaryFrame:
    """# Adaptive Threshold.

    With dark figures on a light pad a pixel is foreground iff its luminance is below the
    interpolated (tile mean - offset); the light polarity tests above (tile mean + offset).

    ## Args:
        * frame             (GrayFrame):        Input frame.
        * grid              (TileGrid):         Tile means computed from frame.
        * offset            (float, optional):  Luminance offset. Defaults to 15.
        * dark_foreground   (bool, optional):   Foreground polarity. Defaults to True.

    ## Returns:
        * BinaryFrame:  Foreground mask.
    """
    surface:    ndarray =   threshold_surface(grid, frame.width, frame.height, offset, dark_foreground, float32)

    return BinaryFrame(frame.data < surface if dark_foreground else frame.data > surface)
