"""# descensus.vision.frames

Frame containers flowing through the detection pipeline.
"""

__all__ = ["BinaryFrame", "GrayFrame", "to_grayscale"]

from dataclasses    import dataclass

from numpy          import asarray, bool_, clip, full, ndarray, rint, uint8

# ITU-R BT.601 luma weights.
BT601:  tuple = (0.299, 0.587, 0.114)

@dataclass(frozen = True, eq = False)
class GrayFrame:
    """# Gray Frame.

    Luminance image, one unsigned 8-bit sample per pixel, row-major (height x width). The wrapped
    array is made read-only.
    """
    data:   ndarray

    def __post_init__(self) -> None:
        """# Verify Frame."""
        assert isinstance(self.data, ndarray),  f"Expected ndarray, got {type(self.data)}"
        assert self.data.ndim == 2,             f"Expected 2-D luminance array, got shape {self.data.shape}"
        assert self.data.dtype == uint8,        f"Expected uint8 samples, got {self.data.dtype}"
        # Read-only view; the caller's array keeps its own flags.
        view:   ndarray =   self.data.view()
        view.setflags(write = False)
        object.__setattr__(self, "data", view)

    @classmethod
    def uniform(cls,
        width:  int =   1280,
        height: int =   720,
        value:  int =   0
    ) -> "GrayFrame":
        """# Uniform Frame.

        ## Args:
            * width     (int, optional):    Width in pixels. Defaults to 1280.
            * height    (int, optional):    Height in pixels. Defaults to 720.
            * value     (int, optional):    Luminance of every pixel. Defaults to 0.

        ## Returns:
            * GrayFrame:    Frame filled with value.
        """
        return cls(full((height, width), value, dtype = uint8))

    @property
    def width(self) -> int:
        """# Width (pixels)."""
        return self.data.shape[1]

    @property
    def height(self) -> int:
        """# Height (pixels)."""
        return self.data.shape[0]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GrayFrame) and self.data.shape == other.data.shape and bool((self.data == other.data).all())

    def __repr__(self) -> str:
        return f"<GrayFrame({self.width}x{self.height})>"

@dataclass(frozen = True, eq = False)
class BinaryFrame:
    """# Binary Frame.

    One boolean per pixel, true marking foreground.
    """
    data:   ndarray

    def __post_init__(self) -> None:
        """# Verify Frame."""
        assert isinstance(self.data, ndarray),  f"Expected ndarray, got {type(self.data)}"
        assert self.data.ndim == 2,             f"Expected 2-D mask, got shape {self.data.shape}"
        assert self.data.dtype == bool_,        f"Expected boolean mask, got {self.data.dtype}"
        # Read-only view; the caller's array keeps its own flags.
        view:   ndarray =   self.data.view()
        view.setflags(write = False)
        object.__setattr__(self, "data", view)

    @property
    def width(self) -> int:
        """# Width (pixels)."""
        return self.data.shape[1]

    @property
    def height(self) -> int:
        """# Height (pixels)."""
        return self.data.shape[0]

    def __repr__(self) -> str:
        return f"<BinaryFrame({self.width}x{self.height}, foreground = {int(self.data.sum())})>"

def to_grayscale(
    rgb:    ndarray
) -> GrayFrame:
    """# Convert to Grayscale.

    Per-pixel BT.601 luminance, rounded to the nearest integer and clamped to [0, 255].

    ## Args:
        * rgb   (ndarray):  Color frame, shape (height, width, 3), 8 bits per channel.

    ## Returns:
        * GrayFrame:    Luminance frame.
    """
    rgb:    ndarray =   asarray(rgb)
    assert rgb.ndim == 3 and rgb.shape[2] == 3, f"Expected (height, width, 3) color frame, got {rgb.shape}"

    return GrayFrame(clip(rint(rgb.astype(float) @ asarray(BT601)), 0, 255).astype(uint8))
