"""# descensus.vision.filters

Low-pass filtering.
"""

__all__ = ["gaussian_blur", "gaussian_kernel"]

from cv2                import BORDER_REPLICATE, CV_32F, sepFilter2D
from numpy              import arange, clip, exp, float64, ndarray, rint, uint8

from vision.frames      import GrayFrame

def gaussian_kernel(
    radius: int,
    sigma:  float
) -> ndarray:
    """# Gaussian Kernel.

    ## Args:
        * radius    (int):      Half-width; the kernel has 2 * radius + 1 taps.
        * sigma     (float):    Standard deviation in pixels.

    ## Returns:
        * ndarray:  Sampled Gaussian, renormalized to sum to 1.
    """
    taps:   ndarray =   exp(-(arange(-radius, radius + 1, dtype = float64) ** 2) / (2.0 * sigma ** 2))
    return taps / taps.sum()

def gaussian_blur(
    frame:  GrayFrame,
    radius: int =       2,
    sigma:  float =     1.0
) -> GrayFrame:
    """# Gaussian Blur.

    Separable 2-D Gaussian convolution with edge replication at the border. Results are rounded back
    to 8-bit luminance.

    ## Args:
        * frame     (GrayFrame):        Input frame.
        * radius    (int, optional):    Kernel half-width in pixels. Defaults to 2 (5 x 5 kernel).
        * sigma     (float, optional):  Standard deviation in pixels. Defaults to 1.0.

    ## Returns:
        * GrayFrame:    Blurred frame.

    ## Raises:
        * ValueError:   If radius < 1, sigma <= 0, or radius >= min(width, height).
    """
    if radius < 1:                              raise ValueError(f"Kernel radius must be at least 1, got {radius}")
    if sigma <= 0:                              raise ValueError(f"Sigma must be positive, got {sigma}")
    if radius >= min(frame.width, frame.height):raise ValueError(f"Kernel radius {radius} too large for {frame.width}x{frame.height} frame")

    kernel:     ndarray =   gaussian_kernel(radius, sigma)
    blurred:    ndarray =   sepFilter2D(frame.data, CV_32F, kernel, kernel, borderType = BORDER_REPLICATE)

    return GrayFrame(clip(rint(blurred), 0, 255).astype(uint8))
