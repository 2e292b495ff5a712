"""# descensus.control.altitude_filter

Optional moving-average smoothing of altitude readings.
"""

__all__ = ["AltitudeFilter"]

from collections    import deque
from typing         import Deque

from numpy          import mean

class AltitudeFilter():
    """# Altitude Filter.

    Moving average over the last `window` readings. A window of 1 passes readings through unchanged.
    """

    def __init__(self,
        window: int =   1
    ):
        """# Instantiate Altitude Filter.

        ## Args:
            * window    (int, optional):    Number of readings averaged. Defaults to 1.
        """
        assert window >= 1, f"Window must be at least 1, got {window}"

        self._readings_:    Deque[float] =  deque(maxlen = window)

    @property
    def window(self) -> int:
        """# Window Length."""
        return self._readings_.maxlen

    def reset(self) -> None:
        """# Forget all readings."""
        self._readings_.clear()

    def update(self,
        reading:    float
    ) -> float:
        """# Update.

        ## Args:
            * reading   (float):    New altitude reading [m].

        ## Returns:
            * float:    Filtered altitude [m].
        """
        self._readings_.append(reading)

        if self.window == 1: return reading

        return float(mean(self._readings_))
