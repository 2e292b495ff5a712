"""# descensus.simworld.sensor

Downward laser distance sensor.
"""

__all__ = ["SensorModel", "sense_altitude"]

from dataclasses        import dataclass

from numpy.random       import Generator

from simworld.state     import DroneState

@dataclass(frozen = True)
class SensorModel:
    """# Altitude Sensor Model.

    ## Attributes:
        * altitude_noise_sigma  (float):    Standard deviation of additive Gaussian noise [m].
                                            Defaults to 0.02.
        * quantization          (float):    Reading resolution [m], matching the centimeter
                                            resolution of the uplink. Defaults to 0.01.
    """
    altitude_noise_sigma:   float = 0.02
    quantization:           float = 0.01

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert self.altitude_noise_sigma >= 0,  f"Noise sigma must be non-negative, got {self.altitude_noise_sigma}"
        assert self.quantization > 0,           f"Quantization must be positive, got {self.quantization}"

def sense_altitude(
    state:  DroneState,
    sensor: SensorModel,
    rng:    Generator
) -> float:
    """# Sense Altitude.

    True altitude plus Gaussian noise, quantized to the sensor grid and clamped non-negative. One
    normal variate is drawn per call regardless of sigma, so the random stream does not depend on the
    noise setting.

    ## Args:
        * state     (DroneState):   Drone state.
        * sensor    (SensorModel):  Sensor parameters.
        * rng       (Generator):    Random generator.

    ## Returns:
        * float:    Altitude reading [m].
    """
    reading:    float = state.altitude + sensor.altitude_noise_sigma * float(rng.standard_normal())
    steps:      int =   round(reading / sensor.quantization)

    # Rounded to strip representation error from the grid product.
    return max(0.0, round(steps * sensor.quantization, 9))
