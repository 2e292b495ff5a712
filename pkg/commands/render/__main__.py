"""# descensus.commands.render.main

Camera frame of a single drone pose, with an optional detection overlay.
"""

from logging            import Logger
from pathlib            import Path
from typing             import Dict, Optional

from commands.runs      import prepare_output, RunManifest, resolve_config, write_json
from harness            import config_to_dict, TrialConfig
from simworld           import DroneState, MIN_RENDER_ALTITUDE, render_camera
from utilities          import get_child
from vision             import analyze, Detection, detection_record, draw_overlay, GrayFrame, write_frame

class Render():
    """# Render (Process)."""

    def __init__(self,
        config:     Optional[str] =     None,
        seed:       Optional[int] =     None,
        out:        str =               "out/render",
        north:      Optional[float] =   None,
        east:       Optional[float] =   None,
        altitude:   float =             7.0,
        yaw:        float =             0.0,
        format:     str =               "pgm",
        overlay:    bool =              False,
        **kwargs
    ):
        """# Initialize Render.

        ## Args:
            * config    (str, optional):    Configuration or manifest path.
            * seed      (int, optional):    Seed override, recorded in the manifest.
            * out       (str, optional):    Output directory. Defaults to "out/render".
            * north     (float, optional):  Drone north [m]. Defaults to the marker's.
            * east      (float, optional):  Drone east [m]. Defaults to the marker's.
            * altitude  (float, optional):  Drone altitude [m]. Defaults to 7.
            * yaw       (float, optional):  Drone yaw [rad]. Defaults to 0.
            * format    (str, optional):    "pgm" or "png". Defaults to "pgm".
            * overlay   (bool, optional):   Write the detection overlay. Defaults to False.

        ## Raises:
            * ConfigurationError:   On unreadable or invalid configuration.
            * ValueError:           If the altitude does not exceed 0.05 m.
        """
        # Initialize logger.
        self.__logger__:    Logger =        get_child("render.main")

        # Resolve configuration.
        self._config_:      TrialConfig =   resolve_config(config, seed)

        if not altitude > MIN_RENDER_ALTITUDE: raise ValueError(f"Altitude must exceed {MIN_RENDER_ALTITUDE} m, got {altitude}")

        # Define pose & output.
        self._state_:       DroneState =    DroneState.at(
                                                north =     self._config_.marker.north if north is None else north,
                                                east =      self._config_.marker.east if east is None else east,
                                                altitude =  altitude,
                                                yaw =       yaw
                                            )
        self._out_:         Path =          Path(out)
        self._format_:      str =           format
        self._overlay_:     bool =          overlay

    # METHODS ======================================================================================

    def execute(self) -> int:
        """# Execute Render.

        ## Returns:
            * int:  Exit code (0).
        """
        config:     TrialConfig =       self._config_
        out:        Path =              prepare_output(self._out_)
        artifacts:  Dict[str, str] =    {"frame": f"frame.{self._format_}"}

        frame:      GrayFrame =         render_camera(self._state_, config.camera, config.marker, params = config.render)
        write_frame(frame, out / artifacts["frame"])

        if self._overlay_:
            detection:  Detection = analyze(frame, self._state_.altitude, config.camera, config.marker, config.vision)
            draw_overlay(frame, detection).save(out / "overlay.png", format = "PNG")
            write_json(detection_record(detection), out / "detection.json")
            artifacts.update(overlay = "overlay.png", detection = "detection.json")

            self.__logger__.info(f"Detected {detection.figures.found or 'nothing'}; pose {detection.pose}")

        RunManifest(
            command =       "render",
            master_seed =   config.seed,
            config =        config_to_dict(config),
            arguments =     {
                                "north":    self._state_.north,
                                "east":     self._state_.east,
                                "altitude": self._state_.altitude,
                                "yaw":      self._state_.yaw,
                                "format":   self._format_,
                                "overlay":  self._overlay_
                            },
            artifacts =     artifacts
        ).write(out)

        self.__logger__.info(f"Rendered {self._state_} to {out / artifacts['frame']}")

        return 0

# Define main process driver.
def main(**kwargs) -> int:
    """# Execute Render.

    ## Returns:
        * int:  Exit code.
    """
    return Render(**kwargs).execute()
