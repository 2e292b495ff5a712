"""# descensus.harness.dut

Device under test: the onboard side of the landing loop. Reads altitude and trigger messages from the
byte transport and camera frames from the frame channel, runs marker detection and the landing
controller, and answers every frame with a downlink command.
"""

__all__ = ["Dut"]

from logging            import Logger
from typing             import Callable, List, Optional, Tuple

from control            import AltitudeFilter, blind_descent_command, compute_command, ControlOutput, ControlParams, \
                               hold_command, LandingStage, advance_stage, pixel_to_metric, PoseError
from harness.exceptions import LinkClosed, TransportError
from harness.transports import FrameChannel, Transport
from protocol           import AltitudeCentimeters, AltitudeMeters, decode_altitude, encode_downlink, Land, \
                               START_CODE, Trigger, UplinkScanner, Velocity, YawRate
from simworld           import CameraModel, MarkerGeometry
from utilities          import get_child
from vision             import analyze, Detection, GrayFrame, VisionParams

class Dut():
    """# Device Under Test.

    ## Attributes:
        * stage         (LandingStage):                     Current landing stage.
        * armed         (bool):                             Start trigger received.
        * altitude      (Optional[float]):                  Latest (filtered) altitude [m].
        * transitions   (List[Tuple[int, LandingStage]]):   Stage entered at each period index.

    ## Methods:
        * step(timeout) -> ControlOutput:   Serve one control period.
        * run(timeout) -> None:             Serve periods until the link closes.
    """

    def __init__(self,
        uplink:             Transport,
        frames:             FrameChannel,
        camera:             CameraModel =                                   CameraModel(),
        marker:             MarkerGeometry =                                MarkerGeometry(),
        vision:             VisionParams =                                  VisionParams(),
        control:            ControlParams =                                 ControlParams(),
        detection_sink:     Optional[Callable[[int, Detection], None]] =    None,
        **kwargs
    ):
        """# Instantiate Device Under Test.

        ## Args:
            * uplink            (Transport):                Device end of the byte transport.
            * frames            (FrameChannel):             Device end of the frame channel.
            * camera            (CameraModel, optional):    Camera model.
            * marker            (MarkerGeometry, optional): Marker geometry (sizes only are used).
            * vision            (VisionParams, optional):   Detection parameters.
            * control           (ControlParams, optional):  Controller parameters.
            * detection_sink    (Callable, optional):       Receives (period, detection) for every
                                                            frame analyzed.
        """
        # Declare logger.
        self.__logger__:        Logger =                            get_child("dut")

        # Define links.
        self._uplink_:          Transport =                         uplink
        self._frames_:          FrameChannel =                      frames

        # Define models & parameters.
        self._camera_:          CameraModel =                       camera
        self._marker_:          MarkerGeometry =                    marker
        self._vision_:          VisionParams =                      vision
        self._control_:         ControlParams =                     control
        self._detection_sink_:  Optional[Callable] =                detection_sink

        # Initialize state.
        self._scanner_:         UplinkScanner =                     UplinkScanner()
        self._filter_:          AltitudeFilter =                    AltitudeFilter(control.altitude_window)
        self._meters_:          Optional[AltitudeMeters] =          None
        self._altitude_:        Optional[float] =                   None
        self._fresh_altitude_:  bool =                              False
        self._armed_:           bool =                              False
        self._stage_:           LandingStage =                      LandingStage.ALIGN
        self._period_:          int =                               0
        self._transitions_:     List[Tuple[int, LandingStage]] =    [(0, LandingStage.ALIGN)]

    # PROPERTIES ===================================================================================

    @property
    def altitude(self) -> Optional[float]:
        """# Latest Altitude [m]."""
        return self._altitude_

    @property
    def armed(self) -> bool:
        """# Start trigger received?"""
        return self._armed_

    @property
    def diagnostics(self) -> dict:
        """# Uplink Scanner Diagnostics."""
        return self._scanner_.diagnostics

    @property
    def stage(self) -> LandingStage:
        """# Current Landing Stage."""
        return self._stage_

    @property
    def transitions(self) -> List[Tuple[int, LandingStage]]:
        """# Stage Transitions (period, stage entered)."""
        return list(self._transitions_)

    # METHODS ======================================================================================

    def run(self,
        timeout:    Optional[float] =   None
    ) -> None:
        """# Run.

        Serve control periods until the station closes the link. Any other failure closes this
        side's endpoints so the station notices immediately.

        ## Args:
            * timeout   (float, optional):  Seconds to wait for each frame and altitude pair.
        """
        try:
            while True: self.step(timeout)

        except LinkClosed:      self.__logger__.debug("Link closed by station")

        except Exception as e:
            self.__logger__.error(f"Device side failed: {e}", exc_info = True)
            self._uplink_.close()
            self._frames_.close()

    def step(self,
        timeout:    Optional[float] =   None
    ) -> ControlOutput:
        """# Step.

        Serve one control period: take one frame and the altitude pair sent with it, then answer
        with one command.

        ## Args:
            * timeout   (float, optional):  Seconds to wait for the frame and altitude pair.

        ## Returns:
            * ControlOutput:    Command sent to the station.

        ## Raises:
            * LinkClosed:       If the station closed the link.
            * TransportError:   If the frame or altitude does not arrive in time.
        """
        frame:  GrayFrame =     self._frames_.receive_frame(timeout)

        # Every frame is preceded by its altitude pair.
        self._fresh_altitude_ = False
        while not self._fresh_altitude_:
            chunk:  bytes =     self._uplink_.receive(timeout)
            if not chunk: raise TransportError(f"No altitude received within {timeout} s")
            self._ingest_(chunk)

        command:    ControlOutput = self._decide_(frame)

        self._send_(command)
        self._period_ += 1

        return command

    # HELPERS ======================================================================================

    def _advance_(self,
        err:    PoseError
    ) -> None:
        """# Advance landing stage, logging transitions."""
        stage:  LandingStage =  advance_stage(self._stage_, err, self._control_)

        if stage != self._stage_:
            self.__logger__.info(f"Period {self._period_}: {self._stage_.name} -> {stage.name} at {err.h:.2f} m")
            self._transitions_.append((self._period_, stage))
            self._stage_ = stage

    def _decide_(self,
        frame:  GrayFrame
    ) -> ControlOutput:
        """# Decide command for the current frame."""
        # Hover until the station triggers the procedure.
        if not self._armed_: return hold_command()

        h:      float = self._altitude_

        # Vertical landing procedure engaged.
        if self._stage_ >= LandingStage.FINAL:
            self._advance_(PoseError(h = h))
            return ControlOutput(final_land = True)

        detection:  Optional[Detection] =   analyze(frame, h, self._camera_, self._marker_, self._vision_) if h > 0 else None

        if detection is not None and self._detection_sink_ is not None: self._detection_sink_(self._period_, detection)

        # Marker found: proportional control.
        if detection is not None and detection.pose is not None:
            err:    PoseError = pixel_to_metric(detection.pose, h, self._camera_)
            self._advance_(err)

            return ControlOutput(final_land = True) if self._stage_ >= LandingStage.FINAL else \
                   compute_command(err, self._stage_, self._control_)

        # Marker lost while descending: continue on the altitude alone.
        if self._stage_ is LandingStage.DESCEND:
            self._advance_(PoseError(h = h))

            return ControlOutput(final_land = True) if self._stage_ >= LandingStage.FINAL else \
                   blind_descent_command(h, self._control_)

        return hold_command()

    def _ingest_(self,
        chunk:  bytes
    ) -> None:
        """# Ingest uplink bytes."""
        for message in self._scanner_.feed(chunk):

            match message:

                case Trigger(code = code) if code == START_CODE:
                    if not self._armed_: self.__logger__.info("Landing procedure triggered")
                    self._armed_ =  True

                case Trigger(code = code):
                    self.__logger__.warning(f"Ignoring unknown trigger code {code:03d}")

                case AltitudeMeters():
                    self._meters_ = message

                case AltitudeCentimeters():
                    if self._meters_ is None:
                        self.__logger__.warning("Centimeters received without meters; dropped")
                        continue

                    self._altitude_ =       self._filter_.update(decode_altitude(self._meters_, message))
                    self._meters_ =         None
                    self._fresh_altitude_ = True

    def _send_(self,
        command:    ControlOutput
    ) -> None:
        """# Encode and send command."""
        if command.final_land:
            self._uplink_.send(encode_downlink(Land()))
            return

        self._uplink_.send(
            encode_downlink(Velocity(command.vx, command.vy, command.vz)) + encode_downlink(YawRate(command.omega_yaw))
        )

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Object Representation."""
        return f"<Dut(stage = {self._stage_.name}, armed = {self._armed_}, altitude = {self._altitude_})>"
