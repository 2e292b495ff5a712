"""# descensus.harness.trial

Single landing trial: the station owns the simulated world, feeds the device under test with
altitude messages and camera frames once per control period, applies the returned command, and
judges the outcome.
"""

__all__ = ["FailureReason", "Outcome", "Station", "TrajectorySample", "TrialResult", "run_trial", "sample_start"]

from dataclasses            import asdict, dataclass, replace
from enum                   import Enum
from logging                import Logger
from math                   import cos, pi, sin, sqrt
from threading              import Thread
from typing                 import Any, Callable, Dict, List, Optional

from numpy.random           import default_rng, Generator

from control                import ControlOutput
from harness.config         import TrialConfig
from harness.dut            import Dut
from harness.exceptions     import TransportError
from harness.transports     import attach_transport, FrameChannel, Link, Transport
from protocol               import encode_altitude, encode_trigger, Land, LineFramer, MalformedMessage, \
                                   parse_downlink, START_CODE, Velocity, YawRate
from simworld               import DroneState, World
from utilities              import get_child
from vision                 import Detection, GrayFrame

LOGGER: Logger =    get_child("trial")

class Outcome(str, Enum):
    """# Trial Outcome."""
    SUCCESS =   "Success"
    FAILURE =   "Failure"

class FailureReason(str, Enum):
    """# Failure Reason."""
    MARKER_LOST =       "MarkerLost"
    TIMEOUT =           "Timeout"
    TRANSPORT_ERROR =   "TransportError"

@dataclass(frozen = True)
class TrajectorySample:
    """# Trajectory Sample.

    State after a control period, with the command applied during it.
    """
    time:       float
    north:      float
    east:       float
    altitude:   float
    yaw:        float
    vx:         float
    vy:         float
    vz:         float
    omega_yaw:  float
    final_land: bool

@dataclass(frozen = True)
class TrialResult:
    """# Trial Result.

    ## Attributes:
        * seed              (int):                              Trial seed.
        * outcome           (Outcome):                          Success or failure.
        * reason            (Optional[FailureReason]):          Failure reason.
        * final_err_x       (float):                            Final north error vs the marker [m].
        * final_err_y       (float):                            Final east error vs the marker [m].
        * final_err_theta   (float):                            Final yaw error vs the marker [rad].
        * duration          (float):                            Simulated time [s].
        * periods           (int):                              Control periods served.
        * start             (Dict[str, float]):                 Start north, east, altitude, yaw.
        * trajectory        (Optional[List[TrajectorySample]]): Sampled states, if recorded.
    """
    seed:               int
    outcome:            Outcome
    reason:             Optional[FailureReason]
    final_err_x:        float
    final_err_y:        float
    final_err_theta:    float
    duration:           float
    periods:            int
    start:              Dict[str, float]
    trajectory:         Optional[List[TrajectorySample]] =  None

    def __post_init__(self) -> None:
        """# Verify Result."""
        assert (self.outcome is Outcome.SUCCESS) == (self.reason is None), "Failures need a reason, successes none"

    @property
    def success(self) -> bool:
        """# Trial succeeded?"""
        return self.outcome is Outcome.SUCCESS

    def to_dict(self,
        trajectory: bool =  False
    ) -> Dict[str, Any]:
        """# JSON-Ready Result.

        ## Args:
            * trajectory    (bool, optional):   Include the trajectory. Defaults to False.
        """
        record: Dict[str, Any] =    {
                                        "seed":             self.seed,
                                        "outcome":          self.outcome.value,
                                        "reason":           None if self.reason is None else self.reason.value,
                                        "final_err_x":      self.final_err_x,
                                        "final_err_y":      self.final_err_y,
                                        "final_err_theta":  self.final_err_theta,
                                        "duration":         self.duration,
                                        "periods":          self.periods,
                                        "start":            dict(self.start)
                                    }

        if trajectory and self.trajectory is not None: record["trajectory"] = [asdict(sample) for sample in self.trajectory]

        return record

    def without_trajectory(self) -> "TrialResult":
        """# Copy without Trajectory."""
        return replace(self, trajectory = None)

def sample_start(
    rng:    Generator,
    config: TrialConfig
) -> DroneState:
    """# Sample Start State.

    Altitude uniform in the configured range; lateral offset from the marker uniform over the disc
    in which the whole marker stays inside the camera view with the configured margin; yaw uniform
    over the configured range.

    ## Args:
        * rng       (Generator):    Random generator (draws four variates).
        * config    (TrialConfig):  Trial configuration.

    ## Returns:
        * DroneState:   Hovering start state.
    """
    altitude:   float = float(rng.uniform(*config.start_altitude_range))
    half_w, half_h =    config.camera.half_extent_m(altitude)
    radius:     float = max(0.0, (1 - config.view_margin) * min(half_w, half_h) - config.marker.bounding_radius)

    # Area-uniform radius over the disc.
    rho:        float = radius * sqrt(float(rng.uniform()))
    bearing:    float = float(rng.uniform(-pi, pi))
    yaw:        float = float(rng.uniform(*config.yaw_range))

    return DroneState.at(
        north =     config.marker.north + rho * cos(bearing),
        east =      config.marker.east + rho * sin(bearing),
        altitude =  altitude,
        yaw =       yaw
    )

class Station():
    """# Station.

    Ground side of the loop: owns the world and runs the per-period lockstep against the device.
    """

    def __init__(self,
        config:         TrialConfig,
        uplink:         Transport,
        frames:         FrameChannel,
        pump:           Optional[Callable[[], Any]] =               None,
        frame_sink:     Optional[Callable[[int, GrayFrame], None]] = None,
        record:         bool =                                      False,
        **kwargs
    ):
        """# Instantiate Station.

        ## Args:
            * config        (TrialConfig):          Trial configuration.
            * uplink        (Transport):            Station end of the byte transport.
            * frames        (FrameChannel):         Station end of the frame channel.
            * pump          (Callable, optional):   Serves one device period when the device is
                                                    co-scheduled in this thread.
            * frame_sink    (Callable, optional):   Receives (period, frame) for every frame sent.
            * record        (bool, optional):       Record the trajectory. Defaults to False.
        """
        # Declare logger.
        self.__logger__:    Logger =                        get_child("station")

        # Define configuration & links.
        self._config_:      TrialConfig =                   config
        self._uplink_:      Transport =                     uplink
        self._frames_:      FrameChannel =                  frames
        self._pump_:        Optional[Callable] =            pump
        self._frame_sink_:  Optional[Callable] =            frame_sink
        self._record_:      bool =                          record

        # Define world.
        self._world_:       World =                         World(
                                                                camera =    config.camera,
                                                                marker =    config.marker,
                                                                sensor =    config.sensor,
                                                                dynamics =  config.dynamics,
                                                                render =    config.render
                                                            )
        self._framer_:      LineFramer =                    LineFramer()

    @property
    def world(self) -> World:
        """# Simulated World."""
        return self._world_

    def execute(self,
        rng:    Generator,
        start:  DroneState
    ) -> TrialResult:
        """# Execute Trial.

        ## Args:
            * rng   (Generator):    Random generator feeding sensor noise.
            * start (DroneState):   Start state.

        ## Returns:
            * TrialResult:  Outcome and final errors.
        """
        config:     TrialConfig =               self._config_
        dt:         float =                     config.control_period
        limit:      int =                       round(config.timeout / dt)
        trajectory: List[TrajectorySample] =    []
        reason:     Optional[FailureReason] =   None
        unseen:     int =                       0
        period:     int =                       0

        self._world_.reset(start)

        try:
            # Start the landing procedure.
            self._uplink_.send(encode_trigger(START_CODE))

            while True:

                # Observe and transmit altitude, then the frame.
                frame, altitude =   self._world_.observe(rng)
                meters, centimeters =   encode_altitude(min(altitude, 99.99))
                self._uplink_.send(meters + centimeters)
                self._frames_.send_frame(frame)

                if self._frame_sink_ is not None: self._frame_sink_(period, frame)

                # Co-scheduled device serves its period now.
                if self._pump_ is not None: self._pump_()

                command:    ControlOutput = self._read_command_()
                state:      DroneState =    self._world_.step(command, dt)
                period +=   1

                if self._record_:
                    trajectory.append(TrajectorySample(
                        period * dt, state.north, state.east, state.altitude, state.yaw,
                        command.vx, command.vy, command.vz, command.omega_yaw, command.final_land
                    ))

                # Judge.
                if self._world_.touchdown: break

                unseen =    0 if self._world_.marker_in_view() else unseen + 1
                if unseen > config.loss_frames:
                    reason =    FailureReason.MARKER_LOST
                    break

                if period >= limit:
                    reason =    FailureReason.TIMEOUT
                    break

        except (TransportError, MalformedMessage) as e:
            self.__logger__.error(f"Transport failure in period {period}: {e}")
            reason =    FailureReason.TRANSPORT_ERROR

        err_x, err_y, err_theta =   self._world_.landing_error()

        return TrialResult(
            seed =              config.seed,
            outcome =           Outcome.SUCCESS if reason is None else Outcome.FAILURE,
            reason =            reason,
            final_err_x =       err_x,
            final_err_y =       err_y,
            final_err_theta =   err_theta,
            duration =          round(period * dt, 9),
            periods =           period,
            start =             {"north": start.north, "east": start.east, "altitude": start.altitude, "yaw": start.yaw},
            trajectory =        trajectory if self._record_ else None
        )

    def _read_command_(self) -> ControlOutput:
        """# Read one complete command (velocity and yaw rate, or land) from the device."""
        velocity:   Optional[Velocity] =    None
        yaw_rate:   Optional[YawRate] =     None

        while True:
            chunk:  bytes = self._uplink_.receive(self._config_.transport.timeout)
            if not chunk: raise TransportError(f"No command received within {self._config_.transport.timeout} s")

            for line in self._framer_.feed(chunk):

                match parse_downlink(line):
                    case Land():                    return ControlOutput(final_land = True)
                    case Velocity() as message:     velocity = message
                    case YawRate() as message:      yaw_rate = message

                if velocity is not None and yaw_rate is not None:
                    return ControlOutput(velocity.vx, velocity.vy, velocity.vz, yaw_rate.omega)

def run_trial(
    config:         TrialConfig,
    frame_sink:     Optional[Callable[[int, GrayFrame], None]] =    None,
    detection_sink: Optional[Callable[[int, Detection], None]] =    None,
    record:         bool =                                          False
) -> TrialResult:
    """# Run Trial.

    ## Args:
        * config            (TrialConfig):          Trial configuration.
        * frame_sink        (Callable, optional):   Receives (period, frame) for every frame.
        * detection_sink    (Callable, optional):   Receives (period, detection) from a local
                                                    device.
        * record            (bool, optional):       Record the trajectory. Defaults to False.

    ## Returns:
        * TrialResult:  Trial outcome.

    ## Raises:
        * TransportError:   If the link cannot be opened.
    """
    rng:        Generator =     default_rng(config.seed)
    start:      DroneState =    sample_start(rng, config)
    link:       Link =          attach_transport(params = config.transport)
    dut:        Optional[Dut] = None
    thread:     Optional[Thread] =  None

    # Log for debugging.
    LOGGER.debug(f"Trial {config.seed} starting from {start}")

    if link.local_device:
        dut =   Dut(
                    uplink =            link.device,
                    frames =            link.device_frames,
                    camera =            config.camera,
                    marker =            config.marker,
                    vision =            config.vision,
                    control =           config.control,
                    detection_sink =    detection_sink
                )

        if link.threaded:
            thread =    Thread(target = dut.run, kwargs = {"timeout": config.transport.timeout}, name = f"dut-{config.seed}", daemon = True)
            thread.start()

    station:    Station =   Station(
                                config =        config,
                                uplink =        link.station,
                                frames =        link.station_frames,
                                pump =          (lambda: dut.step(config.transport.timeout)) if dut is not None and thread is None else None,
                                frame_sink =    frame_sink,
                                record =        record
                            )

    try:        result: TrialResult =   station.execute(rng, start)
    finally:
        # The device thread sees the station close its ends and stops.
        link.station.close()
        link.station_frames.close()
        if thread is not None: thread.join(config.transport.timeout)
        link.close()

    LOGGER.debug(f"Trial {config.seed}: {result.outcome.value} {result.reason.value if result.reason else ''} after {result.duration:.2f} s")

    return result
