"""# descensus.simworld.base

The simulated world: drone, downward camera, altitude sensor and landing marker.
"""

__all__ = ["World"]

from logging            import Logger
from typing             import Optional, Tuple, TYPE_CHECKING

from numpy.random       import Generator

from simworld.dynamics  import DynamicsParams, is_touchdown, step_dynamics
from simworld.geometry  import CameraModel, MarkerGeometry, project_ground_point
from simworld.render    import MIN_RENDER_ALTITUDE, RenderParams, render_camera
from simworld.sensor    import SensorModel, sense_altitude
from simworld.state     import DroneState, normalize_angle
from utilities          import get_child
from vision.frames      import GrayFrame

if TYPE_CHECKING: from control.commands import ControlOutput

class World():
    """# World.

    Plant side of the landing loop. Owns the drone state and produces the two observation streams
    (camera frames, altitude readings) that cross to the device under test.
    """

    def __init__(self,
        camera:     CameraModel =       CameraModel(),
        marker:     MarkerGeometry =    MarkerGeometry(),
        sensor:     SensorModel =       SensorModel(),
        dynamics:   DynamicsParams =    DynamicsParams(),
        render:     RenderParams =      RenderParams(),
        **kwargs
    ):
        """# Instantiate World.

        ## Args:
            * camera    (CameraModel, optional):    Downward camera.
            * marker    (MarkerGeometry, optional): Landing marker geometry and pose.
            * sensor    (SensorModel, optional):    Altitude sensor.
            * dynamics  (DynamicsParams, optional): Kinematic model parameters.
            * render    (RenderParams, optional):   Rasterizer parameters.
        """
        # Declare logger.
        self.__logger__:    Logger =            get_child("world")

        # Define components.
        self._camera_:      CameraModel =       camera
        self._marker_:      MarkerGeometry =    marker
        self._sensor_:      SensorModel =       sensor
        self._dynamics_:    DynamicsParams =    dynamics
        self._render_:      RenderParams =      render

        # Initialize drone above the marker.
        self._state_:       DroneState =        DroneState.at(marker.north, marker.east, 7.0, marker.yaw)

    # PROPERTIES ===================================================================================

    @property
    def camera(self) -> CameraModel:
        """# Camera Model."""
        return self._camera_

    @property
    def marker(self) -> MarkerGeometry:
        """# Marker Geometry."""
        return self._marker_

    @property
    def state(self) -> DroneState:
        """# Current Drone State."""
        return self._state_

    @property
    def touchdown(self) -> bool:
        """# Touchdown reached?"""
        return is_touchdown(self._state_, self._dynamics_.touchdown_alt)

    # METHODS ======================================================================================

    def landing_error(self) -> Tuple[float, float, float]:
        """# Landing Error.

        ## Returns:
            * Tuple[float, float, float]:   Drone position relative to the marker center (north,
                                            east) [m] and heading relative to the marker yaw [rad].
        """
        return (
            self._state_.north - self._marker_.north,
            self._state_.east - self._marker_.east,
            normalize_angle(self._state_.yaw - self._marker_.yaw)
        )

    def marker_in_view(self) -> bool:
        """# Marker in View?

        Ground truth: the marker center projects inside the image.
        """
        if self._state_.altitude <= 0: return True

        u, v =  project_ground_point(
                    self._state_.north, self._state_.east, self._state_.altitude, self._state_.yaw,
                    self._camera_, self._marker_.north, self._marker_.east
                )
        return 0 <= u <= self._camera_.width - 1 and 0 <= v <= self._camera_.height - 1

    def observe(self,
        rng:    Generator
    ) -> Tuple[GrayFrame, float]:
        """# Observe.

        Render the camera frame and read the altitude sensor. Near the ground the camera is rendered
        from the minimum renderable altitude.

        ## Args:
            * rng   (Generator):    Random generator feeding sensor noise.

        ## Returns:
            * Tuple[GrayFrame, float]:  Camera frame and altitude reading [m].
        """
        altitude:   float =         sense_altitude(self._state_, self._sensor_, rng)
        viewpoint:  DroneState =    self._state_

        if viewpoint.altitude <= MIN_RENDER_ALTITUDE:
            viewpoint = viewpoint.evolve(down = -2 * MIN_RENDER_ALTITUDE)

        return render_camera(viewpoint, self._camera_, self._marker_, params = self._render_), altitude

    def reset(self,
        state:  Optional[DroneState] =  None
    ) -> DroneState:
        """# Reset World.

        ## Args:
            * state (DroneState, optional): Initial drone state. Defaults to hovering 7 m above the
                                            marker.

        ## Returns:
            * DroneState:   Initial state.
        """
        self._state_ =  state if state is not None else DroneState.at(self._marker_.north, self._marker_.east, 7.0, self._marker_.yaw)

        # Log for debugging.
        self.__logger__.debug(f"Reset world to {self._state_}")

        return self._state_

    def step(self,
        cmd:    "ControlOutput",
        dt:     float
    ) -> DroneState:
        """# Step.

        ## Args:
            * cmd   (ControlOutput):    Velocity command.
            * dt    (float):            Step duration [s].

        ## Returns:
            * DroneState:   New state.
        """
        self._state_ =  step_dynamics(self._state_, cmd, dt, self._dynamics_)
        return self._state_

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Object Representation."""
        return f"<World(camera = {self._camera_}, marker = {self._marker_}, state = {self._state_})>"
