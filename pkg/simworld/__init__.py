"""# descensus.simworld

Simulated plant: drone kinematics, downward-camera rendering of the marker scene, and the altitude
sensor.
"""

__all__ =   [
                # Geometry.
                "CameraModel",
                "MarkerGeometry",
                "ground_to_body",
                "project_ground_point",

                # State.
                "DroneState",
                "normalize_angle",

                # Dynamics.
                "DynamicsParams",
                "is_touchdown",
                "step_dynamics",

                # Sensor.
                "SensorModel",
                "sense_altitude",

                # Rendering.
                "MIN_RENDER_ALTITUDE",
                "RenderParams",
                "render_camera",

                # World.
                "World"
            ]

# Geometry & state (no intra-project dependencies; imported first).
from simworld.geometry  import CameraModel, MarkerGeometry, ground_to_body, project_ground_point
from simworld.state     import DroneState, normalize_angle

# Dynamics & sensor.
from simworld.dynamics  import DynamicsParams, is_touchdown, step_dynamics
from simworld.sensor    import SensorModel, sense_altitude

# Rendering.
from simworld.render    import MIN_RENDER_ALTITUDE, RenderParams, render_camera

# World.
from simworld.__base__  import World
