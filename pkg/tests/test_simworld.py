"""# descensus.tests.test_simworld

Simulated plant: kinematics, altitude sensor, camera rendering and the world facade.
"""

from math           import pi, sqrt

from numpy.random   import default_rng
from pytest         import approx, mark, raises

from control        import ControlOutput
from simworld       import DroneState, DynamicsParams, is_touchdown, MarkerGeometry, \
                           MIN_RENDER_ALTITUDE, normalize_angle, project_ground_point, RenderParams, render_camera, \
                           SensorModel, sense_altitude, step_dynamics, World

# STATE ============================================================================================

@mark.parametrize("angle, expected", [(0.0, 0.0), (pi, pi), (-pi, pi), (2 * pi + 0.5, 0.5), (-4.0, 2 * pi - 4.0), (-0.5, -0.5)])
def test_normalize_angle(angle, expected):
    assert normalize_angle(angle) == approx(expected)

def test_state_rejects_bad_values():
    with raises(AssertionError): DroneState(down = 0.5)
    with raises(AssertionError): DroneState(yaw = 4.0)

# DYNAMICS =========================================================================================

def test_hold_keeps_pose():
    start = DroneState.at(1.0, -2.0, 5.0, 0.7)
    after = step_dynamics(start, ControlOutput(), 0.05)

    assert (after.north, after.east, after.altitude, after.yaw) == approx((1.0, -2.0, 5.0, 0.7))

@mark.parametrize("yaw, vx, vy, north, east", [(0.0, 1.0, 0.0, 0.1, 0.0), (pi / 2, 1.0, 0.0, 0.0, 0.1), (0.0, 0.0, 2.0, 0.0, 0.2)])
def test_body_velocity_rotates_into_world(yaw, vx, vy, north, east):
    after = step_dynamics(DroneState.at(0.0, 0.0, 5.0, yaw), ControlOutput(vx = vx, vy = vy), 0.1)

    assert (after.north, after.east) == approx((north, east), abs = 1e-12)

def test_descent_is_positive_down():
    assert step_dynamics(DroneState.at(0.0, 0.0, 5.0, 0.0), ControlOutput(vz = 1.0), 0.5).altitude == approx(4.5)

def test_yaw_wraps():
    after = step_dynamics(DroneState.at(0.0, 0.0, 5.0, 3.1), ControlOutput(omega_yaw = 1.0), 0.1)

    assert after.yaw == approx(3.2 - 2 * pi)

def test_turning_displacement_is_exact():
    # Half a turn at 1 m/s forward traces a semicircle of radius 1/rate.
    after = step_dynamics(DroneState.at(0.0, 0.0, 5.0, 0.0), ControlOutput(vx = 1.0, omega_yaw = 1.0), pi)

    assert (after.north, after.east) == approx((0.0, 2.0), abs = 1e-9)

def test_first_order_lag():
    params =    DynamicsParams(tau = 0.5)
    after =     step_dynamics(DroneState.at(0.0, 0.0, 5.0, 0.0), ControlOutput(vx = 1.0), 0.5, params)

    assert after.velocity[0] == approx(1.0 - 1 / 2.718281828459045)

def test_autoland_latches_and_touches_down():
    params =    DynamicsParams(land_speed = 0.5)
    state =     step_dynamics(DroneState.at(0.3, 0.0, 0.4, 0.0), ControlOutput(final_land = True), 0.1, params)

    assert state.autoland and state.altitude == approx(0.35)

    # Later commands are ignored once the landing procedure runs.
    state =     step_dynamics(state, ControlOutput(vx = 2.0, vz = -1.0), 0.1, params)
    assert state.north == approx(0.3) and state.altitude == approx(0.3)

    while not state.landed: state = step_dynamics(state, ControlOutput(), 0.1, params)

    assert state.altitude == 0.0 and state.velocity == (0.0, 0.0, 0.0)
    assert is_touchdown(state)
    assert step_dynamics(state, ControlOutput(vz = -1.0), 0.1, params) == state

def test_step_rejects_non_positive_dt():
    with raises(ValueError): step_dynamics(DroneState(), ControlOutput(), 0.0)

# SENSOR ===========================================================================================

def test_sensor_quantizes_to_centimeters(rng):
    readings =  [sense_altitude(DroneState.at(0.0, 0.0, 6.0, 0.0), SensorModel(), rng) for _ in range(2000)]

    assert all(round(r * 100) == approx(r * 100, abs = 1e-6) for r in readings)
    assert sum(readings) / len(readings) == approx(6.0, abs = 0.005)

def test_sensor_without_noise(rng):
    assert sense_altitude(DroneState.at(0.0, 0.0, 5.4321, 0.0), SensorModel(altitude_noise_sigma = 0.0), rng) == 5.43

def test_sensor_clamps_at_ground(rng):
    readings =  [sense_altitude(DroneState.at(0.0, 0.0, 0.0, 0.0), SensorModel(altitude_noise_sigma = 0.5), rng) for _ in range(100)]

    assert min(readings) == 0.0

def test_sensor_stream_independent_of_sigma():
    state =     DroneState.at(0.0, 0.0, 5.0, 0.0)
    quiet, noisy = default_rng(1), default_rng(1)

    for _ in range(10):
        sense_altitude(state, SensorModel(altitude_noise_sigma = 0.0), quiet)
        sense_altitude(state, SensorModel(), noisy)

    assert quiet.random() == noisy.random()

# GEOMETRY & RENDERING =============================================================================

def test_project_ground_point(camera):
    cx, cy =    camera.center

    assert project_ground_point(0.0, 0.0, 5.0, 0.0, camera, 0.0, 0.0) == (cx, cy)
    # One meter ahead of the nose is above the image center.
    assert project_ground_point(0.0, 0.0, 5.0, 0.0, camera, 1.0, 0.0) == approx((cx, cy - 124.0))
    # Facing east, north is to the left.
    assert project_ground_point(0.0, 0.0, 5.0, pi / 2, camera, 1.0, 0.0) == approx((cx - 124.0, cy))

def test_marker_bounding_radius(marker):
    assert marker.bounding_radius == approx(sqrt(1.5 ** 2 + 0.5 ** 2))

def test_render_centered_marker(camera, marker):
    frame =     render_camera(DroneState.at(0.0, 0.0, 7.0, 0.0), camera, marker)
    cx, cy =    camera.center
    scale =     camera.f_px / 7.0

    # Ring stroke at 0.8 m from the center, square ahead along the axis, hole inside the ring.
    assert frame.data[round(cy), round(cx + 0.8 * scale)] == 40
    assert frame.data[round(cy), round(cx)] == 200
    assert frame.data[0, 0] == 200
    assert frame.data[round(cy), round(cx - 1.3 * scale)] == 40
    assert frame.data[round(cy), round(cx + 1.3 * scale)] == 40

def test_render_out_of_view(camera, marker):
    frame =     render_camera(DroneState.at(40.0, 0.0, 7.0, 0.0), camera, marker)

    assert (frame.data == 200).all()

def test_render_gradient_brightens_right_edge(camera, marker):
    frame =     render_camera(DroneState.at(40.0, 0.0, 7.0, 0.0), camera, marker, params = RenderParams(illumination_gradient = 40.0))

    assert (frame.data[:, 0] == 180).all() and (frame.data[:, -1] == 220).all()

def test_render_rejects_ground_level(camera, marker):
    with raises(ValueError): render_camera(DroneState.at(0.0, 0.0, MIN_RENDER_ALTITUDE, 0.0), camera, marker)

# WORLD ============================================================================================

def test_world_observe_and_step(small_camera, rng):
    world =     World(camera = small_camera, marker = MarkerGeometry(north = 1.0, east = -1.0, yaw = 0.5))

    assert world.state == DroneState.at(1.0, -1.0, 7.0, 0.5)
    assert world.landing_error() == (0.0, 0.0, 0.0) and world.marker_in_view()

    frame, altitude =   world.observe(rng)

    assert (frame.width, frame.height) == (640, 360)
    assert altitude == approx(7.0, abs = 0.15)

    world.step(ControlOutput(vx = 1.0), 1.0)
    assert world.landing_error()[:2] == approx((0.8775825618903728, 0.479425538604203))

def test_world_marker_out_of_view(small_camera):
    world =     World(camera = small_camera)
    world.reset(DroneState.at(20.0, 0.0, 5.0, 0.0))

    assert not world.marker_in_view()

def test_world_renders_near_ground(small_camera, rng):
    world =     World(camera = small_camera)
    world.reset(DroneState.at(0.0, 0.0, 0.02, 0.0))

    frame, _ =  world.observe(rng)
    assert frame.width == 640 and world.touchdown is False

    world.step(ControlOutput(vz = 1.0), 0.1)
    assert world.touchdown
