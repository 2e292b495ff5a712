"""# descensus.tests.test_vision

Image pipeline: grayscale, blur, adaptive threshold, figure classification, pose and detection.
"""

from math           import ceil, degrees, pi, radians, sqrt
from statistics     import median
from time           import perf_counter

from numpy          import abs as np_abs, array, diff, full, uint8, zeros
from numpy.random   import default_rng
from pytest         import approx, mark, raises

from conftest       import render_view
from simworld       import CameraModel, DroneState, MarkerGeometry, normalize_angle, project_ground_point, RenderParams, render_camera
from vision         import BlobStats, classify_figures, detect, estimate_pose, expected_sizes, FigureSet, \
                           gaussian_blur, GrayFrame, label_components, threshold_surface, \
                           tile_means, to_grayscale, adaptive_threshold, VisionParams, analyze, detection_record, \
                           draw_overlay, read_pgm, write_frame
from vision.filters import gaussian_kernel

def _angle_error_(a: float, b: float) -> float:
    return abs(normalize_angle(a - b))

# GRAYSCALE ========================================================================================

def test_grayscale_white_maps_to_max():
    assert (to_grayscale(full((4, 5, 3), 255, dtype = uint8)).data == 255).all()

@mark.parametrize("pixel, expected", [((255, 0, 0), 76), ((0, 255, 0), 150), ((0, 0, 255), 29), ((0, 0, 0), 0)])
def test_grayscale_bt601_weights(pixel, expected):
    assert to_grayscale(array([[pixel]], dtype = uint8)).data[0, 0] == expected

# BLUR =============================================================================================

def test_blur_preserves_uniform_frame():
    assert (gaussian_blur(GrayFrame.uniform(40, 30, 100)).data == 100).all()

def test_blur_of_impulse_is_kernel():
    data =          zeros((21, 21), dtype = uint8)
    data[10, 10] =  255
    kernel =        gaussian_kernel(2, 1.0)
    blurred =       gaussian_blur(GrayFrame(data), 2, 1.0).data.astype(float)

    assert kernel.sum() == approx(1.0, abs = 1e-15)
    assert np_abs(blurred[8:13, 8:13] - 255 * kernel[:, None] * kernel[None, :]).max() <= 0.5
    assert blurred[:8].sum() == 0 and blurred[13:].sum() == 0

def test_blur_semigroup(camera, marker):
    frame =     render_view(camera, marker, altitude = 6.0)
    twice =     gaussian_blur(gaussian_blur(frame, 4, 1.0), 4, 1.0).data.astype(int)
    once =      gaussian_blur(frame, 6, sqrt(2.0)).data.astype(int)

    assert np_abs(twice - once).max() <= 2

def test_blur_preserves_mean():
    frame =     GrayFrame(default_rng(5).integers(0, 256, (48, 64), dtype = uint8))
    assert abs(gaussian_blur(frame).data.mean() - frame.data.mean()) <= 1.0

@mark.parametrize("radius, sigma", [(0, 1.0), (2, 0.0), (2, -1.0), (8, 1.0)])
def test_blur_rejects_invalid_parameters(radius, sigma):
    with raises(ValueError): gaussian_blur(GrayFrame.uniform(16, 8, 0), radius, sigma)

# TILE MEANS =======================================================================================

def test_tile_means_uniform():
    grid =  tile_means(GrayFrame.uniform(100, 70, 42), 32)

    assert (grid.rows, grid.cols) == (3, 4)
    assert (grid.means == 42).all()

def test_tile_means_single_tile():
    assert tile_means(GrayFrame(array([[0, 255], [255, 0]], dtype = uint8)), 2).means[0, 0] == 127.5

@mark.parametrize("width, height, tile", [(64, 64, 16), (70, 50, 32), (33, 17, 5)])
def test_tile_means_match_brute_force(width, height, tile):
    data =  default_rng(width * height).integers(0, 256, (height, width), dtype = uint8)
    grid =  tile_means(GrayFrame(data), tile)

    assert (grid.rows, grid.cols) == (ceil(height / tile), ceil(width / tile))

    for r in range(grid.rows):
        for c in range(grid.cols):
            block = data[r * tile:(r + 1) * tile, c * tile:(c + 1) * tile].astype(int)
            assert grid.means[r, c] == block.sum() / block.size

@mark.parametrize("tile", [0, 65])
def test_tile_means_rejects_invalid_size(tile):
    with raises(ValueError): tile_means(GrayFrame.uniform(80, 64, 0), tile)

# ADAPTIVE THRESHOLD ===============================================================================

def _bilinear_oracle_(grid, x: float, y: float) -> float:
    """Bilinear interpolation of the tile means at (x, y), clamped outside the outer centers."""
    def bracket(value, centers):
        if len(centers) == 1 or value <= centers[0]:    return 0, 0, 0.0
        if value >= centers[-1]:                        return len(centers) - 1, len(centers) - 1, 0.0
        i = max(k for k in range(len(centers)) if centers[k] <= value)
        if i == len(centers) - 1:                       return i, i, 0.0
        return i, i + 1, (value - centers[i]) / (centers[i + 1] - centers[i])

    r0, r1, ty =    bracket(y, list(grid.row_centers))
    c0, c1, tx =    bracket(x, list(grid.col_centers))
    m =             grid.means

    return (1 - ty) * ((1 - tx) * m[r0, c0] + tx * m[r0, c1]) + ty * ((1 - tx) * m[r1, c0] + tx * m[r1, c1])

def test_threshold_uniform_frame_is_background():
    frame = GrayFrame.uniform(64, 48, 100)
    mask =  adaptive_threshold(frame, tile_means(frame, 16), 10)

    assert not mask.data.any()
    assert threshold_surface(tile_means(frame, 16), 64, 48, 10) == approx(full((48, 64), 90.0))

def test_threshold_at_tile_center_equals_tile_level():
    frame =     GrayFrame(default_rng(11).integers(0, 256, (60, 60), dtype = uint8))
    grid =      tile_means(frame, 15)
    surface =   threshold_surface(grid, 60, 60, 15)

    for r, y in enumerate(grid.row_centers):
        for c, x in enumerate(grid.col_centers):
            assert surface[int(y), int(x)] == approx(grid.means[r, c] - 15, abs = 1e-9)

@mark.parametrize("width, height, tile", [(64, 64, 16), (70, 45, 32), (50, 40, 7)])
def test_threshold_matches_bilinear_oracle(width, height, tile):
    frame =     GrayFrame(default_rng(tile).integers(0, 256, (height, width), dtype = uint8))
    grid =      tile_means(frame, tile)
    surface =   threshold_surface(grid, width, height, 15)

    for y in range(height):
        for x in range(width):
            assert surface[y, x] == approx(_bilinear_oracle_(grid, x, y) - 15, abs = 1e-9)

def test_threshold_monotonic_across_edge():
    data =          zeros((64, 64), dtype = uint8)
    data[:, 32:] =  255
    surface =       threshold_surface(tile_means(GrayFrame(data), 16), 64, 64, 15)

    assert (diff(surface, axis = 1) >= -1e-9).all()
    assert surface[:, 0] == approx(full(64, -15.0)) and surface[:, -1] == approx(full(64, 240.0))

def test_threshold_light_polarity():
    data =          full((32, 32), 40, dtype = uint8)
    data[8:24, 8:24] = 200
    frame =         GrayFrame(data)

    dark =  adaptive_threshold(frame, tile_means(frame, 16), 15, dark_foreground = True).data
    light = adaptive_threshold(frame, tile_means(frame, 16), 15, dark_foreground = False).data

    assert light[16, 16] and not dark[16, 16]
    assert not (dark & light).any()

# FIGURES ==========================================================================================

def test_expected_sizes_pinhole(camera, marker):
    expect =    expected_sizes(7.0, CameraModel(f_px = 700.0), marker)
    doubled =   expected_sizes(14.0, CameraModel(f_px = 700.0), marker)
    unit =      expected_sizes(700.0, CameraModel(f_px = 700.0), marker)

    assert expect.ring_inner_px == approx(70.0)
    assert doubled.square_side_px == approx(expect.square_side_px / 2)
    assert doubled.rect_long_px == approx(expect.rect_long_px / 2)
    assert unit.ring_outer_px == approx(marker.ring_outer_r)

@mark.parametrize("altitude", [0.0, -1.0])
def test_expected_sizes_rejects_non_positive_altitude(camera, marker, altitude):
    with raises(ValueError): expected_sizes(altitude, camera, marker)

def test_classify_empty_blob_list(camera, marker):
    assert classify_figures([], expected_sizes(7.0, camera, marker)) == FigureSet()

def _blobs_(frame, params = VisionParams()):
    blurred =   gaussian_blur(frame, params.blur_radius, params.blur_sigma)
    mask =      adaptive_threshold(blurred, tile_means(blurred, params.tile_size), params.threshold_offset)
    return [blob for blob in label_components(mask) if blob.area >= params.noise_floor]

def test_classify_rendered_marker(camera, marker):
    figures =   classify_figures(_blobs_(render_view(camera, marker)), expected_sizes(7.0, camera, marker))

    assert figures.found == ["ring", "square", "rectangle"]

def test_classify_rejects_oversized_blobs(camera, marker):
    # Blobs three times the expected size.
    figures =   classify_figures(_blobs_(render_view(camera, marker)), expected_sizes(21.0, camera, marker, 0.25))

    assert figures.found == []

# POSE =============================================================================================

def test_pose_needs_ring_and_another_figure():
    ring =  BlobStats(1, 100, (50.0, 50.0), (40, 40, 60, 60))

    assert estimate_pose(FigureSet(ring = ring)) is None
    assert estimate_pose(FigureSet(square = ring)) is None

def test_pose_from_square_and_rectangle():
    ring =      BlobStats(1, 100, (50.0, 50.0), (40, 40, 60, 60))
    square =    BlobStats(2, 25,  (20.0, 50.0), (18, 48, 22, 52))
    rectangle = BlobStats(3, 40,  (80.0, 50.0), (78, 45, 82, 55), mu20 = 2.0, mu02 = 8.0)
    pose =      estimate_pose(FigureSet(ring, square, rectangle))

    assert (pose.x_px, pose.y_px) == (50.0, 50.0)
    assert pose.theta == approx(0.0)

    # Square -> rectangle pointing up the image (y decreasing) is +pi/2.
    up =        estimate_pose(FigureSet(ring, BlobStats(2, 25, (50.0, 80.0), (48, 78, 52, 82)), BlobStats(3, 40, (50.0, 20.0), (45, 18, 55, 22))))
    assert up.theta == approx(pi / 2)

def test_pose_single_figure_fallbacks():
    ring =      BlobStats(1, 100, (50.0, 50.0), (40, 40, 60, 60))
    # Long side vertical: marker axis horizontal, rectangle to the right of the ring.
    rectangle = BlobStats(3, 40,  (80.0, 50.0), (78, 45, 82, 55), mu20 = 1.0, mu02 = 8.0)
    square =    BlobStats(2, 25,  (20.0, 50.0), (18, 48, 22, 52), mu20 = 2.0, mu02 = 2.0)

    assert estimate_pose(FigureSet(ring = ring, rectangle = rectangle)).theta == approx(0.0, abs = 1e-12)
    assert estimate_pose(FigureSet(ring = ring, square = square)).theta == approx(0.0, abs = 1e-12)

@mark.parametrize("yaw", [0.0, pi / 4, -2.0, 3.0])
def test_pose_recovers_rendered_yaw(camera, marker, yaw):
    pose =      detect(render_view(camera, marker, yaw = yaw), 7.0, camera, marker, VisionParams())
    cx, cy =    camera.center

    assert abs(pose.x_px - cx) <= 2 and abs(pose.y_px - cy) <= 2
    assert degrees(_angle_error_(pose.theta, yaw)) <= 2

# DETECTION ========================================================================================

def test_detect_uniform_ground(camera, marker):
    assert detect(GrayFrame.uniform(camera.width, camera.height, 200), 7.0, camera, marker, VisionParams()) is None

def test_detect_rejects_non_positive_altitude(camera, marker):
    with raises(ValueError): detect(GrayFrame.uniform(camera.width, camera.height, 200), 0.0, camera, marker, VisionParams())

def test_detect_known_pixel_offset(camera, marker):
    altitude =  7.0
    scale =     altitude / camera.f_px
    # Marker 100 px right of and 50 px above the image center.
    shifted =   MarkerGeometry(north = 50 * scale, east = 100 * scale)
    pose =      detect(render_view(camera, shifted, altitude = altitude), altitude, camera, shifted, VisionParams())
    cx, cy =    camera.center

    assert pose.x_px == approx(cx + 100, abs = 3)
    assert pose.y_px == approx(cy - 50, abs = 3)

@mark.parametrize("altitude", [5.0, 7.5, 10.0])
@mark.parametrize("north, east", [(0.0, 0.0), (0.6, -0.8), (-0.7, 0.7)])
@mark.parametrize("yaw", [0.0, radians(50), radians(-135)])
def test_detect_round_trip(camera, marker, altitude, north, east, yaw):
    pose =      detect(render_view(camera, marker, north, east, altitude, yaw), altitude, camera, marker, VisionParams())
    x, y =      project_ground_point(north, east, altitude, yaw, camera, marker.north, marker.east)

    assert pose is not None
    assert abs(pose.x_px - x) <= 3 and abs(pose.y_px - y) <= 3
    assert degrees(_angle_error_(pose.theta, yaw - marker.yaw)) <= 2

def test_detect_light_marker_on_dark_ground(camera, marker):
    frame =     render_camera(DroneState.at(0, 0, 7.0, 0.3), camera, marker, ground_luminance = 40, figure_luminance = 200)
    pose =      detect(frame, 7.0, camera, marker, VisionParams(dark_foreground = False))

    assert pose is not None and degrees(_angle_error_(pose.theta, 0.3)) <= 2

def test_detect_under_illumination_gradient(camera, marker):
    frame =     render_camera(DroneState.at(0.4, 0.2, 8.0, -1.0), camera, marker, params = RenderParams(illumination_gradient = 80.0))
    pose =      detect(frame, 8.0, camera, marker, VisionParams())
    x, y =      project_ground_point(0.4, 0.2, 8.0, -1.0, camera, 0.0, 0.0)

    assert pose is not None
    assert abs(pose.x_px - x) <= 3 and abs(pose.y_px - y) <= 3

def test_detect_with_marker_out_of_view(camera, marker):
    assert detect(render_view(camera, marker, north = 30.0), 7.0, camera, marker, VisionParams()) is None

def test_detect_keeps_frame_rate(camera, marker):
    frame =     render_view(camera, marker, 0.3, -0.2, 7.0, 0.5)
    timings =   []

    detect(frame, 7.0, camera, marker, VisionParams())

    for _ in range(15):
        start = perf_counter()
        detect(frame, 7.0, camera, marker, VisionParams())
        timings.append(perf_counter() - start)

    assert median(timings) <= 0.033

# IO ===============================================================================================

def test_pgm_file_round_trip(tmp_path, camera, marker):
    frame =     render_view(camera, marker, yaw = 1.0)
    path =      write_frame(frame, tmp_path / "frame.pgm")

    assert path.read_bytes().startswith(b"P5")
    assert read_pgm(path) == frame

def test_overlay_keeps_luminance_off_strokes(camera, marker):
    frame =     render_view(camera, marker)
    detection = analyze(frame, 7.0, camera, marker)
    image =     draw_overlay(frame, detection)

    assert image.size == (camera.width, camera.height) and image.mode == "RGB"
    assert image.getpixel((0, 0)) == (frame.data[0, 0],) * 3

def test_detection_record(camera, marker):
    record =    detection_record(analyze(render_view(camera, marker), 7.0, camera, marker), 4)
    empty =     detection_record(analyze(GrayFrame.uniform(camera.width, camera.height, 200), 7.0, camera, marker))

    assert record["frame"] == 4 and record["figures"] == ["ring", "square", "rectangle"]
    assert record["center"] == approx(list(camera.center), abs = 2)
    assert empty == {"frame": 0, "center": None, "theta": None, "figures": []}
