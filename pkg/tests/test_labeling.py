"""# descensus.tests.test_labeling

Connected-component labeling against a flood-fill reference.
"""

from collections    import deque
from itertools      import product

from numpy          import array, bool_, zeros
from numpy.random   import default_rng
from pytest         import approx, mark

from vision         import BinaryFrame, label_components

NEIGHBORS:  dict =  {
                        4: [(-1, 0), (1, 0), (0, -1), (0, 1)],
                        8: [(dy, dx) for dy in (-1, 0, 1) for dx in (-1, 0, 1) if (dy, dx) != (0, 0)]
                    }

def _flood_fill_(mask, connectivity: int = 8) -> list:
    """Components in raster first-encounter order, as (area, (cx, cy), bbox, (mu20, mu02, mu11))."""
    height, width = mask.shape
    seen =          zeros(mask.shape, dtype = bool_)
    components =    []

    for y, x in product(range(height), range(width)):
        if not mask[y, x] or seen[y, x]: continue

        pixels, queue = [], deque([(y, x)])
        seen[y, x] =    True

        while queue:
            py, px =    queue.popleft()
            pixels.append((px, py))

            for dy, dx in NEIGHBORS[connectivity]:
                ny, nx = py + dy, px + dx
                if 0 <= ny < height and 0 <= nx < width and mask[ny, nx] and not seen[ny, nx]:
                    seen[ny, nx] = True
                    queue.append((ny, nx))

        n =         len(pixels)
        cx =        sum(p[0] for p in pixels) / n
        cy =        sum(p[1] for p in pixels) / n
        components.append((
            n,
            (cx, cy),
            (min(p[0] for p in pixels), min(p[1] for p in pixels), max(p[0] for p in pixels), max(p[1] for p in pixels)),
            (
                sum((p[0] - cx) ** 2 for p in pixels) / n,
                sum((p[1] - cy) ** 2 for p in pixels) / n,
                sum((p[0] - cx) * (p[1] - cy) for p in pixels) / n
            )
        ))

    return components

def _assert_matches_reference_(mask, connectivity: int = 8) -> None:
    blobs =     label_components(BinaryFrame(mask), connectivity)
    expected =  _flood_fill_(mask, connectivity)

    assert [blob.label for blob in blobs] == list(range(1, len(expected) + 1))
    assert sum(blob.area for blob in blobs) == int(mask.sum())

    for blob, (area, centroid, bbox, moments) in zip(blobs, expected):
        assert blob.area == area
        assert blob.bbox == bbox
        assert blob.centroid == approx(centroid, abs = 1e-9)
        assert (blob.mu20, blob.mu02, blob.mu11) == approx(moments, abs = 1e-9)

def test_empty_frame_has_no_components():
    assert label_components(BinaryFrame(zeros((16, 16), dtype = bool_))) == []

def test_single_block_statistics():
    mask =              zeros((32, 32), dtype = bool_)
    mask[10:13, 10:13] = True
    blob, =             label_components(BinaryFrame(mask))

    assert (blob.label, blob.area, blob.centroid, blob.bbox) == (1, 9, (11.0, 11.0), (10, 10, 12, 12))
    assert blob.fill_ratio == 1.0
    assert blob.axes == approx((3.0, 3.0))

def test_diagonal_pixels_depend_on_connectivity():
    mask =  array([[1, 0], [0, 1]], dtype = bool_)

    assert len(label_components(BinaryFrame(mask), 8)) == 1
    assert len(label_components(BinaryFrame(mask), 4)) == 2

def test_labels_follow_raster_order():
    # The right-hand blob starts on an earlier row than the left-hand one.
    mask =          zeros((10, 10), dtype = bool_)
    mask[5:9, 1:3] = True
    mask[2:4, 7:9] = True
    first, second = label_components(BinaryFrame(mask))

    assert first.bbox == (7, 2, 8, 3) and second.bbox == (1, 5, 2, 8)

def test_rectangle_orientation_and_axes():
    mask =              zeros((40, 40), dtype = bool_)
    mask[5:35, 18:22] = True
    blob, =             label_components(BinaryFrame(mask))

    assert blob.axes == approx((30.0, 4.0))
    assert abs(blob.orientation) == approx(1.5707963267948966)

@mark.parametrize("connectivity", [4, 8])
def test_every_3x3_frame_matches_reference(connectivity):
    for bits in range(512):
        _assert_matches_reference_(array([(bits >> i) & 1 for i in range(9)], dtype = bool_).reshape(3, 3), connectivity)

@mark.parametrize("density", [0.2, 0.45, 0.6])
def test_random_frames_match_reference(density):
    rng =   default_rng(int(density * 100))

    for _ in range(20):
        _assert_matches_reference_(rng.random((64, 64)) < density)

@mark.slow
def test_many_random_frames_match_reference():
    rng =   default_rng(1000)

    for _ in range(1000):
        _assert_matches_reference_(rng.random((64, 64)) < rng.uniform(0.1, 0.7), int(rng.choice([4, 8])))
