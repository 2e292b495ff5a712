"""# descensus.vision

Landing-marker detection running on the device under test: grayscale conversion, Gaussian blur,
tiled adaptive threshold, connected-component labeling, figure classification and pose estimation.
"""

__all__ =   [
                # Frames.
                "BinaryFrame",
                "GrayFrame",
                "to_grayscale",

                # Stages.
                "BlobStats",
                "FigureSet",
                "MarkerPose",
                "SizeExpectation",
                "TileGrid",
                "adaptive_threshold",
                "classify_figures",
                "estimate_pose",
                "expected_sizes",
                "gaussian_blur",
                "label_components",
                "threshold_surface",
                "tile_means",

                # Pipeline.
                "Detection",
                "VisionParams",
                "analyze",
                "detect",

                # IO.
                "detection_record",
                "draw_overlay",
                "read_pgm",
                "write_frame",
                "write_pgm",
                "write_png"
            ]

# Frames (needed by the simulated world's renderer; imported first).
from vision.frames      import BinaryFrame, GrayFrame, to_grayscale

# Stages.
from vision.filters     import gaussian_blur
from vision.threshold   import TileGrid, adaptive_threshold, threshold_surface, tile_means
from vision.labeling    import BlobStats, label_components
from vision.figures     import FigureSet, SizeExpectation, classify_figures, expected_sizes
from vision.pose        import MarkerPose, estimate_pose

# Pipeline.
from vision.detector    import Detection, VisionParams, analyze, detect

# IO.
from vision.io          import detection_record, draw_overlay, read_pgm, write_frame, write_pgm, write_png
