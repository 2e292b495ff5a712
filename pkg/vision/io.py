"""# descensus.vision.io

Frame files (binary PGM, PNG), detection overlays and per-frame detection records.
"""

__all__ = ["detection_record", "draw_overlay", "read_pgm", "write_frame", "write_pgm", "write_png"]

from math               import cos, sin
from pathlib            import Path
from typing             import Any, Dict, Union

from numpy              import asarray, uint8
from PIL                import Image, ImageDraw

from vision.detector    import Detection
from vision.frames      import GrayFrame

# Overlay stroke colors per figure.
COLORS: Dict[str, tuple] =  {
                                "ring":         (0, 200, 0),
                                "square":       (0, 120, 255),
                                "rectangle":    (255, 40, 40),
                                "pose":         (255, 200, 0)
                            }

def read_pgm(
    path:   Union[str, Path]
) -> GrayFrame:
    """# Read PGM.

    ## Args:
        * path  (str | Path):   Binary (P5) or ASCII (P2) PGM file.

    ## Returns:
        * GrayFrame:    Frame.
    """
    with Image.open(path) as image:
        return GrayFrame(asarray(image.convert("L"), dtype = uint8).copy())

def write_pgm(
    frame:  GrayFrame,
    path:   Union[str, Path]
) -> Path:
    """# Write PGM.

    ## Args:
        * frame (GrayFrame):    Frame to write.
        * path  (str | Path):   Destination; written as binary P5.

    ## Returns:
        * Path: Path written.
    """
    path:   Path =  Path(path)
    Image.fromarray(frame.data.copy()).save(path, format = "PPM")
    return path

def write_png(
    frame:  GrayFrame,
    path:   Union[str, Path]
) -> Path:
    """# Write PNG."""
    path:   Path =  Path(path)
    Image.fromarray(frame.data.copy()).save(path, format = "PNG")
    return path

def write_frame(
    frame:  GrayFrame,
    path:   Union[str, Path]
) -> Path:
    """# Write Frame, PNG or PGM by extension."""
    return write_png(frame, path) if Path(path).suffix.lower() == ".png" else write_pgm(frame, path)

def draw_overlay(
    frame:      GrayFrame,
    detection:  Detection,
    heading_px: int =       60
) -> Image.Image:
    """# Draw Detection Overlay.

    Bounding boxes of the classified figures, a cross on the marker center and a heading line along
    theta. Pixels not under a stroke keep the frame's luminance.

    ## Args:
        * frame         (GrayFrame):        Camera frame.
        * detection     (Detection):        Detection of that frame.
        * heading_px    (int, optional):    Heading line length [px]. Defaults to 60.

    ## Returns:
        * Image.Image:  RGB overlay image.
    """
    image:  Image.Image =           Image.fromarray(frame.data.copy()).convert("RGB")
    draw:   ImageDraw.ImageDraw =   ImageDraw.Draw(image)

    for name in detection.figures.found:
        draw.rectangle(getattr(detection.figures, name).bbox, outline = COLORS[name], width = 2)

    if detection.pose is not None:
        x, y =  detection.pose.x_px, detection.pose.y_px
        draw.line([(x - 8, y), (x + 8, y)], fill = COLORS["pose"], width = 2)
        draw.line([(x, y - 8), (x, y + 8)], fill = COLORS["pose"], width = 2)
        # Theta is measured with y up.
        draw.line(
            [(x, y), (x + heading_px * cos(detection.pose.theta), y - heading_px * sin(detection.pose.theta))],
            fill = COLORS["pose"], width = 2
        )

    return image

def detection_record(
    detection:  Detection,
    index:      int =       0
) -> Dict[str, Any]:
    """# Detection Record.

    ## Args:
        * detection (Detection):        Detection of one frame.
        * index     (int, optional):    Frame index. Defaults to 0.

    ## Returns:
        * Dict[str, Any]:   JSON-ready record (frame index, center, theta, figures found).
    """
    return  {
                "frame":    index,
                "center":   None if detection.pose is None else [round(detection.pose.x_px, 3), round(detection.pose.y_px, 3)],
                "theta":    None if detection.pose is None else round(detection.pose.theta, 6),
                "figures":  detection.figures.found
            }
