"""# descensus.protocol

Serial protocol joining the station (simulated world) and the device under test.
"""

__all__ =   [
                # Errors.
                "MalformedMessage",

                # Messages.
                "AltitudeCentimeters",
                "AltitudeMeters",
                "DownlinkMessage",
                "Land",
                "START_CODE",
                "Trigger",
                "UplinkMessage",
                "Velocity",
                "YawRate",

                # Uplink.
                "decode_altitude",
                "encode_altitude",
                "encode_trigger",
                "encode_uplink",
                "parse_uplink",

                # Scanning.
                "ScanResult",
                "UplinkScanner",
                "scan_buffer",

                # Downlink.
                "LineFramer",
                "encode_downlink",
                "parse_downlink"
            ]

from protocol.exceptions    import MalformedMessage
from protocol.messages      import *
from protocol.uplink        import decode_altitude, encode_altitude, encode_trigger, encode_uplink, parse_uplink
from protocol.scanner       import ScanResult, UplinkScanner, scan_buffer
from protocol.downlink      import LineFramer, encode_downlink, parse_downlink
