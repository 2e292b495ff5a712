"""# descensus.tests.test_protocol

Uplink and downlink codecs, input-buffer scanning and line framing.
"""

from math           import inf, nan

from numpy.random   import default_rng
from pytest         import approx, mark, raises

from protocol       import AltitudeCentimeters, AltitudeMeters, decode_altitude, encode_altitude, encode_downlink, \
                           encode_trigger, encode_uplink, Land, LineFramer, MalformedMessage, parse_downlink, \
                           parse_uplink, scan_buffer, Trigger, UplinkScanner, Velocity, YawRate

# UPLINK ===========================================================================================

@mark.parametrize("h, expected", [
    (9.87,      (b"Am09", b"Ac89")),
    (0.0,       (b"Am00", b"Ac00")),
    (12.34,     (b"Am12", b"Ac34")),
    (7.009,     (b"Am07", b"Ac00")),
    (99.999,    (b"Am99", b"Ac99"))
])
def test_encode_altitude(h, expected):
    assert encode_altitude(h) == expected

@mark.parametrize("h", [-0.01, 100.0, nan, inf])
def test_encode_altitude_rejects_out_of_range(h):
    with raises(ValueError): encode_altitude(h)

def test_centimeter_altitudes_survive_the_link():
    # 9.87 m is pinned to its published pair and skipped here.
    for centimeters in range(10000):
        if centimeters == 987: continue

        meters, remainder = map(parse_uplink, encode_altitude(centimeters / 100))
        assert decode_altitude(meters, remainder) == centimeters / 100

def test_reference_pair_decodes_to_its_own_bytes():
    meters, remainder = map(parse_uplink, encode_altitude(9.87))

    assert decode_altitude(meters, remainder) == approx(9.89)

@mark.parametrize("code, expected", [(111, b"T111"), (0, b"T000"), (999, b"T999"), (42, b"T042")])
def test_encode_trigger(code, expected):
    assert encode_trigger(code) == expected

@mark.parametrize("code", [-1, 1000])
def test_encode_trigger_rejects_out_of_range(code):
    with raises(ValueError): encode_trigger(code)

def test_encode_uplink_rejects_other_types():
    with raises(TypeError): encode_uplink(Land())

@mark.parametrize("data, expected", [
    (b"Am07",   AltitudeMeters(7)),
    ("Ac89",    AltitudeCentimeters(89)),
    (b"T111",   Trigger(111)),
    (b"T000",   Trigger(0))
])
def test_parse_uplink(data, expected):
    assert parse_uplink(data) == expected

@mark.parametrize("data", [b"Ax12", b"Am1", b"Am1x", b"X123", b"T12a", b"Am123", "Am\u00e91", b""])
def test_parse_uplink_rejects_malformed(data):
    with raises(MalformedMessage): parse_uplink(data)

def test_malformed_message_is_value_error():
    with raises(ValueError) as caught: parse_uplink(b"Zzzz")

    assert caught.value.data == b"Zzzz"

# SCANNING =========================================================================================

def test_scan_complete_pair():
    result =    scan_buffer(b"Am09Ac89")

    assert result.messages == [AltitudeMeters(9), AltitudeCentimeters(89)]
    assert (result.remainder, result.garbage) == (b"", 0)

def test_scan_resynchronizes_after_garbage():
    result =    scan_buffer(b"xxAm09Ac")

    assert result.messages == [AltitudeMeters(9)]
    assert (result.remainder, result.garbage) == (b"Ac", 2)

def test_scan_drops_hopeless_tail():
    result =    scan_buffer(b"T111Aq")

    assert result.messages == [Trigger(111)]
    assert (result.remainder, result.garbage) == (b"", 2)

def test_scanner_keeps_partial_message_between_chunks():
    scanner =   UplinkScanner()

    assert scanner.feed(b"T11") == []
    assert scanner.remainder == b"T11"
    assert scanner.feed(b"1Am0") == [Trigger(111)]
    assert scanner.feed(b"7Ac00") == [AltitudeMeters(7), AltitudeCentimeters(0)]
    assert scanner.diagnostics == {"messages": 3, "garbage_bytes": 0}

def _random_message_(rng):
    match int(rng.integers(3)):
        case 0: return AltitudeMeters(int(rng.integers(100)))
        case 1: return AltitudeCentimeters(int(rng.integers(100)))
        case _: return Trigger(int(rng.integers(1000)))

def test_scanner_round_trip_under_random_chunking():
    rng =   default_rng(4)

    for _ in range(2000):
        messages =  [_random_message_(rng) for _ in range(5)]
        # Garbage bytes between messages can never take part in a message.
        stream =    b"".join(bytes(rng.choice(list(b"xyz!#"), int(rng.integers(3))).tolist()) + encode_uplink(m) for m in messages)
        cuts =      sorted(set(int(c) for c in rng.integers(0, len(stream) + 1, int(rng.integers(0, 6)))))
        scanner =   UplinkScanner()
        received =  []

        for start, stop in zip([0] + cuts, cuts + [len(stream)]):
            received += scanner.feed(stream[start:stop])

        assert received == messages
        assert scanner.remainder == b""

# DOWNLINK =========================================================================================

@mark.parametrize("message, expected", [
    (Velocity(1.0, -0.5, 0.25),         b"v:1.000,-0.500,0.250\n"),
    (Velocity(0.00012, -0.0001, 2.0),   b"v:0.000,0.000,2.000\n"),
    (YawRate(-0.0),                     b"w:0.000\n"),
    (YawRate(1.2344),                   b"w:1.234\n"),
    (Land(),                            b"l:1\n")
])
def test_encode_downlink(message, expected):
    assert encode_downlink(message) == expected

def test_encode_downlink_rejects_non_finite():
    with raises(ValueError): encode_downlink(Velocity(nan, 0.0, 0.0))

@mark.parametrize("line, expected", [
    (b"v:1,2,3\n",              Velocity(1.0, 2.0, 3.0)),
    ("v:-0.5,+.25,1e-1\n",      Velocity(-0.5, 0.25, 0.1)),
    (b"w:-1.5e-1\n",            YawRate(-0.15)),
    (b"l:1\n",                  Land())
])
def test_parse_downlink(line, expected):
    assert parse_downlink(line) == expected

@mark.parametrize("line", [b"v:1,2\n", b"v:1,2,x\n", b"q:1\n", b"l:0\n", b"w:1", b"v:nan,1,2\n", b"w:1\n\n", b"w:\n", b"w:1e999\n"])
def test_parse_downlink_rejects_malformed(line):
    with raises(MalformedMessage): parse_downlink(line)

def test_downlink_round_trip():
    rng =   default_rng(9)

    for _ in range(500):
        vx, vy, vz, omega = rng.uniform(-5, 5, 4)
        velocity =          parse_downlink(encode_downlink(Velocity(vx, vy, vz)))

        assert (velocity.vx, velocity.vy, velocity.vz) == approx((vx, vy, vz), abs = 5e-4)
        assert parse_downlink(encode_downlink(YawRate(omega))).omega == approx(omega, abs = 5e-4)

def test_line_framer():
    framer =    LineFramer()

    assert framer.feed(b"v:1,2") == []
    assert framer.feed(b",3\nw:0") == [b"v:1,2,3\n"]
    assert framer.pending == b"w:0"
    assert framer.feed(b"\nl:1\n") == [b"w:0\n", b"l:1\n"]
    assert framer.pending == b""
