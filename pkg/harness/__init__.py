"""# descensus.harness

Closes the landing loop between the simulated world (station) and the device under test over a
byte transport and a frame channel, and runs Monte-Carlo landing campaigns.
"""

__all__ =   [
                # Errors.
                "ConfigurationError",
                "LinkClosed",
                "TransportError",

                # Configuration.
                "TransportParams",
                "TrialConfig",
                "config_from_dict",
                "config_to_dict",
                "dump_config",
                "load_config",

                # Transports.
                "FrameChannel",
                "Link",
                "Transport",
                "attach_transport",
                "load_transport",
                "register_transport",

                # Actors.
                "Dut",
                "Station",

                # Trials.
                "FailureReason",
                "Outcome",
                "TrajectorySample",
                "TrialResult",
                "run_trial",
                "sample_start",

                # Campaigns.
                "CampaignReport",
                "run_campaign",
                "summarize"
            ]

# Errors.
from harness.exceptions import ConfigurationError, LinkClosed, TransportError

# Configuration.
from harness.config     import TransportParams, TrialConfig, config_from_dict, config_to_dict, dump_config, load_config

# Transports.
from harness.transports import FrameChannel, Link, Transport, attach_transport, load_transport, register_transport

# Actors.
from harness.dut        import Dut
from harness.trial      import FailureReason, Outcome, Station, TrajectorySample, TrialResult, run_trial, sample_start

# Campaigns.
from harness.campaign   import CampaignReport, run_campaign, summarize
