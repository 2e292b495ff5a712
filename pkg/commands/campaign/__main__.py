"""# descensus.commands.campaign.main

Monte-Carlo campaign with its report files.
"""

from csv                import writer
from logging            import Logger
from pathlib            import Path
from typing             import Dict, Optional

from termcolor          import colored

from commands.runs      import prepare_output, read_manifest, RunManifest, resolve_config, write_json
from commands.tables    import ending_types_table, landing_precision_table, landing_time_table
from harness            import CampaignReport, config_to_dict, run_campaign, TrialConfig, TrialResult
from utilities          import get_child

# Report table files and their builders.
TABLES: Dict[str, callable] =   {
                                    "ending_types.txt":         ending_types_table,
                                    "landing_precision.txt":    landing_precision_table,
                                    "landing_time.txt":         landing_time_table
                                }

class Campaign():
    """# Campaign (Process).

    Runs the campaign and writes report.json, the three report tables, start_points.csv and
    manifest.json.
    """

    def __init__(self,
        config:     Optional[str] = None,
        seed:       Optional[int] = None,
        out:        str =           "out/campaign",
        transport:  Optional[str] = None,
        jobs:       int =           1,
        trials:     Optional[int] = None,
        **kwargs
    ):
        """# Initialize Campaign.

        ## Args:
            * config    (str, optional):    Configuration or manifest path.
            * seed      (int, optional):    Master seed override.
            * out       (str, optional):    Output directory. Defaults to "out/campaign".
            * transport (str, optional):    Transport kind override.
            * jobs      (int, optional):    Concurrent trials. Defaults to 1.
            * trials    (int, optional):    Number of trials. Defaults to the manifest's count, or
                                            100.

        ## Raises:
            * ConfigurationError:   On unreadable or invalid configuration.
        """
        # Initialize logger.
        self.__logger__:    Logger =        get_child("campaign.main")

        # Resolve configuration.
        self._config_:      TrialConfig =   resolve_config(config, seed, transport)

        # Repeated runs take their trial count from the manifest.
        if trials is None:
            manifest:   Optional[RunManifest] = read_manifest(config)
            trials:     int =                   manifest.arguments.get("trials", 100) if manifest is not None else 100

        # Define campaign parameters.
        self._out_:         Path =          Path(out)
        self._jobs_:        int =           jobs
        self._trials_:      int =           trials

    # METHODS ======================================================================================

    def execute(self) -> int:
        """# Execute Campaign.

        ## Returns:
            * int:  Exit code; 0 when any trial landed, 2 when all failed.

        ## Raises:
            * ValueError:   If the trial count or job count is below 1.
        """
        if self._trials_ < 1: raise ValueError(f"A campaign needs at least one trial, got {self._trials_}")

        report: CampaignReport =    run_campaign(self._config_, self._trials_, self._jobs_, on_result = self._report_trial_)
        out:    Path =              prepare_output(self._out_)

        write_json(report.to_dict(), out / "report.json")

        for name, table in TABLES.items():
            text:   str =   table(report)
            (out / name).write_text(text, encoding = "utf-8")
            self.__logger__.info("\n" + text)

        self._write_start_points_(report, out / "start_points.csv")

        RunManifest(
            command =       "campaign",
            master_seed =   self._config_.seed,
            config =        config_to_dict(self._config_),
            arguments =     {"trials": self._trials_},
            artifacts =     {
                                "report":       "report.json",
                                "start_points": "start_points.csv",
                                **{name.removesuffix(".txt"): name for name in TABLES}
                            }
        ).write(out)

        self.__logger__.info(f"Success rate {report.success_pct:.1f}% over {report.n_trials} trials; reports in {out}")

        return 0 if report.success_count > 0 else 2

    # HELPERS ======================================================================================

    def _report_trial_(self,
        index:  int,
        result: TrialResult
    ) -> None:
        """# Log colored trial line."""
        if result.success:
            self.__logger__.info(colored(f"[{index + 1}/{self._trials_}] seed {result.seed}: Success in {result.duration:.2f} s", "green"))
        else:
            self.__logger__.info(colored(f"[{index + 1}/{self._trials_}] seed {result.seed}: {result.reason.value}", "red"))

    @staticmethod
    def _write_start_points_(
        report: CampaignReport,
        path:   Path
    ) -> None:
        """# Write start points CSV (one row per trial)."""
        columns:    tuple = ("seed", "north", "east", "altitude", "yaw", "outcome")

        with path.open("w", newline = "", encoding = "utf-8") as file:
            csv =   writer(file, lineterminator = "\n")
            csv.writerow(columns)
            csv.writerows([point[column] for column in columns] for point in report.start_points)

# Define main process driver.
def main(**kwargs) -> int:
    """# Execute Campaign.

    ## Returns:
        * int:  Exit code.
    """
    return Campaign(**kwargs).execute()
