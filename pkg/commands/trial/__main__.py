"""# descensus.commands.trial.main

Single landing trial with its artifacts.
"""

from csv                import writer
from dataclasses        import astuple, fields
from json               import dumps
from logging            import Logger
from pathlib            import Path
from typing             import Any, Dict, List, Optional

from termcolor          import colored

from commands.runs      import prepare_output, RunManifest, resolve_config, write_json
from harness            import config_to_dict, run_trial, TrajectorySample, TrialConfig, TrialResult
from utilities          import get_child
from vision             import Detection, detection_record, GrayFrame, write_pgm

class Trial():
    """# Trial (Process).

    Runs one landing trial and writes trial.json, manifest.json and the optional frame, trajectory
    and detection dumps.
    """

    def __init__(self,
        config:         Optional[str] = None,
        seed:           Optional[int] = None,
        out:            str =           "out/trial",
        transport:      Optional[str] = None,
        dump_frames:    bool =          False,
        trajectory:     bool =          False,
        detections:     bool =          False,
        **kwargs
    ):
        """# Initialize Trial.

        ## Args:
            * config        (str, optional):    Configuration or manifest path.
            * seed          (int, optional):    Seed override.
            * out           (str, optional):    Output directory. Defaults to "out/trial".
            * transport     (str, optional):    Transport kind override.
            * dump_frames   (bool, optional):   Write every frame as PGM. Defaults to False.
            * trajectory    (bool, optional):   Write trajectory.csv. Defaults to False.
            * detections    (bool, optional):   Write detections.jsonl. Defaults to False.

        ## Raises:
            * ConfigurationError:   On unreadable or invalid configuration.
        """
        # Initialize logger.
        self.__logger__:    Logger =                    get_child("trial.main")

        # Resolve configuration.
        self._config_:      TrialConfig =               resolve_config(config, seed, transport)

        # Define artifact options.
        self._out_:         Path =                      Path(out)
        self._dump_frames_: bool =                      dump_frames
        self._trajectory_:  bool =                      trajectory
        self._detections_:  bool =                      detections
        self._records_:     List[Dict[str, Any]] =      []

    # METHODS ======================================================================================

    def execute(self) -> int:
        """# Execute Trial.

        ## Returns:
            * int:  Exit code; 0 on success, 2 on failure.
        """
        out:        Path =          prepare_output(self._out_)
        artifacts:  Dict[str, str] = {"result": "trial.json"}

        if self._dump_frames_:
            (out / "frames").mkdir(exist_ok = True)
            artifacts["frames"] =   "frames"

        self.__logger__.info(f"Trial with seed {self._config_.seed} over {self._config_.transport.kind} transport")

        result:     TrialResult =   run_trial(
                                        self._config_,
                                        frame_sink =        self._save_frame_ if self._dump_frames_ else None,
                                        detection_sink =    self._keep_detection_ if self._detections_ else None,
                                        record =            self._trajectory_
                                    )

        write_json(result.to_dict(), out / "trial.json")

        if self._trajectory_:
            self._write_trajectory_(result, out / "trajectory.csv")
            artifacts["trajectory"] =   "trajectory.csv"

        if self._detections_:
            (out / "detections.jsonl").write_text(
                "".join(dumps(record, sort_keys = True) + "\n" for record in self._records_), encoding = "utf-8"
            )
            artifacts["detections"] =   "detections.jsonl"

        RunManifest(
            command =       "trial",
            master_seed =   self._config_.seed,
            config =        config_to_dict(self._config_),
            arguments =     {"dump_frames": self._dump_frames_, "trajectory": self._trajectory_, "detections": self._detections_},
            artifacts =     artifacts
        ).write(out)

        self._report_(result)

        return 0 if result.success else 2

    # HELPERS ======================================================================================

    def _keep_detection_(self,
        period:     int,
        detection:  Detection
    ) -> None:
        """# Keep detection record of a period."""
        self._records_.append(detection_record(detection, period))

    def _report_(self,
        result: TrialResult
    ) -> None:
        """# Log colored outcome line."""
        if result.success:
            self.__logger__.info(colored(
                f"Seed {result.seed}: landed after {result.duration:.2f} s "
                f"(error x {result.final_err_x:+.3f} m, y {result.final_err_y:+.3f} m, theta {result.final_err_theta:+.3f} rad)",
                "green"
            ))
        else:
            self.__logger__.info(colored(f"Seed {result.seed}: failed ({result.reason.value}) after {result.duration:.2f} s", "red"))

    def _save_frame_(self,
        period: int,
        frame:  GrayFrame
    ) -> None:
        """# Write frame of a period."""
        write_pgm(frame, self._out_ / "frames" / f"frame_{period:05d}.pgm")

    @staticmethod
    def _write_trajectory_(
        result: TrialResult,
        path:   Path
    ) -> None:
        """# Write trajectory CSV."""
        with path.open("w", newline = "", encoding = "utf-8") as file:
            csv =   writer(file, lineterminator = "\n")
            csv.writerow([f.name for f in fields(TrajectorySample)])
            csv.writerows(astuple(sample) for sample in result.trajectory or [])

# Define main process driver.
def main(**kwargs) -> int:
    """# Execute Trial.

    ## Returns:
        * int:  Exit code.
    """
    return Trial(**kwargs).execute()
