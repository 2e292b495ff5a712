"""# descensus.harness.campaign

Monte-Carlo landing campaign: independently seeded trials and their aggregate statistics.
"""

__all__ = ["CampaignReport", "run_campaign", "summarize"]

from concurrent.futures import ThreadPoolExecutor
from dataclasses        import dataclass, field, replace
from logging            import Logger
from typing             import Any, Callable, Dict, List, Optional

from numpy              import array, float64, max as np_max, mean, median, min as np_min, ndarray, sqrt

from harness.config     import TrialConfig
from harness.trial      import FailureReason, run_trial, TrialResult
from utilities          import get_child

LOGGER: Logger =    get_child("campaign")

@dataclass(frozen = True)
class CampaignReport:
    """# Campaign Report.

    Error and time statistics cover successful trials only; they are None without successes.

    ## Attributes:
        * n_trials          (int):                      Trials run.
        * success_count     (int):                      Successful trials.
        * success_pct       (float):                    Success percentage.
        * failure_counts    (Dict[str, int]):           Failures per reason.
        * mse_x             (Optional[float]):          RMS final north error [m].
        * mse_y             (Optional[float]):          RMS final east error [m].
        * mse_theta         (Optional[float]):          RMS final yaw error [rad].
        * time_mean         (Optional[float]):          Mean landing time [s].
        * time_median       (Optional[float]):          Median landing time [s].
        * time_max          (Optional[float]):          Longest landing time [s].
        * time_min          (Optional[float]):          Shortest landing time [s].
        * start_points      (List[Dict[str, Any]]):     Start state and outcome of every trial.
        * results           (List[TrialResult]):        Trial results, by index.
    """
    n_trials:       int
    success_count:  int
    success_pct:    float
    failure_counts: Dict[str, int]
    mse_x:          Optional[float]
    mse_y:          Optional[float]
    mse_theta:      Optional[float]
    time_mean:      Optional[float]
    time_median:    Optional[float]
    time_max:       Optional[float]
    time_min:       Optional[float]
    start_points:   List[Dict[str, Any]] =  field(default_factory = list)
    results:        List[TrialResult] =     field(default_factory = list)

    def __post_init__(self) -> None:
        """# Verify Report."""
        assert 0 <= self.success_count <= self.n_trials, f"Success count {self.success_count} outside [0, {self.n_trials}]"

    def to_dict(self) -> Dict[str, Any]:
        """# JSON-Ready Report."""
        return  {
                    "n_trials":         self.n_trials,
                    "success_count":    self.success_count,
                    "success_pct":      self.success_pct,
                    "failure_counts":   dict(self.failure_counts),
                    "mse_x":            self.mse_x,
                    "mse_y":            self.mse_y,
                    "mse_theta":        self.mse_theta,
                    "time_mean":        self.time_mean,
                    "time_median":      self.time_median,
                    "time_max":         self.time_max,
                    "time_min":         self.time_min,
                    "start_points":     [dict(point) for point in self.start_points],
                    "results":          [result.to_dict() for result in self.results]
                }

def _rms_(values: ndarray) -> float:
    return float(sqrt(mean(values ** 2)))

def summarize(
    results:    List[TrialResult]
) -> CampaignReport:
    """# Summarize Results.

    ## Args:
        * results   (List[TrialResult]):    Trial results, in index order.

    ## Returns:
        * CampaignReport:   Aggregate statistics.
    """
    successes:  List[TrialResult] = [result for result in results if result.success]

    failures:   Dict[str, int] =    {reason.value: 0 for reason in FailureReason}
    for result in results:
        if not result.success: failures[result.reason.value] += 1

    stats:      Dict[str, Optional[float]] =    dict.fromkeys(("mse_x", "mse_y", "mse_theta", "time_mean", "time_median", "time_max", "time_min"))

    if successes:
        errors:     ndarray =   array([[r.final_err_x, r.final_err_y, r.final_err_theta] for r in successes], dtype = float64)
        times:      ndarray =   array([r.duration for r in successes], dtype = float64)

        stats.update(
            mse_x =         _rms_(errors[:, 0]),
            mse_y =         _rms_(errors[:, 1]),
            mse_theta =     _rms_(errors[:, 2]),
            time_mean =     float(mean(times)),
            time_median =   float(median(times)),
            time_max =      float(np_max(times)),
            time_min =      float(np_min(times))
        )

    return CampaignReport(
        n_trials =          len(results),
        success_count =     len(successes),
        success_pct =       100.0 * len(successes) / len(results) if results else 0.0,
        failure_counts =    failures,
        start_points =      [{"seed": r.seed, **r.start, "outcome": r.outcome.value} for r in results],
        results =           [r.without_trajectory() for r in results],
        **stats
    )

def run_campaign(
    config:     TrialConfig,
    n:          int,
    jobs:       int =                                       1,
    on_result:  Optional[Callable[[int, TrialResult], None]] = None
) -> CampaignReport:
    """# Run Campaign.

    Trial i runs with seed config.seed + i. Results are ordered by index whatever the number of
    workers, so the report only depends on the master seed.

    ## Args:
        * config    (TrialConfig):          Configuration; its seed is the master seed.
        * n         (int):                  Number of trials.
        * jobs      (int, optional):        Worker threads. Defaults to 1.
        * on_result (Callable, optional):   Called with (index, result) in index order.

    ## Returns:
        * CampaignReport:   Aggregate statistics.

    ## Raises:
        * ValueError:   If n < 1 or jobs < 1.
    """
    if n < 1:       raise ValueError(f"A campaign needs at least one trial, got {n}")
    if jobs < 1:    raise ValueError(f"Jobs must be at least 1, got {jobs}")

    # A physically attached device serves one trial at a time.
    if config.transport.kind == "serial" and jobs > 1:
        LOGGER.warning("Serial transport runs trials sequentially")
        jobs =  1

    configs:    List[TrialConfig] = [replace(config, seed = config.seed + index) for index in range(n)]
    results:    List[TrialResult] = []

    LOGGER.info(f"Running {n} trials from master seed {config.seed} on {jobs} worker(s)")

    with ThreadPoolExecutor(max_workers = jobs, thread_name_prefix = "trial") as pool:

        for index, result in enumerate(pool.map(run_trial, configs)):
            results.append(result)
            if on_result is not None: on_result(index, result)

    return summarize(results)
