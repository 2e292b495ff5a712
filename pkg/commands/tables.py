"""# descensus.commands.tables

Plain-text campaign tables: ending types, landing precision and landing time.
"""

__all__ = ["ending_types_table", "format_table", "landing_precision_table", "landing_time_table"]

from typing             import List, Optional, Sequence

from harness            import CampaignReport

def _number_(
    value:  Optional[float],
    digits: int
) -> str:
    return "n/a" if value is None else f"{value:.{digits}f}"

def format_table(
    title:      str,
    headers:    Sequence[str],
    rows:       Sequence[Sequence[str]]
) -> str:
    """# Format Table.

    Aligned ASCII box: first column left-aligned, the others right-aligned.

    ## Args:
        * title     (str):                      Caption printed above the box.
        * headers   (Sequence[str]):            Column headers.
        * rows      (Sequence[Sequence[str]]):  Cell text, one sequence per row.

    ## Returns:
        * str:  Table text ending with a newline.
    """
    widths: List[int] = [max(len(str(cell)) for cell in column) for column in zip(headers, *rows)]
    rule:   str =       "+" + "+".join("-" * (width + 2) for width in widths) + "+"

    def line(cells: Sequence[str]) -> str:
        return "| " + " | ".join(
            str(cell).ljust(width) if index == 0 else str(cell).rjust(width)
            for index, (cell, width) in enumerate(zip(cells, widths))
        ) + " |"

    return "\n".join([title, rule, line(headers), rule, *map(line, rows), rule]) + "\n"

def ending_types_table(
    report: CampaignReport
) -> str:
    """# Ending Types.

    Successes and failures over the campaign, failures also broken down by reason.
    """
    rows:   List[List[str]] =   [
                                    ["Success", str(report.success_count)],
                                    ["Failure", str(report.n_trials - report.success_count)]
                                ]
    rows += [[f"  {reason}", str(count)] for reason, count in report.failure_counts.items()]

    return format_table(f"Ending types ({report.n_trials} trials)", ["Ending", "Count"], rows)

def landing_precision_table(
    report: CampaignReport
) -> str:
    """# Landing Precision (RMS final error over successful landings)."""
    return format_table(
        f"Landing precision ({report.success_count} successful landings)",
        ["Axis", "RMS error"],
        [
            ["x [m]",       _number_(report.mse_x,     4)],
            ["y [m]",       _number_(report.mse_y,     4)],
            ["theta [rad]", _number_(report.mse_theta, 4)]
        ]
    )

def landing_time_table(
    report: CampaignReport
) -> str:
    """# Landing Time (successful landings)."""
    return format_table(
        f"Landing time ({report.success_count} successful landings)",
        ["Statistic", "Time [s]"],
        [
            ["Mean",    _number_(report.time_mean,   2)],
            ["Median",  _number_(report.time_median, 2)],
            ["Max",     _number_(report.time_max,    2)],
            ["Min",     _number_(report.time_min,    2)]
        ]
    )
