"""Run the small dense 4+2 example and print its backward error."""

from structbe.experiments import run_ex56
from structbe.fileio import format_report

if __name__ == "__main__":
    print(format_report("ex56", run_ex56()), end="")
