"""Run the 4x4 ill-scaled Toeplitz example and print its backward errors."""

from structbe.experiments import run_ex71
from structbe.fileio import format_report

if __name__ == "__main__":
    print(format_report("ex71", run_ex71()), end="")
