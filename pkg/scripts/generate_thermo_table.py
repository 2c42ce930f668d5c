"""Regenerate the bundled thermochemistry table and its checksum with NASA CEA.

Needs rocketcea. Changing the grid or the CEA inputs means bumping
TABLE_NAME and the calibration version.
"""

import argparse
import logging
from pathlib import Path

from rlvopt.propellants.cea import write_table
from rlvopt.propellants.thermo import TABLE_NAME


def main():
    logging.basicConfig(level=logging.INFO, force=True)
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--output_dir",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "rlvopt" / "propellants" / "data",
        help="Directory receiving the table and its .sha256",
    )
    args = parser.parse_args()
    args.output_dir.mkdir(parents=True, exist_ok=True)
    write_table(args.output_dir, TABLE_NAME)


if __name__ == "__main__":
    main()
