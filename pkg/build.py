#!/usr/bin/env python3
"""
Build script for the precision toolkit
Installs dependencies, runs the checks and the reproduction
"""

import os
import re
import subprocess
import sys

# pytest's closing line, e.g. "==== 2 failed, 180 passed in 41.20s ===="
PYTEST_SUMMARY = re.compile(r'^=+ .*\b(passed|failed|errors?|no tests ran)\b.* =+$')
# line prefixes of failing tests and failed reproduction checks
FAILURE_MARKS = ('FAILED ', 'ERROR ', 'FAIL  ', 'matrix mismatch:', 'reproduction FAILED', 'CommandError:')
TAIL_LINES = 15


def summarize(output, failed):
    """
    The lines worth showing for a step: on failure the failure marks plus
    pytest's summary (or the output tail when none match), otherwise only
    the summary
    """
    lines = output.splitlines()
    summary = [line for line in lines if PYTEST_SUMMARY.match(line)]
    if not failed:
        return summary
    picked = [line for line in lines if line.startswith(FAILURE_MARKS)] + summary
    return picked or lines[-TAIL_LINES:]


def run_command(command, description):
    """Run one build step; a failing step stops the build with its own exit status"""
    print(f"Running: {description}")
    print(f"Command: {' '.join(command)}")

    result = subprocess.run(command, capture_output=True, text=True)

    if result.returncode != 0:
        print(f"Error during {description} (exit {result.returncode}):")
        for line in summarize(result.stdout + result.stderr, failed=True):
            print(f"  {line}")
        sys.exit(result.returncode)
    print(f"✓ {description} completed successfully")
    for line in summarize(result.stdout, failed=False):
        print(f"  {line}")


def main():
    """Main build process"""
    print("Starting precision toolkit build...")

    # Change to backend directory
    backend_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'backend')
    os.chdir(backend_dir)
    print(f"Changed to directory: {os.getcwd()}")

    python = sys.executable
    run_command([python, '-m', 'pip', 'install', '-r', 'requirements-dev.txt'], "Installing Python dependencies")
    run_command([python, 'manage.py', 'check'], "Checking Django configuration")
    run_command([python, '-m', 'pytest'], "Running the test suite")
    run_command([python, 'manage.py', 'reproduce_paper'], "Reproducing reference values and the fig6 ordering")

    print("Build completed successfully!")


if __name__ == "__main__":
    main()
