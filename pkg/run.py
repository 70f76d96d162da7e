#!/usr/bin/env python3
"""
Quick start script for the SAGBI tools
Provides easy access to the example sessions and the test suites
"""

import os
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
SESSIONS = HERE / "sessions"

TEST_SCRIPTS = [
    "test_orders.py",
    "test_polynomials.py",
    "test_groebner.py",
    "test_subalgebra.py",
    "test_membership.py",
    "test_parser_script.py",
    "test_state.py",
    "test_cli.py",
    "test_properties.py",
    "test_acceptance.py",
]


def run_session(name, print_level=0):
    """Run one of the bundled session scripts"""
    path = SESSIONS / f"{name}.sagbi"
    if not path.exists():
        print(f"Unknown session: {name}")
        list_sessions()
        return 1
    cmd = [sys.executable, str(HERE / "sagbi_cli.py"), "--script", str(path)]
    if print_level:
        cmd += ["--print-level", str(print_level)]
    print(f"Running: {' '.join(cmd)}")
    return subprocess.run(cmd).returncode


def run_tests(extended=False):
    """Run every test script with its own summary banner"""
    env = dict(os.environ)
    if extended:
        env["SAGBI_EXTENDED"] = "1"
    failed = []
    for script in TEST_SCRIPTS:
        cmd = [sys.executable, str(HERE / script)]
        print(f"Running: {' '.join(cmd)}")
        if subprocess.run(cmd, env=env, cwd=HERE).returncode != 0:
            failed.append(script)
    if failed:
        print(f"Failed: {', '.join(failed)}")
        return 1
    return 0


def list_sessions():
    print("Sessions:")
    for path in sorted(SESSIONS.glob("*.sagbi")):
        print(f"  {path.stem}")


def show_help():
    """Show help message"""
    print("SAGBI Tools - Quick Start")
    print("=" * 40)
    print("Usage: python3 run.py [command] [argument]")
    print()
    print("Commands:")
    print("  session NAME   Run a bundled session script")
    print("  trace NAME     Run a session with progress output")
    print("  sessions       List the bundled sessions")
    print("  test           Run the test scripts")
    print("  extended       Run the test scripts including the slow examples")
    print("  help           Show this help message")
    print()
    print("Examples:")
    print("  python3 run.py session power_sums")
    print("  python3 run.py trace infinite_basis")
    print("  python3 run.py test")


def main():
    """Main function"""
    if len(sys.argv) < 2:
        show_help()
        return 0

    command = sys.argv[1].lower()

    if command in ("session", "trace"):
        if len(sys.argv) < 3:
            list_sessions()
            return 1
        return run_session(sys.argv[2], print_level=1 if command == "trace" else 0)
    if command == "sessions":
        list_sessions()
        return 0
    if command == "test":
        return run_tests()
    if command == "extended":
        return run_tests(extended=True)
    if command == "help":
        show_help()
        return 0
    print(f"Unknown command: {command}")
    show_help()
    return 1


if __name__ == "__main__":
    sys.exit(main())
