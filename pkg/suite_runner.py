#!/usr/bin/env python3
"""
Standalone runner for the test scripts
Runs every test_* function of a module and prints a TEST SUMMARY banner.
"""

import inspect
import os
import sys
import tempfile
import time
import traceback
from pathlib import Path

import pytest


def _collect(module):
    tests = []
    for name, value in vars(module).items():
        if name.startswith("test_") and inspect.isfunction(value):
            marks = getattr(value, "pytestmark", [])
            tests.append((name, value, marks))
    tests.sort(key=lambda t: t[1].__code__.co_firstlineno)
    return tests


def _call(function):
    parameters = inspect.signature(function).parameters
    kwargs = {}
    if "tmp_path" in parameters:
        kwargs["tmp_path"] = Path(tempfile.mkdtemp(prefix="sagbi-"))
    function(**kwargs)


def run_suite(title, module):
    """
    Run a test module without pytest's collector

    Args:
        title (str): Banner title
        module: Module whose test_* functions to run

    Returns:
        bool: True when nothing failed
    """
    print("=" * 60)
    print(title)
    print("=" * 60)

    results = []
    for name, function, marks in _collect(module):
        label = name[len("test_"):].replace("_", " ")
        names = {m.name for m in marks}
        skipped = any(m.name == "skipif" and m.args and m.args[0] for m in marks)
        if skipped or ("slow" in names and os.environ.get("SAGBI_EXTENDED") != "1"):
            results.append((label, "[SKIP]", 0.0))
            continue
        start = time.time()
        try:
            _call(function)
            status = "[PASS]"
        except pytest.skip.Exception:
            status = "[SKIP]"
        except Exception:
            status = "[FAIL]"
            traceback.print_exc()
        results.append((label, status, time.time() - start))

    print("\n" + "=" * 60)
    print("TEST SUMMARY")
    print("=" * 60)
    for label, status, elapsed in results:
        print(f"{label}: {status} ({elapsed:.2f}s)")

    all_passed = all(status != "[FAIL]" for _, status, _ in results)
    print("=" * 60)
    if all_passed:
        print("ALL TESTS PASSED")
    else:
        print("SOME TESTS FAILED - CHECK ERRORS ABOVE")
    print("=" * 60)
    return all_passed


def exit_with(passed):
    sys.exit(0 if passed else 1)
