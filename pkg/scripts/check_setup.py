#!/usr/bin/env python3
"""
Setup verification script for curve-birationality.
Checks that dependencies are installed, the ledger works, and the worked
examples classify as expected.
"""

import subprocess
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

WORKED_EXAMPLES = [
    (("t^3", "t^2 + t"), "BirationalNotIsomorphism"),
    (("t", "t^2", "t^3"), "Isomorphism"),
    (("2*t^8 + t^4 + 3*t + 1", "t^4 - 2*t^2 + 2"), "BirationalNotIsomorphism"),
    (("t^10 + t^4", "t^8 + 2*t^2", "t^6 - t^4 + 1"), "NotBirational"),
]


def check_python_version():
    """Check if Python version is 3.12 or higher."""
    return sys.version_info >= (3, 12)


def check_dependencies():
    """Check if all required dependencies are available."""
    required_packages = ["sqlalchemy", "dotenv", "pydantic", "alembic"]

    missing = []
    for package in required_packages:
        try:
            __import__(package)
        except ImportError:
            missing.append(package)

    if missing:
        print(f"  missing packages: {', '.join(missing)}")
    return not missing


def check_ledger():
    """Check that a run can be recorded in an in-memory ledger."""
    try:
        from src.curve_birationality.models import (
            create_engine_and_session,
            init_database,
        )
        from src.curve_birationality.reports import RunConfig
        from src.curve_birationality.services import LedgerService, classify_texts

        engine, SessionLocal = create_engine_and_session("sqlite:///:memory:")
        init_database(engine)
        cfg = RunConfig(subcommand="classify", polys=("t^3", "t^2 + t"))
        with SessionLocal() as session:
            ledger = LedgerService(session)
            ledger.record_report(classify_texts(cfg, cfg.polys))
            return ledger.get_run_count() == 1
    except Exception as e:
        print(f"  ledger check failed: {e}")
        return False


def check_worked_examples():
    """Classify the four worked examples end to end."""
    from src.curve_birationality.reports import RunConfig
    from src.curve_birationality.services import classify_texts

    ok = True
    for polys, expected in WORKED_EXAMPLES:
        report = classify_texts(RunConfig(subcommand="classify", polys=polys), polys)
        if report.classification != expected:
            print(f"  {'; '.join(polys)}: got {report.classification}, expected {expected}")
            ok = False
    return ok


def run_tests():
    """Run the test suite."""
    try:
        result = subprocess.run(
            [sys.executable, "-m", "pytest", "-q", "tests/"],
            check=False,
            capture_output=True,
            text=True,
            cwd=Path(__file__).parent.parent,
        )
        return result.returncode == 0
    except Exception:
        return False


def main():
    """Main setup verification function."""
    checks = [
        check_python_version,
        check_dependencies,
        check_ledger,
        check_worked_examples,
        run_tests,
    ]

    passed = 0
    for check in checks:
        ok = check()
        print(f"[{'ok' if ok else 'FAIL'}] {check.__doc__}")
        passed += ok

    print(f"{passed}/{len(checks)} checks passed")
    if passed != len(checks):
        sys.exit(1)


if __name__ == "__main__":
    main()
