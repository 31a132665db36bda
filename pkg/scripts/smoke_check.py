#!/usr/bin/env python3
"""
Smoke check that the solver is installed and the game corpus is usable
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from dotenv import load_dotenv  # noqa: E402

GAMES_DIR = project_root / "games"


def check_imports():
    """Check that all solver packages can be imported"""
    try:
        from src.cli.main import main  # noqa: F401
        from src.search.solver import solve  # noqa: F401
        from src.stats.report import summary_table  # noqa: F401
        print("✅ All imports successful")
        return True
    except ImportError as e:
        print(f"❌ Import error: {e}")
        return False


def check_corpus():
    """Check that every shipped rules file parses and validates"""
    from src.exceptions import SolverError
    from src.rules.parser import load_rules
    from src.rules.validation import validate

    bad = []
    files = sorted(GAMES_DIR.glob("*.json"))
    for path in files:
        try:
            diagnostics = validate(load_rules(str(path)))
        except SolverError as e:
            bad.append(f"{path.name}: {e}")
            continue
        bad.extend(f"{path.name}: {d}" for d in diagnostics)

    if bad:
        print(f"❌ {len(bad)} problem(s) in the rules corpus:")
        for line in bad:
            print(f"   {line}")
        return False
    print(f"✅ {len(files)} rules files valid")
    return True


def check_solve():
    """Solve a few reduced Freecell deals and replay the solutions"""
    from src.deal.dealer import deal
    from src.rules.parser import load_rules
    from src.rules.validation import reduced_rules
    from src.search.dfs import SearchLimits, Verdict
    from src.search.solver import solve, verify_solution

    try:
        rules = reduced_rules(load_rules(str(GAMES_DIR / "freecell.json")), 4)
        for seed in range(1, 6):
            layout = deal(rules, seed)
            outcome = solve(rules, layout, SearchLimits(time_s=30))
            if outcome.verdict == Verdict.WINNABLE and not verify_solution(rules, layout, outcome.solution):
                print(f"❌ Seed {seed}: solution does not replay")
                return False
        print("✅ Reduced deals solved and verified")
        return True
    except Exception as e:
        print(f"❌ Solve failed: {e}")
        return False


def main():
    """Run all checks"""
    print("Running solver smoke checks...\n")

    load_dotenv()

    checks = [check_imports, check_corpus, check_solve]

    passed = 0
    total = len(checks)

    for check in checks:
        if check():
            passed += 1
        print()

    print(f"Checks passed: {passed}/{total}")

    if passed == total:
        print("🎉 All checks passed! Ready for batch runs.")
        return 0
    else:
        print("❌ Some checks failed. Please fix issues before running batches.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
