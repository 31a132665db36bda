#!/usr/bin/env python3
"""
Write the golden deals used by the portability test.

Run on a trusted build; the test compares every other build against the
frozen layouts.
"""

import argparse
import json
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.deal.dealer import deal  # noqa: E402
from src.rules.parser import load_rules  # noqa: E402

GAMES_DIR = project_root / "games"
GOLDEN_PATH = project_root / "tests" / "fixtures" / "golden_deals.json"


def main():
    """Deal the chosen games for the first seeds and store full layouts"""
    parser = argparse.ArgumentParser(description="Freeze golden deals")
    parser.add_argument("--games", nargs="+", default=["freecell", "klondike"], help="corpus game names")
    parser.add_argument("--seeds", type=int, default=10, help="seeds 1..N per game")
    parser.add_argument("--out", default=str(GOLDEN_PATH))
    args = parser.parse_args()

    golden = {}
    for game in sorted(args.games):
        rules = load_rules(str(GAMES_DIR / f"{game}.json"))
        golden[game] = {str(seed): deal(rules, seed).to_dict() for seed in range(1, args.seeds + 1)}

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as f:
        json.dump(golden, f, indent=2, sort_keys=True)
    print(f"✅ Wrote {sum(len(d) for d in golden.values())} layouts for {len(golden)} games to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
