"""
Main script to run the patience solver.
"""

import logging
import os
import sys

from dotenv import load_dotenv

# Load environment variables before reading the log level
load_dotenv()

# Configure logging
logging.basicConfig(
    level=os.getenv("SOLVER_LOG_LEVEL", "INFO").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
