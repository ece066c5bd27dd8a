# Entry point for the impart command line
# Usage: python run.py <subcommand> [options]

import sys
from pathlib import Path

# Add the project root to the Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from impart.main import main

if __name__ == "__main__":
    main()
