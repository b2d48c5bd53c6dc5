"""
Entry point for the Sombor index toolkit.
"""

import logging
import sys

from dotenv import load_dotenv

# Load environment variables FIRST
load_dotenv()

from settings import RuntimeSettings

startup_error = None
try:
    log_level = RuntimeSettings.from_env().log_level
except ValueError as e:
    log_level, startup_error = "INFO", str(e)

# Logs go to stderr so stdout carries only the report
logging.basicConfig(
    level=getattr(logging, log_level),
    stream=sys.stderr,
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)
logger = logging.getLogger(__name__)

from cli import main


if __name__ == "__main__":
    if startup_error:
        logger.error(f"❌ {startup_error}")
        sys.exit(2)
    sys.exit(main())
