import logging
import sys

from app.core.config import settings
from app.apis.cli import run

# --------------------------------------------------------------------------
# Logging Setup
# --------------------------------------------------------------------------
logging.basicConfig(
    level=settings.LOG_LEVEL,
    format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("fasthaar.main")


# --------------------------------------------------------------------------
# Entry Point
# --------------------------------------------------------------------------
def main() -> int:
    logger.debug("%s %s (%s)", settings.PROJECT_NAME, settings.APP_VERSION, settings.ENVIRONMENT)
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
