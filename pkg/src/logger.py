import logging
import os

logging.getLogger("pydot").setLevel(logging.ERROR)
logging.getLogger("pydot.core").setLevel(logging.ERROR)
# Create shortcut functions
logging.basicConfig(level=os.environ.get("OMEGAGAMES_LOG_LEVEL", "INFO").upper())
_logger = logging.getLogger("omegagames")
log = _logger.info
debug = _logger.debug
warn = _logger.warning
