"""Shares logger and environment driven settings"""

import logging
import os

##########
# Logger #
##########

ctrace_logger = logging.getLogger("ctrace")
ctrace_logger.setLevel(logging.INFO)

# StreamHandler writes to stderr, stdout is reserved for reports
stream_handler = logging.StreamHandler()
stream_handler.setLevel(logging.DEBUG)

formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
stream_handler.setFormatter(formatter)

ctrace_logger.addHandler(stream_handler)

###############
# Environment #
###############

COLOR_ENV_VAR: str = "CTRACE_COLOR"


def color_enabled() -> bool:
    """ANSI styling is on unless CTRACE_COLOR=0"""

    return os.environ.get(COLOR_ENV_VAR, "1").strip() != "0"


##################
# Label literals #
##################

# Degree-0 label of a connected space
UNIT_LABEL: str = "1"
TENSOR_SEPARATOR: str = "⊗"


def is_unit_label(label: str) -> bool:
    """"1", or a Künneth product of units such as "1⊗1" """

    return all(factor == UNIT_LABEL for factor in label.split(TENSOR_SEPARATOR))
