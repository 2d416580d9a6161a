from ratineq._core import *  # noqa: F401,F403
from ratineq._core import __doc__  # noqa: F401
