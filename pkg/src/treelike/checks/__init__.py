from __future__ import annotations

from .axioms import *
from .back_and_forth import *
from .base import *
from .reporter import *
from .towers import *
