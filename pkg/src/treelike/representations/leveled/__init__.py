from __future__ import annotations

from .diagram import *
from .enumeration import *
from .extension import *
from .generators import *
from .io import *
from .level_tree import *
from .points import *
