from __future__ import annotations

from .encoding import *
from .experiments import *
from .perms import *
