from __future__ import annotations

from .canonical import *
from .embedding import *
from .io import *
from .representation import *
