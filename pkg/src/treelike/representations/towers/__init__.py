from __future__ import annotations

from .atoms import *
from .completion import *
from .generators import *
from .indiscernibles import *
from .io import *
from .representation import *
from .search import *
from .trees import *
from .validation import *
