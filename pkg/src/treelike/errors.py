"""Exceptions raised by model operations."""

from __future__ import annotations

from typing import Any


class ModelError(Exception):
    """Raised when an operation receives input outside its domain."""

    #: The kind of object that was rejected.
    object_type: str
    #: Reason the object was rejected.
    reason: str

    def __init__(self, object_type: str, reason: str, extra_msg: str = "") -> None:
        msg = f"Invalid {object_type}: {reason}"
        if extra_msg:
            msg = f"{msg}\n\n{extra_msg}"

        super().__init__(msg)
        self.object_type = object_type
        self.reason = reason


class SignatureMismatchError(ModelError):
    """Raised when two structures over different signatures are compared."""

    #: Signature of the left-hand structure.
    left: Any
    #: Signature of the right-hand structure.
    right: Any

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(
            "structure pair",
            "signature mismatch",
            extra_msg=f"Left signature: {left}\nRight signature: {right}",
        )
        self.left = left
        self.right = right


class UnknownElementError(ModelError):
    """Raised when an element or point identifier does not exist."""

    #: The offending identifier.
    element: Any

    def __init__(self, object_type: str, element: Any, reason: str) -> None:
        super().__init__(object_type, reason, extra_msg=f"Offending element: {element!r}")
        self.element = element
