"""The ``.dicat`` definition language: parse, print and elaborate."""
from .elaborate import ElaborationError, Workspace, elaborate, load
from .syntax import Document, DslError, ParseError, Span, parse, show

__all__ = ["Document", "DslError", "ElaborationError", "ParseError", "Span", "Workspace", "elaborate", "load",
           "parse", "show"]
