"""Text documents, the command dispatcher and the ``catcomp`` entry point."""

from catcomp.cli.commands import COMMANDS, EXIT_ERROR, EXIT_LAW_FAILED, EXIT_OK, Check, Report, RunFlags, Status, run
from catcomp.cli.documents import Document, DocumentKind, parse_document, parse_documents, serialize_document, serialize_documents
from catcomp.cli.main import main
from catcomp.cli.workspace import Workspace

__all__ = [
    "COMMANDS",
    "EXIT_ERROR",
    "EXIT_LAW_FAILED",
    "EXIT_OK",
    "Check",
    "Document",
    "DocumentKind",
    "Report",
    "RunFlags",
    "Status",
    "Workspace",
    "main",
    "parse_document",
    "parse_documents",
    "run",
    "serialize_document",
    "serialize_documents",
]
