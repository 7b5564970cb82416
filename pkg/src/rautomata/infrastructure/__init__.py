from .dot import DiagramSpec, emit_diagram, nfa_to_dot
from .fs_document_repository import DocumentNotFoundError, FsDocumentRepository, bundled_fixtures_dir
from .ra_format import format_ra, parse_ra
from .repositories import DocumentRepository
from .sm_format import format_sm, parse_sm
from .words import parse_word, parse_word_list

__all__ = [
    "DiagramSpec",
    "DocumentNotFoundError",
    "DocumentRepository",
    "FsDocumentRepository",
    "bundled_fixtures_dir",
    "emit_diagram",
    "format_ra",
    "format_sm",
    "nfa_to_dot",
    "parse_ra",
    "parse_sm",
    "parse_word",
    "parse_word_list",
]
