"""Collection server: config distribution, anonymous ids, submission storage."""

from .app import create_app
from .storage import StorageFailure, StoredSubmission, SubmissionStore
from .translations import (
    IncompleteTranslation,
    TranslationBundle,
    default_translations,
    load_translations,
)

__all__ = [
    "IncompleteTranslation",
    "StorageFailure",
    "StoredSubmission",
    "SubmissionStore",
    "TranslationBundle",
    "create_app",
    "default_translations",
    "load_translations",
]
