"""
Error handling: classification, exit statuses and structured error records
"""

from .error_framework import (
    EXIT_STATUS,
    ErrorCategory,
    ErrorClassifier,
    ErrorContext,
    ErrorHandler,
    ErrorInfo,
    ExitStatus,
    StructuredLogger,
    UserMessageFormatter,
)

__all__ = [
    "EXIT_STATUS",
    "ErrorCategory",
    "ErrorClassifier",
    "ErrorContext",
    "ErrorHandler",
    "ErrorInfo",
    "ExitStatus",
    "StructuredLogger",
    "UserMessageFormatter",
]
