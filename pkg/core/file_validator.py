"""
File validation utilities for input strings, FASTA files and result output.

Checks are reported as typed FileValidationError records instead of raised
exceptions so that callers can decide how to surface them.
"""

import os
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple


class FileErrorType(Enum):
    """Types of file operation errors."""
    FILE_NOT_FOUND = "file_not_found"
    PERMISSION_DENIED = "permission_denied"
    IS_DIRECTORY = "is_directory"
    SYSTEM_ERROR = "system_error"
    ENCODING_ERROR = "encoding_error"
    EMPTY_FILE = "empty_file"


@dataclass
class FileValidationError:
    """Represents a file validation error."""
    error_type: FileErrorType
    file_path: str
    message: str
    details: Optional[str] = None


class FileValidator:
    """File checks shared by the CLI, the config loader and FASTA ingestion."""

    @staticmethod
    def validate_input_file(file_path: str, purpose: str = "Input", min_size: int = 0) -> List[FileValidationError]:
        """Validate a file that must exist and be readable."""
        if not file_path:
            return [FileValidationError(FileErrorType.FILE_NOT_FOUND, "", f"{purpose} file path not specified")]

        if not os.path.exists(file_path):
            return [FileValidationError(
                FileErrorType.FILE_NOT_FOUND, file_path, f"{purpose} file not found: {file_path}"
            )]

        if not os.path.isfile(file_path):
            return [FileValidationError(
                FileErrorType.IS_DIRECTORY, file_path, f"Path is a directory, not a file: {file_path}"
            )]

        if not os.access(file_path, os.R_OK):
            return [FileValidationError(
                FileErrorType.PERMISSION_DENIED, file_path, f"{purpose} file is not readable: {file_path}"
            )]

        try:
            file_size = os.path.getsize(file_path)
        except OSError as e:
            return [FileValidationError(
                FileErrorType.SYSTEM_ERROR, file_path, f"Cannot access file size: {e}", str(e)
            )]
        if file_size < min_size:
            return [FileValidationError(
                FileErrorType.EMPTY_FILE, file_path,
                f"{purpose} file is empty or too small ({file_size} bytes): {file_path}"
            )]

        return []

    @staticmethod
    def validate_output_file(file_path: str) -> List[FileValidationError]:
        """Validate that a result file can be written."""
        if os.path.exists(file_path):
            if not os.path.isfile(file_path):
                return [FileValidationError(
                    FileErrorType.IS_DIRECTORY, file_path, f"Output path is a directory, not a file: {file_path}"
                )]
            if not os.access(file_path, os.W_OK):
                return [FileValidationError(
                    FileErrorType.PERMISSION_DENIED, file_path, f"Output file is not writable: {file_path}"
                )]
            return []

        parent_dir = os.path.dirname(file_path) or '.'
        if not os.path.exists(parent_dir):
            return [FileValidationError(
                FileErrorType.FILE_NOT_FOUND, file_path, f"Output directory does not exist: {parent_dir}"
            )]
        if not os.access(parent_dir, os.W_OK):
            return [FileValidationError(
                FileErrorType.PERMISSION_DENIED, file_path, f"Output directory is not writable: {parent_dir}"
            )]
        return []

    @staticmethod
    def safe_file_read(file_path: str, purpose: str = "Input", encoding: str = 'utf-8',
                       min_size: int = 0) -> Tuple[Optional[str], List[FileValidationError]]:
        """Read a whole text file, returning (content, errors)."""
        errors = FileValidator.validate_input_file(file_path, purpose, min_size)
        if errors:
            return None, errors

        try:
            with open(file_path, 'r', encoding=encoding) as f:
                return f.read(), []
        except PermissionError:
            return None, [FileValidationError(
                FileErrorType.PERMISSION_DENIED, file_path, f"Permission denied reading file: {file_path}"
            )]
        except UnicodeDecodeError as e:
            return None, [FileValidationError(
                FileErrorType.ENCODING_ERROR, file_path, f"File encoding error in {file_path}: {e}", str(e)
            )]
        except OSError as e:
            return None, [FileValidationError(
                FileErrorType.SYSTEM_ERROR, file_path, f"System error reading {file_path}: {e}", str(e)
            )]

    @staticmethod
    def safe_file_write(file_path: str, content: str, encoding: str = 'utf-8') -> List[FileValidationError]:
        """Write a text file with '\\n' line endings, returning errors."""
        errors = FileValidator.validate_output_file(file_path)
        if errors:
            return errors

        try:
            with open(file_path, 'w', encoding=encoding, newline='\n') as f:
                f.write(content)
            return []
        except PermissionError:
            return [FileValidationError(
                FileErrorType.PERMISSION_DENIED, file_path, f"Permission denied writing to file: {file_path}"
            )]
        except OSError as e:
            return [FileValidationError(
                FileErrorType.SYSTEM_ERROR, file_path, f"System error writing to {file_path}: {e}", str(e)
            )]
