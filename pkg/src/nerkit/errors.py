"""Exception types shared across the toolkit.

Everything raised on bad data or bad configuration derives from
:class:`NerkitError`, so callers (notably the CLI) can separate usage
problems from data/model problems with one except clause.
"""

from __future__ import annotations


class NerkitError(Exception):
    """Base class for all toolkit errors."""


class CorpusError(NerkitError):
    """Base class for corpus-format errors; carries an optional file name."""

    def __init__(self, message: str, filename: str | None = None):
        super().__init__(message)
        self.message = message
        self.filename = filename

    def __str__(self) -> str:
        if self.filename:
            return f"{self.filename}: {self.message}"
        return self.message


class MalformedLine(CorpusError):
    """A non-blank data line with fewer than two fields."""

    def __init__(self, line_no: int, filename: str | None = None):
        super().__init__(f"line {line_no}: expected at least 2 fields", filename)
        self.line_no = line_no


class BadTag(CorpusError):
    """A tag field that does not match the IOB tag grammar."""

    def __init__(self, line_no: int, text: str, filename: str | None = None):
        super().__init__(f"line {line_no}: bad tag {text!r}", filename)
        self.line_no = line_no
        self.text = text


class MissingSplit(CorpusError):
    """Dataset directory has neither a usable train nor test split."""


class EmptyInput(NerkitError):
    """An operation that requires a non-empty input got an empty one."""


class LengthMismatch(NerkitError):
    """Gold and predictions disagree in shape."""

    def __init__(self, sentence_index: int):
        super().__init__(f"shape mismatch at sentence {sentence_index}")
        self.sentence_index = sentence_index


class EmptyTrainingData(NerkitError):
    """No training sentences available after dataset concatenation."""


class ConfigError(NerkitError):
    """A configuration value outside its documented range."""


class EmptySentence(NerkitError):
    """Decoding or prediction was asked for an empty token list."""


class ModelLabelMismatch(NerkitError):
    """The model's label inventory cannot score the request."""


class ModelFileError(NerkitError):
    """Base class for model (de)serialization failures."""


class VersionMismatch(ModelFileError):
    """Model file declares an unsupported format version."""

    def __init__(self, found):
        super().__init__(f"unsupported model format version {found!r} (expected 1)")
        self.found = found


class CorruptModel(ModelFileError):
    """Model file is unreadable, incomplete, or fails its checksum."""
