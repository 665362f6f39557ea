"""Exception types shared across the engine."""


class ThothError(Exception):
    """Base class for all engine errors."""


class EncodingError(ThothError, ValueError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, byte_offset: int):
        self.byte_offset = byte_offset
        super().__init__(f"invalid UTF-8 at byte offset {byte_offset}")


class InsufficientTextError(ThothError, ValueError):
    """The input has too few words or sentences for the requested operation."""


class LexiconError(ThothError, ValueError):
    """A familiarity lexicon could not be loaded."""


class ProfileError(ThothError, ValueError):
    """A reader-profile field is outside its allowed range."""


class ExtractionError(ThothError, ValueError):
    """PDF text extraction failed.

    ``reason`` is a stable machine-readable code: "corrupt", "encrypted"
    or "image_only".
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        msg = f"pdf extraction failed: {reason}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
