"""Exception types raised across the package."""


class ChandasError(ValueError):
    """Base class for all errors raised by chandas."""


# --- text processing -------------------------------------------------------

class UndetectableScheme(ChandasError):
    pass


class InvalidSequence(ChandasError):
    def __init__(self, position: int, reason: str = "orphan combining mark"):
        self.position = position
        super().__init__(f"{reason} at position {position}")


class NoVowelFound(ChandasError):
    pass


class UnmappableCharacter(UserWarning):
    """Warning category for characters passed through verbatim."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"unmappable character {char!r} at position {position}")


# --- metrical database -----------------------------------------------------

class UnknownGanaLetter(ChandasError):
    def __init__(self, position: int, letter: str = ""):
        self.position = position
        self.letter = letter
        super().__init__(f"unknown gana letter {letter!r} at position {position}")


class MalformedRow(ChandasError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class InconsistentRow(MalformedRow):
    pass


# --- matching --------------------------------------------------------------

class EmptySignature(ChandasError):
    pass


class OpsOutOfRange(ChandasError):
    pass


class EmptyVerse(ChandasError):
    pass


# --- cli -------------------------------------------------------------------

class FileUnreadable(ChandasError):
    pass


class ConfigError(ChandasError):
    pass
