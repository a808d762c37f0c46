class LexiconError(Exception):
    """Bad lexicon source, or a word the lexicon does not define."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
