class BridgeError(Exception):
    """Base class for bridge failures."""


class ModelLoadError(BridgeError):
    """A configured model backend could not be loaded. Names the model id."""


class UsageError(BridgeError):
    """Caller error (empty input text, bad arguments)."""
