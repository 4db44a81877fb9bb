class BridgeError(Exception):
    """Base class for bridge failures."""


class NoCounterfactualFound(BridgeError):
    """The explainer could not flip the prediction within its search budget."""


class IncompatibleModel(BridgeError):
    """The supplied model does not expose the probability interface."""
