"""Exception hierarchy shared across the simulator pipeline."""


class LoadMonitorError(Exception):
    """Base class for all domain errors raised by loadmon."""


class NoCrossings(LoadMonitorError):
    """The signal is degenerate (zero amplitude) and never crosses zero."""


class AmplitudeBelowHysteresis(LoadMonitorError):
    """The signal never leaves the comparator dead band."""


class InsufficientEdges(LoadMonitorError):
    """Too few ZCD edges to form a period/delay measurement."""


class EmptyWindow(LoadMonitorError):
    """An RMS window with no samples (or less than one full cycle)."""


class FieldOverflow(LoadMonitorError):
    """A numeric value is too wide for its display slot."""


class MalformedCsv(LoadMonitorError):
    """A sample CSV with a bad header, row, or value."""


class NonMonotoneTicks(LoadMonitorError):
    """Sample CSV ticks are not strictly increasing."""


class UnknownAxis(LoadMonitorError):
    """A sweep was requested over a parameter that is not sweepable."""
