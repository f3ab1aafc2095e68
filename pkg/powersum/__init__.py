"""Equal sums of six like powers: exact constructions, curve bridges and a search oracle."""

__version__ = "0.1.0"
