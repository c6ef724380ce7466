"""Classification and verification toolkit for H-free edge modification."""

__version__ = "0.1.0"
