"""Multi-schematic oversampling for imbalanced binary data."""

from ._core import __version__, f1_score, iscore, oversample, partition, wsrt

__all__ = ["__version__", "f1_score", "iscore", "oversample", "partition", "wsrt"]
