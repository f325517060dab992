"""Maximum Ferrers diagram rank-metric codes over finite fields."""

__version__ = "0.1.0"
