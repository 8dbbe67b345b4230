"""Gallery knots in the B3-tilde Coxeter tessellation."""

__version__ = "0.1.0"
