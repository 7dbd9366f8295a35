"""vgalg: exact computations in rook-monoid and wreath-product algebras."""

__version__ = "0.1.0"
