"""Test suite for vgalg."""
