"""Tests for dirac_landau_verify."""
