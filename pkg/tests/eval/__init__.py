"""Tests for eval framework."""
