"""Test suite for nakayama_ar."""
